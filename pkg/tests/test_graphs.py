import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from odlab.generators import complete_graph, cycle_graph, path_graph, random_graph
from odlab.graphs import (
    ArcVertex,
    Digraph,
    Graph,
    line_digraph,
    parse_graph,
    parse_digraph,
    serialize_digraph,
    serialize_graph,
    underlying_graph,
)


def small_graphs():
    return st.integers(2, 7).flatmap(
        lambda n: st.integers(0, 10**9).map(lambda s: random_graph(n, 0.5, s))
    )


def test_graph_basics():
    g = Graph([1, 2, 3], [(1, 2), (3, 2)])
    assert g.n == 3 and g.m == 2
    assert g.edges == ((1, 2), (2, 3))
    assert g.neighbors(2) == (1, 3)
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        Graph([1, 1], [])
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 3)])


def test_line_digraph_k2():
    d = line_digraph(complete_graph(2))
    assert d.n == 2 and d.m == 2
    a, b = d.vertices
    assert (a.tail, a.head) == (1, 2) and (b.tail, b.head) == (2, 1)
    assert d.has_arc(a, b) and d.has_arc(b, a)


def test_line_digraph_path_underlying_is_c4():
    # x-y-z gives arcs xy, yx, yz, zy; ignoring directions yields a 4-cycle
    h = underlying_graph(line_digraph(path_graph(3)))
    assert h.n == 4 and h.m == 4
    assert all(h.degree(v) == 2 for v in h.vertices)
    xy = ArcVertex(1, 2)
    assert h.has_edge(xy, ArcVertex(2, 3)) and h.has_edge(xy, ArcVertex(2, 1))
    assert not h.has_edge(xy, ArcVertex(3, 2))


def test_line_digraph_c5():
    d = line_digraph(cycle_graph(5))
    assert d.n == 10
    assert d.m == sum(cycle_graph(5).degree(v) ** 2 for v in cycle_graph(5).vertices) == 20
    for a in d.vertices:
        assert len(d.out_neighbors(a)) == 2


def test_underlying_of_two_cycle():
    d = Digraph(["a", "b"], [("a", "b"), ("b", "a")])
    g = underlying_graph(d)
    assert g.m == 1 and g.has_edge("a", "b")


@given(small_graphs())
@settings(max_examples=30, deadline=None)
def test_line_digraph_counts_and_adjacency(g):
    d = line_digraph(g)
    assert d.n == 2 * g.m
    h = underlying_graph(d)
    for a, b2 in itertools.combinations(h.vertices, 2):
        expect = a.head == b2.tail or b2.head == a.tail
        assert h.has_edge(a, b2) == expect


@given(small_graphs())
@settings(max_examples=30, deadline=None)
def test_line_digraph_respects_relabeling(g):
    perm = {v: g.n + 1 - v for v in g.vertices}
    g2 = random_graph(g.n, 0.0, 0)  # placeholder shape, rebuilt below
    g2 = g.relabel(perm)
    h1 = underlying_graph(line_digraph(g))
    h2 = underlying_graph(line_digraph(g2))
    # the induced map on arcs is an isomorphism
    for a, b2 in itertools.combinations(h1.vertices, 2):
        fa = ArcVertex(perm[a.tail], perm[a.head])
        fb = ArcVertex(perm[b2.tail], perm[b2.head])
        assert h1.has_edge(a, b2) == h2.has_edge(fa, fb)


def test_complement_examples():
    assert complete_graph(4).complement().m == 0
    c5 = cycle_graph(5)
    cc = c5.complement()
    assert cc.edges == ((1, 3), (1, 4), (2, 4), (2, 5), (3, 5))
    # the distance-2 pairs again form a 5-cycle: 1-3-5-2-4-1
    assert all(cc.degree(v) == 2 for v in cc.vertices)


@given(small_graphs())
@settings(max_examples=30, deadline=None)
def test_complement_involution(g):
    assert g.complement().complement() == g


def test_parse_k2():
    g = parse_graph("p edge 2 1\ne 1 2\n")
    assert g == complete_graph(2)


def test_parse_comments_and_roundtrip():
    text = "c a comment\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"
    g = parse_graph(text)
    assert g == cycle_graph(5)
    assert parse_graph(serialize_graph(g)) == g
    assert serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g)


def test_parse_errors_and_warnings():
    with pytest.raises(ValueError, match="loop"):
        parse_graph("p edge 2 1\ne 1 1\n")
    with pytest.raises(ValueError, match="out of range"):
        parse_graph("p edge 2 1\ne 1 3\n")
    with pytest.raises(ValueError, match="malformed header"):
        parse_graph("p edges 2 1\ne 1 2\n")
    with pytest.raises(ValueError, match="problem line"):
        parse_graph("e 1 2\n")
    with pytest.warns(UserWarning, match="duplicate edge"):
        g = parse_graph("p edge 2 2\ne 1 2\ne 2 1\n")
    assert g.m == 1


def test_digraph_roundtrip():
    d = parse_digraph("p arc 3 2\na 1 2\na 2 1\n")
    assert d.has_arc(1, 2) and d.has_arc(2, 1) and not d.has_arc(1, 3)
    assert parse_digraph(serialize_digraph(d)) == d


def test_arcvertex_str():
    assert str(ArcVertex(3, 7)) == "3>7"
