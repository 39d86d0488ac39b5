"""Exact chromatic number, coloring verification, and the constructive
coloring transfer between a graph G and the underlying graph H of its
line digraph.

The solver is branch-and-bound: DSATUR vertex selection, a greedy clique
for the lower bound and as a pre-colored seed, iterative deepening on k,
and an ascending-new-color symmetry break.  All tie-breaking is by vertex
index, so the returned witness is deterministic.  Budgets are node counts
(deterministic), and exceeding one raises instead of returning a bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded, GuardExceeded
from .graphs import ArcVertex, Graph

# A homomorphism is a plain dict: source vertex -> target vertex.
Homomorphism = dict


@dataclass
class Coloring:
    """A total vertex -> color map with colors in [0, palette)."""

    assignment: dict
    palette: int


def b(n: int) -> int:
    """Central binomial coefficient binom(n, floor(n/2)), exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(n, n // 2)


def inverse_b(chi: int) -> int:
    """Smallest n >= 0 with chi <= b(n)."""
    if chi < 0:
        raise ValueError("chi must be nonnegative")
    n = 0
    while b(n) < chi:
        n += 1
    return n


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff every vertex is colored within the palette and every edge
    is bichromatic."""
    a = coloring.assignment
    for v in g.vertices:
        c = a.get(v)
        if c is None or not (0 <= c < coloring.palette):
            return False
    return all(a[u] != a[v] for u, v in g.edges)


def greedy_clique(g: Graph) -> tuple:
    """A maximal clique found greedily from each seed vertex in index
    order; returns the largest one (a valid chromatic lower bound)."""
    best: tuple = ()
    if g.n == 0:
        return best
    for seed in g.vertices:
        clique = [seed]
        cand = [v for v in g.neighbors(seed)]
        while cand:
            # candidate with the most neighbors among the rest (ties: lowest index)
            pick = max(cand, key=lambda v: (sum(1 for u in cand if g.has_edge(u, v)), -g.index(v)))
            clique.append(pick)
            cand = [v for v in cand if v != pick and g.has_edge(v, pick)]
        if len(clique) > len(best):
            best = tuple(sorted(clique, key=g.index))
    return best


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy DSATUR coloring; an upper bound, proper by construction."""
    n = g.n
    if n == 0:
        return Coloring({}, 0)
    verts = g.vertices
    adj = [[g.index(u) for u in g.neighbors(v)] for v in verts]
    color = [-1] * n
    satur = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        v = max(
            (i for i in range(n) if color[i] < 0),
            key=lambda i: (len(satur[i]), len(adj[i]), -i),
        )
        c = 0
        while c in satur[v]:
            c += 1
        color[v] = c
        used = max(used, c + 1)
        for u in adj[v]:
            if color[u] < 0:
                satur[u].add(c)
    return Coloring({verts[i]: color[i] for i in range(n)}, used)


def find_k_coloring(g: Graph, k: int, *, node_limit: Optional[int] = None) -> Optional[Coloring]:
    """A proper k-coloring of g, or None after exhaustive search.

    Complete: pre-coloring a greedy clique and introducing new color
    indices in ascending order only discard colorings that are color
    permutations of explored ones.
    """
    n = g.n
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n == 0:
        return Coloring({}, k)
    if k == 0:
        return None
    verts = g.vertices
    adj = [[g.index(u) for u in g.neighbors(v)] for v in verts]
    clique = greedy_clique(g)
    if len(clique) > k:
        return None

    color = [-1] * n
    satur = [set() for _ in range(n)]
    for c, v in enumerate(clique):
        i = g.index(v)
        color[i] = c
        for u in adj[i]:
            if color[u] < 0:
                satur[u].add(c)
    nodes = 0

    def backtrack(colored: int, used: int) -> bool:
        nonlocal nodes
        if colored == n:
            return True
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise BudgetExceeded(f"k-coloring search exceeded {node_limit} nodes")
        v = max(
            (i for i in range(n) if color[i] < 0),
            key=lambda i: (len(satur[i]), len(adj[i]), -i),
        )
        for c in range(min(k, used + 1)):
            if c in satur[v]:
                continue
            color[v] = c
            touched = []
            for u in adj[v]:
                if color[u] < 0 and c not in satur[u]:
                    satur[u].add(c)
                    touched.append(u)
            if backtrack(colored + 1, max(used, c + 1)):
                return True
            color[v] = -1
            for u in touched:
                satur[u].discard(c)
        return False

    if backtrack(len(clique), len(clique)):
        return Coloring({verts[i]: color[i] for i in range(n)}, k)
    return None


def chromatic_number(
    g: Graph, *, max_vertices: int = 80, node_limit: Optional[int] = None
) -> tuple[int, Coloring]:
    """Exact chromatic number with a proper witness coloring.

    Minimality holds by exhausted search below the answer, except when the
    greedy clique already matches it (a clique is an equally exact
    certificate).  Raises GuardExceeded/BudgetExceeded rather than ever
    returning a wrong bound.
    """
    if g.n > max_vertices:
        raise GuardExceeded(f"graph has {g.n} > {max_vertices} vertices")
    if g.n == 0:
        return 0, Coloring({}, 0)
    if g.m == 0:
        return 1, Coloring({v: 0 for v in g.vertices}, 1)
    lb = max(2, len(greedy_clique(g)))
    upper = dsatur_coloring(g)
    if upper.palette == lb:
        return lb, upper
    for k in range(lb, upper.palette):
        col = find_k_coloring(g, k, node_limit=node_limit)
        if col is not None:
            return k, col
    return upper.palette, upper


# ---------------------------------------------------------------------------
# coloring transfer along G -> H = underlying(line_digraph(G))

def _arc_vertices(g: Graph) -> list:
    return [ArcVertex(x, y) for x in g.vertices for y in g.neighbors(x)]


def lift_coloring_to_line(g: Graph, coloring: Coloring, n: int) -> Coloring:
    """Turn a proper coloring of g with at most b(n) colors into a proper
    n-coloring of H.

    Colors are identified with the floor(n/2)-subsets of [n] in
    lexicographic order; the arc (x, y) is colored by the least element of
    A_{c(x)} \\ A_{c(y)}.  Adjacent H-vertices share their middle G-vertex,
    whose subset contains exactly one of the two chosen elements, so the
    coloring is proper.
    """
    if not verify_coloring(g, coloring):
        raise ValueError("input coloring is not a proper coloring of g")
    if coloring.palette > b(n):
        raise ValueError(f"palette {coloring.palette} exceeds b({n}) = {b(n)}")
    subsets = [frozenset(a) for a in itertools.combinations(range(1, n + 1), n // 2)]
    assign = {}
    c = coloring.assignment
    for arc in _arc_vertices(g):
        diff = subsets[c[arc.tail]] - subsets[c[arc.head]]
        assign[arc] = min(diff) - 1
    return Coloring(assign, n)


def set_coloring_from_line(g: Graph, phi: Coloring) -> Coloring:
    """Turn a proper coloring of H into a proper coloring of g.

    Vertex y receives the set S(y) = {phi(x, y) : (x,y) in V(H)}; since
    phi(x, y) lies in S(y) but not in S(x), adjacent vertices get distinct
    sets.  The palette is the number of distinct sets, at most 2^palette(phi).
    """
    from .graphs import line_digraph, underlying_graph

    h = underlying_graph(line_digraph(g))
    if not verify_coloring(h, phi):
        raise ValueError("input coloring is not a proper coloring of H")
    sets = {y: set() for y in g.vertices}
    for arc in h.vertices:
        sets[arc.head].add(phi.assignment[arc])
    keys = {v: tuple(sorted(s)) for v, s in sets.items()}
    distinct = sorted(set(keys.values()))
    ids = {key: i for i, key in enumerate(distinct)}
    return Coloring({v: ids[keys[v]] for v in g.vertices}, len(distinct))
