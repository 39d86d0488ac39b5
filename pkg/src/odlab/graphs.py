"""Immutable simple graphs and digraphs, the line-digraph construction,
complements, and DIMACS edge-format I/O.

Vertex labels are arbitrary hashable values; the label tuple fixes a
stable vertex order and every derived ordering (neighbor lists, edge
lists, serialized output) follows it, so repeated runs are byte-identical
regardless of hash randomization.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class ArcVertex:
    """A vertex of a line digraph: the ordered pair (tail, head) of an arc."""

    tail: object
    head: object

    def __str__(self) -> str:
        return f"{self.tail}>{self.head}"


class Graph:
    """A simple undirected graph with a fixed vertex order."""

    __slots__ = ("vertices", "edges", "_index", "_adj", "_edge_index_set")

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex labels")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            if u not in index or v not in index:
                raise ValueError(f"edge endpoint not a vertex: {(u, v)!r}")
            iu, iv = index[u], index[v]
            norm.add((iu, iv) if iu < iv else (iv, iu))
        self.vertices = vertices
        self._index = index
        self._edge_index_set = frozenset(norm)
        self.edges = tuple((vertices[i], vertices[j]) for i, j in sorted(norm))
        adj = {v: [] for v in vertices}
        for i, j in sorted(norm):
            adj[vertices[i]].append(vertices[j])
            adj[vertices[j]].append(vertices[i])
        self._adj = {v: tuple(sorted(ns, key=index.__getitem__)) for v, ns in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v) -> int:
        return self._index[v]

    def has_vertex(self, v) -> bool:
        return v in self._index

    def has_edge(self, u, v) -> bool:
        if u == v or u not in self._index or v not in self._index:
            return False
        iu, iv = self._index[u], self._index[v]
        return ((iu, iv) if iu < iv else (iv, iu)) in self._edge_index_set

    def neighbors(self, v) -> tuple:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def complement(self) -> "Graph":
        verts = self.vertices
        edges = [
            (verts[i], verts[j])
            for i in range(len(verts))
            for j in range(i + 1, len(verts))
            if (i, j) not in self._edge_index_set
        ]
        return Graph(verts, edges)

    def relabel(self, mapping) -> "Graph":
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v]) for u, v in self.edges),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self._edge_index_set == other._edge_index_set
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self._edge_index_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """A simple loop-free directed graph with a fixed vertex order."""

    __slots__ = ("vertices", "arcs", "_index", "_out", "_in", "_arc_index_set")

    def __init__(self, vertices: Iterable, arcs: Iterable = ()):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex labels")
        norm = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            if u not in index or v not in index:
                raise ValueError(f"arc endpoint not a vertex: {(u, v)!r}")
            norm.add((index[u], index[v]))
        self.vertices = vertices
        self._index = index
        self._arc_index_set = frozenset(norm)
        self.arcs = tuple((vertices[i], vertices[j]) for i, j in sorted(norm))
        out = {v: [] for v in vertices}
        inn = {v: [] for v in vertices}
        for i, j in sorted(norm):
            out[vertices[i]].append(vertices[j])
            inn[vertices[j]].append(vertices[i])
        self._out = {v: tuple(ns) for v, ns in out.items()}
        self._in = {v: tuple(ns) for v, ns in inn.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def index(self, v) -> int:
        return self._index[v]

    def has_arc(self, u, v) -> bool:
        if u not in self._index or v not in self._index:
            return False
        return (self._index[u], self._index[v]) in self._arc_index_set

    def out_neighbors(self, v) -> tuple:
        return self._out[v]

    def in_neighbors(self, v) -> tuple:
        return self._in[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self._arc_index_set == other._arc_index_set
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self._arc_index_set))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# constructions

def line_digraph(g: Graph) -> Digraph:
    """The line digraph of g's symmetric orientation.

    Vertices are all ordered pairs (x, y) of adjacent vertices of g, in
    lexicographic (tail, head) order; there is an arc (x, y) -> (z, w)
    exactly when y = z.  In particular (x, y) -> (y, x) is an arc, and the
    vertex count is 2 * m(g).
    """
    verts = [ArcVertex(x, y) for x in g.vertices for y in g.neighbors(x)]
    arcs = []
    for a in verts:
        for w in g.neighbors(a.head):
            arcs.append((a, ArcVertex(a.head, w)))
    return Digraph(verts, arcs)


def underlying_graph(d: Digraph) -> Graph:
    """Forget arc directions: {u, v} is an edge iff (u,v) or (v,u) is an arc."""
    return Graph(d.vertices, d.arcs)


def line_graph_underlying(g: Graph) -> Graph:
    """underlying_graph(line_digraph(g)), the graph called H throughout."""
    return underlying_graph(line_digraph(g))


def complement(g: Graph) -> Graph:
    return g.complement()


# ---------------------------------------------------------------------------
# DIMACS edge format

def parse_graph(text: str) -> Graph:
    """Parse DIMACS edge format: 'p edge <n> <m>' then 'e <u> <v>' lines.

    Vertices are labeled 1..n.  Duplicate edges warn and are dropped;
    loops and out-of-range endpoints are errors.  'c' lines are comments.
    """
    n, pairs = _parse_dimacs_body(text, kind="edge", line_prefix="e")
    seen = set()
    edges = []
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop edge 'e {u} {v}'")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            warnings.warn(f"duplicate edge 'e {u} {v}' ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    return Graph(range(1, n + 1), edges)


def serialize_graph(g: Graph) -> str:
    """Serialize to canonical DIMACS: vertices renumbered 1..n in vertex
    order, edges sorted."""
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"e {g.index(u) + 1} {g.index(v) + 1}")
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Parse the digraph variant: 'p arc <n> <m>' with 'a <u> <v>' lines."""
    n, pairs = _parse_dimacs_body(text, kind="arc", line_prefix="a")
    seen = set()
    arcs = []
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop arc 'a {u} {v}'")
        if (u, v) in seen:
            warnings.warn(f"duplicate arc 'a {u} {v}' ignored", stacklevel=2)
            continue
        seen.add((u, v))
        arcs.append((u, v))
    return Digraph(range(1, n + 1), arcs)


def serialize_digraph(d: Digraph) -> str:
    lines = [f"p arc {d.n} {d.m}"]
    for u, v in d.arcs:
        lines.append(f"a {d.index(u) + 1} {d.index(v) + 1}")
    return "\n".join(lines) + "\n"


def _parse_dimacs_body(text: str, *, kind: str, line_prefix: str):
    n = None
    declared_m = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: repeated problem line")
            if len(parts) != 4 or parts[1] != kind:
                raise ValueError(f"line {lineno}: malformed header {line!r} (want 'p {kind} <n> <m>')")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or declared_m < 0:
                raise ValueError(f"line {lineno}: negative size in header")
        elif parts[0] == line_prefix:
            if n is None:
                raise ValueError(f"line {lineno}: '{line_prefix}' line before problem line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: malformed line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: vertex index out of range in {line!r}")
            pairs.append((u, v))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    if declared_m != len(pairs):
        warnings.warn(
            f"header declares {declared_m} lines but {len(pairs)} present", stacklevel=3
        )
    return n, pairs
