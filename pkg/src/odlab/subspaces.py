"""The subspace graphs S(F,n) and S'(F,n), constructive homomorphism
translators between them and the orthogonality targets, and exact clique
analysis.

Adjacency in S requires a non-self-orthogonal vector of each subspace
orthogonal to the whole other subspace; in S' it requires a non-orthogonal
vector pair threading the two subspace pairs, in both directions.  The
witness searches enumerate the relevant intersection subspaces
exhaustively: correctness over speed at desk scale.

Translators re-verify both their input and their output; they never trust
either.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .errors import BudgetExceeded, WitnessError
from .gf import Subspace, _dot, as_field, enumerate_subspaces, find_nonisotropic
from .graphs import ArcVertex, Graph, line_digraph, underlying_graph


def s_adjacent(u1: Subspace, u2: Subspace) -> bool:
    """The S(F,n) edge predicate for distinct subspaces."""
    if u1 == u2:
        return False
    w1 = find_nonisotropic(u1.intersect(u2.orthogonal_complement()))
    if w1 is None:
        return False
    return find_nonisotropic(u2.intersect(u1.orthogonal_complement())) is not None


def _nonorthogonal_pair(a: Subspace, b: Subspace) -> Optional[tuple]:
    """First pair (u, w) in a x b (canonical order, zeros skipped) with
    <u, w> != 0."""
    q = a.field.q
    for u in a.vectors():
        if not any(u):
            continue
        for w in b.vectors():
            if any(w) and _dot(u, w, q):
                return u, w
    return None


def sprime_adjacent(p1: tuple, p2: tuple) -> bool:
    """The S'(F,n) edge predicate for distinct pairs of subspaces."""
    if p1 == p2:
        return False
    (u1, w1), (u2, w2) = p1, p2
    if _nonorthogonal_pair(u1.intersect(w2.orthogonal_complement()), w1.intersect(u2.orthogonal_complement())) is None:
        return False
    return _nonorthogonal_pair(u2.intersect(w1.orthogonal_complement()), w2.intersect(u1.orthogonal_complement())) is not None


def build_S(field, n: int, *, max_q: int = 5, max_n: int = 4) -> Graph:
    """The graph on all subspaces of GF(q)^n with the two-witness
    adjacency; vertex order is the canonical subspace enumeration."""
    subs = enumerate_subspaces(field, n, max_q=max_q, max_n=max_n)
    edges = [
        (a, b)
        for i, a in enumerate(subs)
        for b in subs[i + 1 :]
        if s_adjacent(a, b)
    ]
    return Graph(subs, edges)


def build_Sprime(field, n: int, *, max_q: int = 3, max_n: int = 3) -> Graph:
    """The graph on all ordered pairs of subspaces of GF(q)^n with the
    bi-threaded adjacency."""
    subs = enumerate_subspaces(field, n, max_q=max_q, max_n=max_n)
    verts = [(a, b) for a in subs for b in subs]
    edges = [
        (p1, p2)
        for i, p1 in enumerate(verts)
        for p2 in verts[i + 1 :]
        if sprime_adjacent(p1, p2)
    ]
    return Graph(verts, edges)


# ---------------------------------------------------------------------------
# homomorphism translators (both directions, for O <-> S and O' <-> S')

def _check_o_hom(h: dict, hgraph: Graph, n: int, q: int) -> None:
    for v in hgraph.vertices:
        x = h.get(v)
        if x is None or len(x) != n or _dot(x, x, q) == 0:
            raise WitnessError(f"not a map into the orthogonality graph at {v}")
    for a, c in hgraph.edges:
        if h[a] == h[c] or _dot(h[a], h[c], q):
            raise WitnessError(f"edge {a},{c} not preserved into the orthogonality graph")


def _check_oprime_hom(h: dict, hgraph: Graph, n: int, q: int) -> None:
    for v in hgraph.vertices:
        p = h.get(v)
        if p is None or len(p[0]) != n or len(p[1]) != n or _dot(p[0], p[1], q) == 0:
            raise WitnessError(f"not a map into the bi-orthogonality graph at {v}")
    for a, c in hgraph.edges:
        if h[a] == h[c] or _dot(h[a][0], h[c][1], q) or _dot(h[c][0], h[a][1], q):
            raise WitnessError(f"edge {a},{c} not preserved into the bi-orthogonality graph")


def _check_s_hom(g: Graph, mapping: dict, n: int) -> None:
    for v in g.vertices:
        s = mapping.get(v)
        if not isinstance(s, Subspace) or s.ambient_dim != n:
            raise WitnessError(f"vertex {v} not mapped to a subspace of dimension-{n} space")
    for u, v in g.edges:
        if not s_adjacent(mapping[u], mapping[v]):
            raise WitnessError(f"adjacent vertices {u},{v} mapped to non-adjacent subspaces")


def _check_sprime_hom(g: Graph, mapping: dict, n: int) -> None:
    for v in g.vertices:
        p = mapping.get(v)
        if (
            not isinstance(p, tuple)
            or len(p) != 2
            or not all(isinstance(s, Subspace) and s.ambient_dim == n for s in p)
        ):
            raise WitnessError(f"vertex {v} not mapped to a pair of subspaces")
    for u, v in g.edges:
        if not sprime_adjacent(mapping[u], mapping[v]):
            raise WitnessError(f"adjacent vertices {u},{v} mapped to non-adjacent subspace pairs")


def hom_line_to_subspaces(g: Graph, h_graph: Graph, h: dict, field, n: int) -> dict:
    """From a homomorphism of H into the orthogonality graph over GF(q)^n,
    build g(y) = span{h(x, y)} over the arcs with head y; a verified
    homomorphism of G into S(F, n)."""
    field = as_field(field)
    _check_o_hom(h, h_graph, n, field.q)
    heads = {y: [] for y in g.vertices}
    for arc in h_graph.vertices:
        heads[arc.head].append(h[arc])
    mapping = {y: Subspace.span(field, n, vs) for y, vs in heads.items()}
    _check_s_hom(g, mapping, n)
    return mapping


def hom_subspaces_to_line(g: Graph, mapping: dict, field, n: int) -> dict:
    """From a homomorphism of G into S(F, n), assign each H-vertex (x, y)
    the canonical non-self-orthogonal vector of g(x) cap g(y)^perp; a
    verified homomorphism of H into the orthogonality graph."""
    field = as_field(field)
    _check_s_hom(g, mapping, n)
    h_graph = underlying_graph(line_digraph(g))
    h = {}
    for arc in h_graph.vertices:
        w = find_nonisotropic(mapping[arc.tail].intersect(mapping[arc.head].orthogonal_complement()))
        if w is None:
            raise WitnessError(f"no witness vector for arc {arc} (input map invalid)")
        h[arc] = w.coords
    _check_o_hom(h, h_graph, n, field.q)
    return h


def hom_line_to_subspace_pairs(g: Graph, h_graph: Graph, h: dict, field, n: int) -> dict:
    """From a homomorphism of H into the bi-orthogonality graph, build
    g(y) = (span of first components, span of second components) over the
    arcs with head y; a verified homomorphism of G into S'(F, n)."""
    field = as_field(field)
    _check_oprime_hom(h, h_graph, n, field.q)
    firsts = {y: [] for y in g.vertices}
    seconds = {y: [] for y in g.vertices}
    for arc in h_graph.vertices:
        u, w = h[arc]
        firsts[arc.head].append(u)
        seconds[arc.head].append(w)
    mapping = {
        y: (Subspace.span(field, n, firsts[y]), Subspace.span(field, n, seconds[y]))
        for y in g.vertices
    }
    _check_sprime_hom(g, mapping, n)
    return mapping


def hom_subspace_pairs_to_line(g: Graph, mapping: dict, field, n: int) -> dict:
    """From a homomorphism of G into S'(F, n), assign each H-vertex (x, y)
    the canonical pair (u, w) with u in U_x cap W_y^perp, w in W_x cap
    U_y^perp and <u, w> != 0; a verified homomorphism of H into the
    bi-orthogonality graph."""
    field = as_field(field)
    _check_sprime_hom(g, mapping, n)
    h_graph = underlying_graph(line_digraph(g))
    h = {}
    for arc in h_graph.vertices:
        ux, wx = mapping[arc.tail]
        uy, wy = mapping[arc.head]
        pair = _nonorthogonal_pair(ux.intersect(wy.orthogonal_complement()), wx.intersect(uy.orthogonal_complement()))
        if pair is None:
            raise WitnessError(f"no witness pair for arc {arc} (input map invalid)")
        h[arc] = pair
    _check_oprime_hom(h, h_graph, n, field.q)
    return h


# ---------------------------------------------------------------------------
# cliques

def clique_number(g: Graph, *, node_limit: Optional[int] = None) -> tuple[int, tuple]:
    """Exact maximum clique via Bron-Kerbosch with pivoting, on bitsets.

    Returns (omega, witness) with the witness in vertex order;
    deterministic because candidates are scanned in index order.
    """
    n = g.n
    if n == 0:
        return 0, ()
    adj = [0] * n
    for u, v in g.edges:
        iu, iv = g.index(u), g.index(v)
        adj[iu] |= 1 << iv
        adj[iv] |= 1 << iu
    best = [0, 0]  # size, member mask
    nodes = 0

    def expand(r_mask: int, r_size: int, p: int, x: int) -> None:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise BudgetExceeded(f"clique search exceeded {node_limit} nodes")
        if not p and not x:
            if r_size > best[0]:
                best[0], best[1] = r_size, r_mask
            return
        if r_size + p.bit_count() <= best[0]:
            return
        # pivot: candidate/excluded vertex covering the most of p
        pux = p | x
        pivot, cover = -1, -1
        m = pux
        while m:
            low = m & -m
            m ^= low
            t = low.bit_length() - 1
            c = (p & adj[t]).bit_count()
            if c > cover:
                pivot, cover = t, c
        m = p & ~adj[pivot]
        while m:
            low = m & -m
            m ^= low
            t = low.bit_length() - 1
            expand(r_mask | low, r_size + 1, p & adj[t], x & adj[t])
            p ^= low
            x |= low

    expand(0, 0, (1 << n) - 1, 0)
    witness = tuple(g.vertices[i] for i in range(n) if best[1] >> i & 1)
    return best[0], witness


def canonical_clique_S(field, n: int) -> list:
    """The b(n) coordinate subspaces spanned by {e_i : i in A} over all
    floor(n/2)-subsets A of [n], verified pairwise adjacent in S(F, n)."""
    field = as_field(field)
    subs = []
    for a in itertools.combinations(range(n), n // 2):
        rows = [tuple(1 if j == i else 0 for j in range(n)) for i in a]
        subs.append(Subspace.span(field, n, rows))
    for i, u in enumerate(subs):
        for w in subs[i + 1 :]:
            if not s_adjacent(u, w):
                raise WitnessError(f"canonical clique members not adjacent: {u}, {w}")
    return subs
