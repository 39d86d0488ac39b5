"""Orthogonality dimension and minrank over prime fields, with verified
witnesses.

Both parameters are computed as homomorphism thresholds: od(G) is the
least k admitting a map into the orthogonality graph on non-self-orthogonal
vectors of GF(q)^k, and minrank(G) is the least k admitting a map from the
complement of G into the bi-orthogonality graph on vector pairs.  The
search runs over scale-canonical representatives, which is lossless:
validity of every constraint is invariant under rescaling a vertex's
vector by alpha (resp. a pair by (alpha*u, alpha^-1*w)), and two distinct
adjacent images can never share an orbit because adjacency to an orbit
mate would force a zero self/pair product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .coloring import greedy_clique
from .errors import GuardExceeded, WitnessError
from .gf import FieldSpec, _dot, _rank_rows, all_vectors, as_field, projective_reps
from .graphs import Graph
from .homomorphism import LazyMaskCache, hom_search_indices


@dataclass
class OrthRep:
    """An orthogonal representation: one non-self-orthogonal vector per
    vertex, orthogonal across every edge."""

    field: FieldSpec
    dim: int
    vectors: dict  # vertex -> coordinate tuple


@dataclass
class ReprMatrix:
    """A matrix representing a graph: nonzero diagonal, zero on non-edges,
    with its claimed rank."""

    field: FieldSpec
    order: tuple  # vertex order indexing rows/columns
    rows: tuple
    rank: int


def verify_orth_rep(g: Graph, rep: OrthRep) -> bool:
    q = rep.field.q
    vec = rep.vectors
    for v in g.vertices:
        x = vec.get(v)
        if x is None or len(x) != rep.dim or _dot(x, x, q) == 0:
            return False
    return all(_dot(vec[u], vec[v], q) == 0 for u, v in g.edges)


def verify_repr_matrix(g: Graph, m: ReprMatrix) -> bool:
    q = m.field.q
    n = g.n
    if m.order != g.vertices or len(m.rows) != n or any(len(r) != n for r in m.rows):
        return False
    for i in range(n):
        if m.rows[i][i] % q == 0:
            return False
    for i in range(n):
        for j in range(n):
            if i != j and not g.has_edge(g.vertices[i], g.vertices[j]):
                if m.rows[i][j] % q != 0:
                    return False
    return _rank_rows(m.rows, q) == m.rank


# ---------------------------------------------------------------------------
# explicit target graphs (Definitions of O and O')

def build_O(field, k: int, *, max_vertices: int = 200_000) -> Graph:
    """The graph on all non-self-orthogonal vectors of GF(q)^k (the full
    vector set, not projectivized), distinct orthogonal pairs adjacent."""
    field = as_field(field)
    q = field.q
    if q**k > max_vertices:
        raise GuardExceeded(f"build_O guard: {q}^{k} > {max_vertices}")
    verts = [v for v in all_vectors(field, k) if _dot(v, v, q)]
    edges = [
        (u, v)
        for i, u in enumerate(verts)
        for v in verts[i + 1 :]
        if _dot(u, v, q) == 0
    ]
    return Graph(verts, edges)


def build_Oprime(field, k: int, *, max_vertices: int = 200_000) -> Graph:
    """The graph on all pairs (u, w) with <u,w> != 0, where distinct pairs
    are adjacent iff <u1,w2> = <u2,w1> = 0."""
    field = as_field(field)
    q = field.q
    if q ** (2 * k) > max_vertices:
        raise GuardExceeded(f"build_Oprime guard: {q}^{2 * k} > {max_vertices}")
    verts = [
        (u, w)
        for u in all_vectors(field, k)
        for w in all_vectors(field, k)
        if _dot(u, w, q)
    ]
    edges = [
        (a, b)
        for i, a in enumerate(verts)
        for b in verts[i + 1 :]
        if _dot(a[0], b[1], q) == 0 and _dot(b[0], a[1], q) == 0
    ]
    return Graph(verts, edges)


# ---------------------------------------------------------------------------
# canonical search pools

@lru_cache(maxsize=None)
def od_pool(q: int, k: int) -> tuple:
    """Non-self-orthogonal projective representatives of GF(q)^k, in
    lexicographic order."""
    field = as_field(q)
    return tuple(v for v in projective_reps(field, k) if _dot(v, v, q))


@lru_cache(maxsize=None)
def minrank_pool(q: int, k: int) -> tuple:
    """Pairs (u, w) with <u,w> != 0, one per scaling orbit: u runs over
    projective representatives, w over all vectors."""
    field = as_field(q)
    return tuple(
        (u, w)
        for u in projective_reps(field, k)
        for w in all_vectors(field, k)
        if _dot(u, w, q)
    )


# ---------------------------------------------------------------------------
# solvers

def orthogonality_dimension(
    g: Graph,
    field,
    k_max: int,
    *,
    node_limit: Optional[int] = None,
    max_pool: int = 200_000,
    use_clique_bound: bool = True,
) -> Optional[tuple[int, OrthRep]]:
    """Least k <= k_max with a k-dimensional orthogonal representation,
    plus a verified witness; None means the value exceeds k_max (each
    smaller k exhausted).

    Pairwise-orthogonal non-self-orthogonal vectors are linearly
    independent, so a clique is a valid lower bound and skipped k values
    below it are provably infeasible.
    """
    field = as_field(field)
    q = field.q
    if g.n == 0:
        return 0, OrthRep(field, 0, {})
    lb = max(1, len(greedy_clique(g))) if use_clique_bound else 1
    for k in range(lb, k_max + 1):
        pool = od_pool(q, k)
        if len(pool) > max_pool:
            raise GuardExceeded(f"od pool for GF({q})^{k} has {len(pool)} > {max_pool} entries")
        mask = LazyMaskCache(list(pool), lambda a, b: _dot(a, b, q) == 0)
        res = hom_search_indices(g, len(pool), mask, node_limit=node_limit)
        if res is not None:
            rep = OrthRep(field, k, {v: pool[t] for v, t in zip(g.vertices, res)})
            if not verify_orth_rep(g, rep):
                raise WitnessError("internal: od witness failed verification")
            return k, rep
    return None


def minrank(
    g: Graph,
    field,
    k_max: int,
    *,
    node_limit: Optional[int] = None,
    max_pool: int = 50_000,
    use_clique_bound: bool = True,
) -> Optional[tuple[int, ReprMatrix]]:
    """Least rank of a matrix representing g over GF(q), with the witness
    matrix assembled from the bi-orthogonality homomorphism as
    M[i][j] = <u_i, w_j>; None means the value exceeds k_max.

    An independent set of g forces an identity-patterned principal
    submatrix, so a clique of the complement is a valid lower bound.
    """
    field = as_field(field)
    q = field.q
    if g.n == 0:
        return 0, ReprMatrix(field, (), (), 0)
    gc = g.complement()
    lb = max(1, len(greedy_clique(gc))) if use_clique_bound else 1
    for k in range(lb, k_max + 1):
        pool = minrank_pool(q, k)
        if len(pool) > max_pool:
            raise GuardExceeded(f"minrank pool for GF({q})^{k} has {len(pool)} > {max_pool} entries")

        def compatible(a, b):
            return _dot(a[0], b[1], q) == 0 and _dot(b[0], a[1], q) == 0

        mask = LazyMaskCache(list(pool), compatible)
        res = hom_search_indices(gc, len(pool), mask, node_limit=node_limit)
        if res is not None:
            pairs = {v: pool[t] for v, t in zip(gc.vertices, res)}
            rows = tuple(
                tuple(_dot(pairs[u][0], pairs[v][1], q) for v in g.vertices)
                for u in g.vertices
            )
            m = ReprMatrix(field, g.vertices, rows, k)
            if not verify_repr_matrix(g, m):
                raise WitnessError("internal: minrank witness failed verification")
            return k, m
    return None
