"""Independent brute-force oracles.

Nothing here shares code paths with the solvers under test: ranks come
from minors, chromatic numbers and homomorphisms from full assignment
enumeration, orthogonality dimension from unpruned vector assignment, and
minrank from pattern-constrained matrix enumeration.
"""

from __future__ import annotations

import itertools

from odlab.gf import _dot, all_vectors


def det_mod(rows, q: int) -> int:
    """Determinant by Laplace expansion (tiny matrices only)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0] % q
    total = 0
    for j in range(n):
        if rows[0][j] % q == 0:
            continue
        minor = [
            [rows[i][c] for c in range(n) if c != j]
            for i in range(1, n)
        ]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * det_mod(minor, q)
    return total % q


def minor_rank(rows, q: int) -> int:
    """Rank as the largest size of a square submatrix with nonzero
    determinant."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    for size in range(min(m, n), 0, -1):
        for ri in itertools.combinations(range(m), size):
            for ci in itertools.combinations(range(n), size):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det_mod(sub, q) != 0:
                    return size
    return 0


def brute_orthogonal_complement(basis, q: int, n: int) -> set:
    """All vectors orthogonal to every basis row, by full enumeration."""
    return {
        v
        for v in itertools.product(range(q), repeat=n)
        if all(_dot(v, row, q) == 0 for row in basis)
    }


def subspace_count_formula(q: int, n: int) -> int:
    """Sum over k of prod_{i<k} (q^n - q^i)/(q^k - q^i), computed here
    independently of the package."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= q**n - q**i
            den *= q**k - q**i
        total += num // den
    return total


def naive_chromatic(g) -> int:
    """Smallest k admitting a proper coloring, by enumerating every
    assignment in range(k)^n."""
    verts = list(g.vertices)
    if not verts:
        return 0
    edges = [(verts.index(u), verts.index(v)) for u, v in g.edges]
    for k in range(1, len(verts) + 1):
        for colors in itertools.product(range(k), repeat=len(verts)):
            if all(colors[i] != colors[j] for i, j in edges):
                return k
    raise AssertionError("unreachable")


def naive_is_k_colorable(g, k: int) -> bool:
    verts = list(g.vertices)
    edges = [(verts.index(u), verts.index(v)) for u, v in g.edges]
    return any(
        all(colors[i] != colors[j] for i, j in edges)
        for colors in itertools.product(range(k), repeat=len(verts))
    )


def naive_hom_exists(g, target) -> bool:
    """Homomorphism existence by full assignment enumeration."""
    verts = list(g.vertices)
    if not verts:
        return True
    edges = [(verts.index(u), verts.index(v)) for u, v in g.edges]
    for images in itertools.product(target.vertices, repeat=len(verts)):
        if all(target.has_edge(images[i], images[j]) for i, j in edges):
            return True
    return False


def naive_od(g, q: int, k_max: int):
    """Least k with an orthogonal representation, enumerating every
    assignment of (all, unprojectivized) non-self-orthogonal vectors."""
    verts = list(g.vertices)
    if not verts:
        return 0
    edges = [(verts.index(u), verts.index(v)) for u, v in g.edges]
    for k in range(1, k_max + 1):
        pool = [v for v in all_vectors(q, k) if _dot(v, v, q)]
        for assign in itertools.product(pool, repeat=len(verts)):
            if all(_dot(assign[i], assign[j], q) == 0 for i, j in edges):
                return k
    return None


def naive_minrank(g, q: int, k_max: int):
    """Least rank of a representing matrix, enumerating every matrix with
    the forced zero pattern (free entries: diagonal and edge positions)."""
    verts = list(g.vertices)
    n = len(verts)
    if n == 0:
        return 0
    free = [(i, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and g.has_edge(verts[i], verts[j]):
                free.append((i, j))
    best = None
    nonzero = range(1, q)
    for diag_vals in itertools.product(nonzero, repeat=n):
        off_positions = free[n:]
        for off_vals in itertools.product(range(q), repeat=len(off_positions)):
            rows = [[0] * n for _ in range(n)]
            for (i, _), v in zip(free[:n], diag_vals):
                rows[i][i] = v
            for (i, j), v in zip(off_positions, off_vals):
                rows[i][j] = v
            r = minor_rank(rows, q)
            if best is None or r < best:
                best = r
    return best if (best is not None and best <= k_max) else None
