"""Floating-point pieces of the real-field story: the rounded-basis
coloring of the subspace graph over R, the sign-vector coloring, a seeded
generator of adjacent subspace pairs for property runs, and the double
shift graph.

Exact real arithmetic is out of scope: binary64 with tol = 1e-9 is enough
because every assertion made here has slack far above the float error
(the rounding grid is 1/n, the generator's orthogonality error is ~1e-12).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .graphs import Graph

TOL = 1e-9


def _rdot(x, y) -> float:
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class RealSubspace:
    """A subspace of R^n given by an orthonormal basis (tolerance TOL)."""

    ambient_dim: int
    basis: tuple  # tuple of row tuples, possibly empty

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis vector of wrong length")
            if abs(_rdot(row, row) - 1.0) > TOL:
                raise ValueError("basis vector not unit length")
        for a, b in itertools.combinations(self.basis, 2):
            if abs(_rdot(a, b)) > TOL:
                raise ValueError("basis vectors not orthogonal")
        if len(self.basis) > self.ambient_dim:
            raise ValueError("more basis vectors than the ambient dimension")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_spanning(cls, ambient_dim: int, vectors) -> "RealSubspace":
        """Gram-Schmidt, dropping near-dependent vectors (norm < 1e-7)."""
        ortho = []
        for v in vectors:
            w = list(v)
            for u in ortho:
                c = _rdot(w, u)
                w = [a - c * b for a, b in zip(w, u)]
            norm = math.sqrt(_rdot(w, w))
            if norm > 1e-7:
                ortho.append(tuple(a / norm for a in w))
        return cls(ambient_dim, tuple(ortho))


@dataclass(frozen=True)
class RoundedColor:
    """An n x n matrix of multiples of 1/n: the rounded basis columns of a
    subspace, zero-padded.  Stored as integer numerators in [-n, n]."""

    denominator: int
    columns: tuple  # n column tuples of n ints each

    def __post_init__(self):
        n = self.denominator
        if len(self.columns) != n or any(len(c) != n for c in self.columns):
            raise ValueError("color must be an n x n numerator matrix")
        if any(abs(a) > n for c in self.columns for a in c):
            raise ValueError("numerator out of [-n, n]")


def _round_to_grid(value: float, n: int) -> int:
    """Nearest multiple of 1/n as a numerator; exact halfway rounds toward
    the smaller multiple."""
    a = math.ceil(value * n - 0.5)
    return max(-n, min(n, a))


def subspace_color(u: RealSubspace) -> RoundedColor:
    """Round each orthonormal basis entry to the nearest multiple of 1/n
    and pad with zero columns to an n x n matrix.

    Adjacent subspaces always receive distinct colors: equal colors would
    put the bases within 1/sqrt(n) of each other coordinate-wise, forcing
    two orthogonal unit vectors at distance <= 1, short of sqrt(2).
    """
    n = u.ambient_dim
    cols = []
    for row in u.basis:
        numer = tuple(_round_to_grid(v, n) for v in row)
        for a, v in zip(numer, row):
            if abs(a / n - v) > 1.0 / (2 * n) + TOL:
                raise AssertionError("rounding error bound violated")
        cols.append(numer)
    zero = (0,) * n
    while len(cols) < n:
        cols.append(zero)
    return RoundedColor(n, tuple(cols))


def sign_coloring(v, *, tol: float = TOL) -> tuple:
    """Componentwise sign in {-1, 0, 1}, zeros below tol."""
    return tuple(0 if abs(x) <= tol else (1 if x > 0 else -1) for x in v)


def random_adjacent_S_pair(n: int, seed: int) -> tuple[RealSubspace, RealSubspace]:
    """A pair (U, V) adjacent in the subspace graph over R^n, by
    construction: orthonormal u, v and disjoint orthonormal extensions, so
    u lies in U and is orthogonal to all of V, and symmetrically.
    Deterministic per seed."""
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    dim_u = rng.randrange(1, n)
    dim_v = rng.randrange(1, n - dim_u + 1)
    ortho: list = []
    while len(ortho) < dim_u + dim_v:
        w = [rng.gauss(0.0, 1.0) for _ in range(n)]
        for b in ortho:
            c = _rdot(w, b)
            w = [a - c * x for a, x in zip(w, b)]
        norm = math.sqrt(_rdot(w, w))
        if norm > 1e-6:
            ortho.append(tuple(a / norm for a in w))
    u_vec, v_vec = ortho[0], ortho[1]
    u_basis = (u_vec,) + tuple(ortho[2 : 2 + dim_u - 1])
    v_basis = (v_vec,) + tuple(ortho[2 + dim_u - 1 :])
    pair = RealSubspace(n, u_basis), RealSubspace(n, v_basis)
    # generator self-check of the adjacency witnesses
    for w, other in ((u_vec, pair[1]), (v_vec, pair[0])):
        for b in other.basis:
            if abs(_rdot(w, b)) > TOL:
                raise AssertionError("generator produced a non-adjacent pair")
    return pair


def double_shift_graph(n: int) -> Graph:
    """The graph on all 3-subsets of [n]: {x1<x2<x3} ~ {y1<y2<y3} iff
    (x2,x3) = (y1,y2) or (x1,x2) = (y2,y3)."""
    if n < 4:
        raise ValueError("need n >= 4")
    verts = list(itertools.combinations(range(1, n + 1), 3))
    edges = []
    for x in verts:
        for d in range(x[2] + 1, n + 1):
            edges.append((x, (x[1], x[2], d)))
    return Graph(verts, edges)
