"""Exact arithmetic and linear algebra over prime fields GF(q).

Everything is small and exact: vectors are tuples of ints reduced mod q,
matrices are tuples of row tuples, and a subspace is stored as its unique
reduced-row-echelon basis.  Canonical bases give O(1) subspace equality and
a deterministic enumeration order, which the solvers and the CLI rely on
for byte-reproducible output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import GuardExceeded

MAX_FIELD = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(q) with 2 <= q <= 2**16."""

    q: int

    def __post_init__(self):
        if not (2 <= self.q <= MAX_FIELD) or not _is_prime(self.q):
            raise ValueError(f"field order must be a prime in [2, {MAX_FIELD}], got {self.q!r}")

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})"


def as_field(field) -> FieldSpec:
    """Accept a FieldSpec or a plain prime int."""
    return field if isinstance(field, FieldSpec) else FieldSpec(int(field))


# ---------------------------------------------------------------------------
# raw tuple helpers (the fast path used by the solvers)

def _dot(x: Sequence[int], y: Sequence[int], q: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % q


def _rref(rows, q: int):
    """Reduced row echelon form over GF(q).

    Returns (rows, pivot_columns) with zero rows dropped and pivots
    normalized to 1; the result is the canonical representative of the
    row space.
    """
    mat = [[v % q for v in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], -1, q)
        mat[r] = [(v * inv) % q for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % q for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), pivots


def _rank_rows(rows, q: int) -> int:
    return len(_rref(rows, q)[0])


def _nullspace(rows, q: int, ncols: int):
    """Basis of {x : rows @ x = 0}, from the standard RREF construction."""
    red, pivots = _rref(rows, q)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for i, p in enumerate(pivots):
            vec[p] = (-red[i][f]) % q
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# public value types

@dataclass(frozen=True)
class GfVector:
    """A vector over GF(q); coordinates are reduced mod q on construction."""

    field: FieldSpec
    coords: tuple

    def __post_init__(self):
        q = self.field.q
        object.__setattr__(self, "coords", tuple(int(c) % q for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def is_isotropic(self) -> bool:
        return _dot(self.coords, self.coords, self.field.q) == 0


@dataclass(frozen=True)
class GfMatrix:
    """A rectangular matrix over GF(q); entries reduced mod q."""

    field: FieldSpec
    rows: tuple

    def __post_init__(self):
        q = self.field.q
        rows = tuple(tuple(int(v) % q for v in row) for row in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)


def inner_product(x: GfVector, y: GfVector) -> int:
    """Standard bilinear form sum(x_i * y_i) mod q."""
    if x.field != y.field:
        raise ValueError(f"field mismatch: {x.field} vs {y.field}")
    if len(x.coords) != len(y.coords):
        raise ValueError(f"dimension mismatch: {len(x.coords)} vs {len(y.coords)}")
    return _dot(x.coords, y.coords, x.field.q)


def rank(m: GfMatrix) -> int:
    """Row rank of m over its field."""
    return _rank_rows(m.rows, m.field.q)


# ---------------------------------------------------------------------------
# subspaces

@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n stored as its canonical RREF basis.

    Two Subspace values are equal iff they are the same subspace; use
    Subspace.span to build one from any spanning set.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple  # tuple of row tuples, RREF with zero rows dropped

    @classmethod
    def span(cls, field, ambient_dim: int, vectors) -> "Subspace":
        field = as_field(field)
        rows = [tuple(v.coords if isinstance(v, GfVector) else v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError(f"vector of length {len(row)} in GF({field.q})^{ambient_dim}")
        red, _ = _rref(rows, field.q)
        return cls(field, ambient_dim, red)

    @classmethod
    def zero(cls, field, ambient_dim: int) -> "Subspace":
        return cls(as_field(field), ambient_dim, ())

    @classmethod
    def full(cls, field, ambient_dim: int) -> "Subspace":
        field = as_field(field)
        ident = tuple(tuple(1 if i == j else 0 for j in range(ambient_dim)) for i in range(ambient_dim))
        return cls(field, ambient_dim, ident)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        coords = tuple(vector.coords if isinstance(vector, GfVector) else vector)
        q = self.field.q
        v = list(c % q for c in coords)
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x)  # pivot column
            if v[p]:
                f = v[p]
                v = [(a - f * b) % q for a, b in zip(v, row)]
        return not any(v)

    def vectors(self) -> Iterator[tuple]:
        """All q^dim elements, in lexicographic order of the coefficient
        tuple over the canonical basis (the zero vector comes first)."""
        q = self.field.q
        n = self.ambient_dim
        for coeffs in itertools.product(range(q), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(a + c * b) % q for a, b in zip(v, row)]
            yield tuple(v)

    def orthogonal_complement(self) -> "Subspace":
        """The subspace of all vectors orthogonal to every element of self."""
        null = _nullspace(self.basis, self.field.q, self.ambient_dim)
        return Subspace.span(self.field, self.ambient_dim, null)

    def intersect(self, other: "Subspace") -> "Subspace":
        """U cap W, via the duality (U cap W) = (U^perp + W^perp)^perp."""
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")
        up = self.orthogonal_complement()
        wp = other.orthogonal_complement()
        both = Subspace.span(self.field, self.ambient_dim, up.basis + wp.basis)
        return both.orthogonal_complement()

    def __repr__(self) -> str:
        rows = ",".join("(" + ",".join(map(str, r)) + ")" for r in self.basis)
        return f"span[{self.field!r}^{self.ambient_dim}]{{{rows}}}"


def orthogonal_complement(u: Subspace) -> Subspace:
    return u.orthogonal_complement()


def intersect(u: Subspace, w: Subspace) -> Subspace:
    return u.intersect(w)


def find_nonisotropic(u: Subspace, *, max_points: int = 1 << 20) -> Optional[GfVector]:
    """First vector w in u (canonical order) with <w,w> != 0, or None.

    The zero subspace and totally isotropic subspaces yield None.
    """
    q = u.field.q
    if q ** u.dim > max_points:
        raise GuardExceeded(f"{q}^{u.dim} points exceeds max_points={max_points}")
    for v in u.vectors():
        if _dot(v, v, q):
            return GfVector(u.field, v)
    return None


# ---------------------------------------------------------------------------
# enumeration

def all_vectors(field, n: int) -> Iterator[tuple]:
    """All vectors of GF(q)^n in lexicographic order."""
    q = as_field(field).q
    return itertools.product(range(q), repeat=n)


def projective_reps(field, n: int) -> Iterator[tuple]:
    """One representative per projective point: first nonzero coordinate 1."""
    for v in all_vectors(field, n):
        nz = next((c for c in v if c), None)
        if nz == 1:
            yield v


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n, as the exact product
    prod_{i<k} (q^n - q^i)/(q^k - q^i)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    assert num % den == 0
    return num // den


def count_subspaces(field, n: int) -> int:
    q = as_field(field).q
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(field, n: int, *, max_q: int = 5, max_n: int = 4) -> list:
    """Every subspace of GF(q)^n exactly once, in canonical order.

    Order: ascending dimension, then pivot-column sets lexicographically,
    then free RREF entries lexicographically (row-major).  The default
    guard keeps the enumeration at desk scale; raise max_q/max_n to
    override deliberately.
    """
    field = as_field(field)
    q = field.q
    if q > max_q or n > max_n:
        raise GuardExceeded(f"enumerate_subspaces guard: q={q} > {max_q} or n={n} > {max_n}")
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [
                (i, c)
                for i in range(k)
                for c in range(pivots[i] + 1, n)
                if c not in pivots
            ]
            base = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                base[i][p] = 1
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [row[:] for row in base]
                for (i, c), v in zip(free, values):
                    rows[i][c] = v
                out.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    return out


@lru_cache(maxsize=None)
def has_nonzero_isotropic(q: int, n: int) -> bool:
    """Whether GF(q)^n contains a nonzero vector x with <x,x> = 0."""
    field = as_field(q)
    for v in all_vectors(field, n):
        if any(v) and _dot(v, v, q) == 0:
            return True
    return False
