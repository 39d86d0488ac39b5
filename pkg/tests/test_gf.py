import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from odlab.errors import GuardExceeded
from odlab.gf import (
    FieldSpec,
    GfMatrix,
    GfVector,
    Subspace,
    all_vectors,
    count_subspaces,
    enumerate_subspaces,
    find_nonisotropic,
    gaussian_binomial,
    has_nonzero_isotropic,
    inner_product,
    projective_reps,
    rank,
)
from oracles import brute_orthogonal_complement, minor_rank, subspace_count_formula


def test_field_spec_accepts_primes_only():
    FieldSpec(2)
    FieldSpec(65521)
    for bad in (0, 1, 4, 6, 9, 65536, 65537):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_vector_coords_reduced():
    v = GfVector(FieldSpec(3), (4, -1, 3))
    assert v.coords == (1, 2, 0)


def test_rank_examples():
    f2, f3 = FieldSpec(2), FieldSpec(3)
    ident = GfMatrix(f2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert rank(ident) == 3
    ones = GfMatrix(f2, ((1, 1), (1, 1)))
    assert rank(ones) == 1
    # second row is 2 * first row mod 3
    dep = GfMatrix(f3, ((1, 2), (2, 1)))
    assert rank(dep) == 1
    assert minor_rank([[1, 2], [2, 1]], 3) == 1


@given(
    q=st.sampled_from([2, 3, 5]),
    rows=st.integers(1, 4),
    cols=st.integers(1, 4),
    data=st.data(),
)
@settings(max_examples=60, deadline=None)
def test_rank_matches_minor_oracle(q, rows, cols, data):
    entries = data.draw(
        st.lists(st.integers(0, q - 1), min_size=rows * cols, max_size=rows * cols)
    )
    mat = [entries[i * cols : (i + 1) * cols] for i in range(rows)]
    assert rank(GfMatrix(FieldSpec(q), tuple(map(tuple, mat)))) == minor_rank(mat, q)


def test_inner_product_examples():
    f2, f3 = FieldSpec(2), FieldSpec(3)
    assert inner_product(GfVector(f2, (1, 0)), GfVector(f2, (0, 1))) == 0
    assert inner_product(GfVector(f2, (1, 1)), GfVector(f2, (1, 1))) == 0
    assert inner_product(GfVector(f3, (1, 1)), GfVector(f3, (1, 1))) == 2
    with pytest.raises(ValueError):
        inner_product(GfVector(f2, (1,)), GfVector(f2, (1, 0)))
    with pytest.raises(ValueError):
        inner_product(GfVector(f2, (1,)), GfVector(f3, (1,)))


def test_orthogonal_complement_examples():
    u = Subspace.span(2, 2, [(1, 0)])
    assert u.orthogonal_complement() == Subspace.span(2, 2, [(0, 1)])
    z = Subspace.zero(3, 2)
    assert z.orthogonal_complement() == Subspace.full(3, 2)
    # solve x1 + x2 = 0 over GF(2)^3: the complement contains U itself
    u = Subspace.span(2, 3, [(1, 1, 0)])
    comp = u.orthogonal_complement()
    want = brute_orthogonal_complement([(1, 1, 0)], 2, 3)
    assert set(comp.vectors()) == want
    assert comp.contains((1, 1, 0))
    assert comp == Subspace.span(2, 3, [(1, 1, 0), (0, 0, 1)])


def test_intersect_examples():
    u = Subspace.span(2, 2, [(1, 0)])
    assert u.intersect(u) == u
    w = Subspace.span(2, 2, [(0, 1)])
    assert u.intersect(w) == Subspace.zero(2, 2)
    full = Subspace.full(3, 2)
    diag = Subspace.span(3, 2, [(1, 1)])
    assert full.intersect(diag) == diag
    with pytest.raises(ValueError):
        u.intersect(Subspace.zero(2, 3))


@given(
    q=st.sampled_from([2, 3]),
    n=st.integers(2, 3),
    data=st.data(),
)
@settings(max_examples=40, deadline=None)
def test_intersect_matches_enumeration(q, n, data):
    vecs = st.lists(
        st.tuples(*[st.integers(0, q - 1)] * n), min_size=0, max_size=2
    )
    u = Subspace.span(q, n, data.draw(vecs))
    w = Subspace.span(q, n, data.draw(vecs))
    got = set(u.intersect(w).vectors())
    want = set(u.vectors()) & set(w.vectors())
    assert got == want


def test_enumerate_subspaces_counts():
    assert len(enumerate_subspaces(2, 2)) == 5
    assert len(enumerate_subspaces(2, 3)) == 16
    assert len(enumerate_subspaces(3, 2)) == 6
    for q, n in [(2, 4), (3, 3), (5, 2)]:
        subs = enumerate_subspaces(q, n)
        assert len(subs) == subspace_count_formula(q, n)
        assert len(subs) == count_subspaces(q, n)
        assert len(set(subs)) == len(subs)


def test_enumerate_guard():
    with pytest.raises(GuardExceeded):
        enumerate_subspaces(7, 2)
    assert len(enumerate_subspaces(7, 2, max_q=7)) == subspace_count_formula(7, 2)


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(2, 1, 3) == 4


def test_duality_and_dimension_all_small_spaces():
    for q in (2, 3, 5):
        for n in (1, 2, 3, 4):
            if q == 5 and n > 3:
                continue  # 5^4 spaces still fine, trimmed for speed
            for u in enumerate_subspaces(q, n):
                comp = u.orthogonal_complement()
                assert u.dim + comp.dim == n
                assert comp.orthogonal_complement() == u


def test_canonicality_under_respanning():
    subs = enumerate_subspaces(3, 3)
    for u in subs:
        if u.dim == 0:
            continue
        doubled = [tuple((2 * c) % 3 for c in row) for row in u.basis]
        assert Subspace.span(3, 3, list(u.basis)[::-1] + doubled) == u


def test_find_nonisotropic_examples():
    u = Subspace.span(2, 2, [(1, 0)])
    w = find_nonisotropic(u)
    assert w is not None and w.coords == (1, 0)
    assert find_nonisotropic(Subspace.span(2, 2, [(1, 1)])) is None
    w = find_nonisotropic(Subspace.span(3, 2, [(1, 1)]))
    assert w is not None and inner_product(w, w) == 2


def test_projective_reps():
    reps = list(projective_reps(3, 2))
    assert reps == [(0, 1), (1, 0), (1, 1), (1, 2)]
    assert len(list(projective_reps(2, 3))) == 7


def test_has_nonzero_isotropic():
    assert not has_nonzero_isotropic(3, 2)
    assert has_nonzero_isotropic(2, 2)
    assert has_nonzero_isotropic(2, 3)
    assert has_nonzero_isotropic(3, 3)
    assert has_nonzero_isotropic(5, 2)  # 1^2 + 2^2 = 5 = 0


def test_all_vectors_lex_order():
    vecs = list(all_vectors(2, 2))
    assert vecs == [(0, 0), (0, 1), (1, 0), (1, 1)]
