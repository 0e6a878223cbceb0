from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abelcover.gf2core import BitMatrix, Subspace, kernel_basis, matmul, rank, rref, solve


def dense_matrices(max_rows=8, max_cols=12):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda rows: np.array(rows, dtype=np.uint8))


def brute_span(rows: np.ndarray) -> set[tuple[int, ...]]:
    out = set()
    for coeffs in product((0, 1), repeat=rows.shape[0]):
        v = (np.array(coeffs, dtype=np.int64) @ rows.astype(np.int64)) % 2
        out.add(tuple(int(x) for x in v))
    return out


@given(dense_matrices())
@settings(max_examples=150, deadline=None)
def test_rank_matches_exhaustive_span(m):
    span = brute_span(m)
    assert 2 ** rank(BitMatrix.from_dense(m, cols=m.shape[1])) == len(span)


@given(dense_matrices())
@settings(max_examples=100, deadline=None)
def test_kernel_is_exactly_the_null_space(m):
    bm = BitMatrix.from_dense(m, cols=m.shape[1])
    ker = kernel_basis(bm)
    assert ker.dim == m.shape[1] - rank(bm)
    for v in ker.vectors():
        assert not ((m.astype(np.int64) @ v) % 2).any()
    # exhaustive comparison for small widths
    if m.shape[1] <= 10:
        null = {v for v in product((0, 1), repeat=m.shape[1]) if not ((m.astype(np.int64) @ np.array(v)) % 2).any()}
        assert len(null) == 2**ker.dim


@given(dense_matrices(), st.data())
@settings(max_examples=100, deadline=None)
def test_solve_finds_a_solution_iff_one_exists(m, data):
    bm = BitMatrix.from_dense(m, cols=m.shape[1])
    b = np.array(data.draw(st.lists(st.integers(0, 1), min_size=m.shape[0], max_size=m.shape[0])), dtype=np.uint8)
    x = solve(bm, b)
    cols_span = brute_span(m.T)
    if tuple(int(v) for v in b) in cols_span:
        assert x is not None
        assert np.array_equal((m.astype(np.int64) @ x) % 2, b)
    else:
        assert x is None


def test_pack_round_trip_across_word_boundary():
    rng = np.random.default_rng(3)
    for cols in (1, 63, 64, 65, 130):
        m = rng.integers(0, 2, size=(5, cols), dtype=np.uint8)
        bm = BitMatrix.from_dense(m, cols=cols)
        assert np.array_equal(bm.to_dense(), m)
        assert np.array_equal(bm.transpose().to_dense(), m.T)


def test_matmul_matches_integer_product():
    rng = np.random.default_rng(5)
    a = rng.integers(0, 2, size=(17, 70), dtype=np.uint8)
    b = rng.integers(0, 2, size=(70, 9), dtype=np.uint8)
    got = matmul(BitMatrix.from_dense(a, cols=70), BitMatrix.from_dense(b, cols=9)).to_dense()
    assert np.array_equal(got, (a.astype(np.int64) @ b) % 2)


def test_rref_shape():
    m = np.array([[1, 1, 0], [1, 1, 0], [0, 1, 1]], dtype=np.uint8)
    r, pivots = rref(BitMatrix.from_dense(m, cols=3))
    assert list(pivots) == [0, 1]
    assert np.array_equal(r.to_dense()[:2], np.array([[1, 0, 1], [0, 1, 1]]))


@given(dense_matrices(6, 8), dense_matrices(6, 8))
@settings(max_examples=100, deadline=None)
def test_subspace_dimension_formula(a, b):
    n = min(a.shape[1], b.shape[1])
    u = Subspace.span(n, a[:, :n])
    w = Subspace.span(n, b[:, :n])
    assert (u + w).dim + u.intersection(w).dim == u.dim + w.dim
    assert u.intersection(w).contains_subspace(Subspace.zero(n))
    assert (u + w).contains_subspace(u) and u.contains_subspace(u.intersection(w))
    inter = {v for v in brute_span(a[:, :n]) if v in brute_span(b[:, :n])}
    assert len(inter) == 2 ** u.intersection(w).dim


@given(dense_matrices(6, 9))
@settings(max_examples=100, deadline=None)
def test_double_complement_is_identity(a):
    u = Subspace.span(a.shape[1], a)
    comp = u.orthogonal_complement()
    assert comp.dim == a.shape[1] - u.dim
    assert comp.orthogonal_complement() == u
    for v in comp.vectors():
        assert not ((a.astype(np.int64) @ v) % 2).any()


def test_coordinates_reconstruct_vector():
    u = Subspace.span(4, np.array([[1, 1, 0, 0], [0, 1, 1, 0]], dtype=np.uint8))
    v = np.array([1, 0, 1, 0], dtype=np.uint8)
    c = u.coordinates(v)
    assert np.array_equal((np.array(c, dtype=np.int64) @ u.vectors().astype(np.int64)) % 2, v)
    assert not u.contains(np.array([0, 0, 0, 1], dtype=np.uint8))


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        Subspace.full(3) + Subspace.full(4)
