from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abelcover.gf2core import BitMatrix, Subspace, kernel_basis
from abelcover.graded import (
    Character,
    GradedElement,
    GroupElement,
    ak_rel_subspace,
    bk_basis,
    char_value,
    characters,
    delta,
    dim_Ak,
    dim_Bk,
    format_bits,
    graded_mul,
    group_rank,
    omega,
    omega_Ak_subspace,
    omega_Bk_subspace,
    omega_map,
    parse_bits,
    span_elements,
)


@st.composite
def graded(draw, d=None, degree=None):
    d = draw(st.integers(1, 5)) if d is None else d
    k = draw(st.integers(0, d + 1)) if degree is None else degree
    basis = bk_basis(d, k)
    coords = draw(st.lists(st.integers(0, 1), min_size=len(basis), max_size=len(basis)))
    return GradedElement.from_coords(d, k, coords)


@st.composite
def graded_triple(draw):
    d = draw(st.integers(1, 5))
    return tuple(draw(graded(d=d, degree=draw(st.integers(0, 3)))) for _ in range(3))


def test_bitstring_convention():
    assert parse_bits("101") == 0b101
    assert format_bits(0b101, 3) == "101"
    assert GroupElement.parse("011").bits == 0b110


def test_delta_and_characters():
    h = Character(3, 0b011)
    assert char_value(h, GroupElement(3, 0b001)) == 1
    assert char_value(h, GroupElement(3, 0b011)) == 0
    assert len(characters(3)) == 7
    assert delta(0b110, 0b010) == 1


def test_subgroup_helpers():
    assert span_elements([1, 2]) == frozenset({0, 1, 2, 3})
    assert group_rank([1, 2, 3]) == 2


@pytest.mark.parametrize("d,expected", [(3, [1, 4, 7, 8]), (2, [1, 3, 4]), (1, [1, 2])])
def test_bk_dimensions(d, expected):
    assert [dim_Bk(d, k) for k in range(len(expected))] == expected
    assert all(len(bk_basis(d, k)) == dim_Bk(d, k) for k in range(len(expected)))


def test_dim_ak_counts_nonempty_monomials():
    assert dim_Ak(3, 1) == 3
    assert dim_Ak(3, 5) == 7


@given(graded_triple())
@settings(max_examples=200, deadline=None)
def test_ring_laws(t):
    a, b, c = t
    assert graded_mul(a, b) == graded_mul(b, a)
    assert graded_mul(graded_mul(a, b), c) == graded_mul(a, graded_mul(b, c))
    b2 = GradedElement.from_coords(b.d, b.degree, np.ones(len(bk_basis(b.d, b.degree)), dtype=np.uint8))
    assert graded_mul(a, b + b2) == graded_mul(a, b) + graded_mul(a, b2)


@given(graded_triple())
@settings(max_examples=200, deadline=None)
def test_omega_is_multiplicative(t):
    a, b, _ = t
    assert np.array_equal(omega_map(graded_mul(a, b)), omega_map(a) & omega_map(b))


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(st.just(d), st.integers(0, 2**d - 1), st.integers(0, 2**d - 1))))
def test_omega_is_additive(args):
    d, g, h = args
    assert omega(GroupElement(d, g ^ h)) == omega(GroupElement(d, g)) + omega(GroupElement(d, h))


def test_omega_values():
    # Omega(omega(g)) is the indicator of the characters not containing g
    vec = omega_map(omega(GroupElement(3, 0b011)))
    assert [int(v) for v in vec] == [delta(h, 0b011) for h in range(1, 8)]
    assert omega_map(GradedElement.two_power(3, 1)).all()


@given(graded())
def test_doubling_preserves_support(a):
    b = a.double()
    assert b.degree == a.degree + 1
    assert b.support == a.support


@pytest.mark.parametrize("d", range(1, 6))
def test_top_degrees_fill_the_space(d):
    n = 2**d - 1
    assert omega_Bk_subspace(d, d - 1) == Subspace.full(n)
    assert omega_Ak_subspace(d, d) == Subspace.full(n)


# --- relative subspace against the quotient-kernel definition -------------


def _annihilator_basis(d: int, subgroup: frozenset[int]) -> list[int]:
    killers = [h for h in range(1, 1 << d) if all(not delta(h, g) for g in subgroup)]
    basis: list[int] = []
    span = {0}
    for h in killers:
        if h not in span:
            basis.append(h)
            span |= {s ^ h for s in span}
    return basis


def _quotient_kernel(d: int, k: int, gens: list[int]) -> Subspace:
    """Omega of ker(A_k(G) -> A_k(G/G')), computed from monomial images."""
    n = 2**d - 1
    sub = span_elements(gens)
    chis = _annihilator_basis(d, sub)
    r = len(chis)
    mons = [s for s in bk_basis(d, k) if s]
    if r == 0:
        rows = np.array([omega_map(GradedElement.monomial(d, k, s)) for s in mons], dtype=np.uint8)
        return Subspace.span(n, rows)

    def image(s: int) -> GradedElement:
        out = GradedElement.two_power(r, k - bin(s).count("1"))
        for i in range(d):
            if s >> i & 1:
                bar = sum(1 << j for j, chi in enumerate(chis) if delta(chi, 1 << i))
                out = graded_mul(out, omega(GroupElement(r, bar)))
        return out

    images = np.array([image(s).coords() for s in mons], dtype=np.uint8)
    ker = kernel_basis(BitMatrix.from_dense(images.T.copy(), cols=len(mons)))
    rows = []
    for v in ker.vectors():
        a = GradedElement(d, k, frozenset(s for s, c in zip(mons, v) if c))
        rows.append(omega_map(a))
    if not rows:
        return Subspace.zero(n)
    return Subspace.span(n, np.array(rows, dtype=np.uint8))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_relative_subspace_matches_quotient_kernel(d):
    subgroups = set()
    for size in range(0, d + 1):
        for gens in combinations(range(1, 2**d), size):
            subgroups.add(span_elements(gens))
    for sub in subgroups:
        gens = sorted(g for g in sub if g)
        for k in range(1, d + 1):
            assert ak_rel_subspace(d, k, gens) == _quotient_kernel(d, k, gens), (sub, k)


def test_relative_subspace_examples():
    assert ak_rel_subspace(3, 2, []).dim == 0
    assert ak_rel_subspace(3, 2, [1, 2, 4]) == omega_Ak_subspace(3, 2)
    rel = ak_rel_subspace(3, 1, [1])
    assert rel.dim == 1
    assert rel.contains(omega_map(omega(GroupElement(3, 1))))


def test_relative_subspace_rejects_bad_level():
    with pytest.raises(ValueError):
        ak_rel_subspace(3, 0, [1])
    with pytest.raises(ValueError):
        ak_rel_subspace(3, 4, [1])


def test_inadmissible_monomial_rejected():
    with pytest.raises(ValueError):
        GradedElement(3, 1, frozenset({0b011}))
