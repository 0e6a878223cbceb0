from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from abelcover.graded import GradedElement, GroupElement, graded_mul, omega
from abelcover.groupring import (
    GroupRingElement,
    IntegerLattice,
    eps,
    graded_class,
    jk_basis,
    jk_lattice,
    jk_member,
    jk_member_characters,
    jk_member_lattice,
)


def elements(d):
    return st.lists(st.integers(-8, 8), min_size=2**d, max_size=2**d).map(lambda c: GroupRingElement(d, tuple(c)))


def in_jk(d, k):
    return st.lists(st.integers(-3, 3), min_size=2**d, max_size=2**d).map(
        lambda cs: sum((b.scale(c) for b, c in zip(jk_basis(d, k), cs)), GroupRingElement.zero(d))
    )


def test_eps_examples():
    d = 3
    g = GroupRingElement.element(d, 0b101)
    assert eps(0b011, g) in (1, -1)
    assert eps(0, GroupRingElement.one_minus(d, 0b101)) == 0
    assert eps(0b010, GroupRingElement.one_minus(d, 0b101)) == 0
    assert eps(0b001, GroupRingElement.one_minus(d, 0b101)) == 2


def test_xor_convolution():
    a = GroupRingElement.element(2, 0b01, 3)
    b = GroupRingElement.element(2, 0b11, -2)
    assert (a * b).coeffs == GroupRingElement.element(2, 0b10, -6).coeffs


def test_jk_lattice_examples():
    assert jk_lattice(2, 0).index() == 1
    assert jk_lattice(1, 1).index() == 2
    for d in range(1, 5):
        for k in range(0, 5):
            expected = sum(comb(d, l) * max(k - l, 0) for l in range(d + 1))
            assert jk_lattice(d, k).index() == 2**expected


def test_jk_member_examples():
    for k in range(4):
        assert jk_member(GroupRingElement.scalar(2, 2**k), k)
    one_minus = GroupRingElement.one_minus(1, 1)
    assert jk_member(one_minus, 1)
    assert not jk_member(one_minus, 2)
    x1x2 = GroupRingElement.one_minus(3, 1) * GroupRingElement.one_minus(3, 2)
    assert jk_member(x1x2, 2)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_routes_agree_on_basis_products(d):
    pool = jk_basis(d, 1)
    for a, b in combinations_with_replacement(pool, 2):
        for k in range(d + 2):
            assert jk_member_characters(a * b, k) == jk_member_lattice(a * b, k)


@given(st.integers(1, 4).flatmap(lambda d: st.tuples(elements(d), st.integers(0, d + 1))))
@settings(max_examples=200, deadline=None)
def test_routes_agree_on_random_elements(args):
    lam, k = args
    assert jk_member_characters(lam, k) == jk_member_lattice(lam, k)


def _ik_lattice(d: int, k: int) -> IntegerLattice:
    gens = [GroupRingElement.one_minus(d, g) for g in range(1, 2**d)]
    vecs = []
    for combo in combinations_with_replacement(gens, k):
        p = GroupRingElement.scalar(d, 1)
        for f in combo:
            p = p * f
        vecs.append(p.coeffs)
    return IntegerLattice(2**d, vecs)


@pytest.mark.parametrize("d,k", [(d, k) for d in range(1, 4) for k in range(1, 5)] + [(4, 1), (4, 2)])
def test_jk_splits_as_ik_plus_scalars(d, k):
    ik = _ik_lattice(d, k)
    scal = GroupRingElement.scalar(d, 2**k).coeffs
    assert ik.rank == 2**d - 1
    assert not ik.contains(scal)
    assert IntegerLattice(2**d, list(ik.basis) + [scal]) == jk_lattice(d, k)
    doubled = IntegerLattice(2**d, [tuple(2 * c for c in v) for v in ik.basis])
    assert _ik_lattice(d, k + 1).contains_lattice(doubled)


def test_graded_class_examples():
    assert graded_class(GroupRingElement.scalar(3, 4), 2) == GradedElement.two_power(3, 2)
    for g in range(1, 8):
        assert graded_class(GroupRingElement.one_minus(3, g), 1) == omega(GroupElement(3, g))
    with pytest.raises(ValueError):
        graded_class(GroupRingElement.one_minus(3, 1), 2)


@given(st.integers(1, 3).flatmap(lambda d: st.tuples(st.integers(0, 2), st.integers(0, 2)).flatmap(
    lambda kl: st.tuples(st.just(kl), in_jk(d, kl[0]), in_jk(d, kl[1])))))
@settings(max_examples=150, deadline=None)
def test_graded_class_is_multiplicative(args):
    (k, l), lam, mu = args
    assert graded_class(lam * mu, k + l) == graded_mul(graded_class(lam, k), graded_class(mu, l))


def test_lattice_canonical_form_is_order_independent():
    a = IntegerLattice(3, [(2, 0, 0), (1, 1, 0), (0, 0, 4)])
    b = IntegerLattice(3, [(0, 0, 4), (3, 1, 0), (1, 1, 0)])
    assert a == b
    assert a.contains((1, -1, 0))
    assert not a.contains((1, 0, 0))
