"""Exact integer arithmetic in Z[G] and powers of the even-augmentation ideal.

This module is an oracle: it works with plain Python integers so that its
answers never depend on word sizes, and it decides membership in J^k in two
unrelated ways (character values versus lattice reduction).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graded import GradedElement, delta, popcount


@dataclass(frozen=True)
class GroupRingElement:
    """An element sum_g coeffs[g] * g of Z[G]; ``g`` is the element's bitmask."""

    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 1 << self.d:
            raise ValueError(f"expected {1 << self.d} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, d: int) -> "GroupRingElement":
        return cls(d, (0,) * (1 << d))

    @classmethod
    def scalar(cls, d: int, n: int) -> "GroupRingElement":
        return cls(d, (n,) + (0,) * ((1 << d) - 1))

    @classmethod
    def element(cls, d: int, g: int, coeff: int = 1) -> "GroupRingElement":
        c = [0] * (1 << d)
        c[g] = coeff
        return cls(d, tuple(c))

    @classmethod
    def one_minus(cls, d: int, g: int) -> "GroupRingElement":
        """The element 1 - g."""
        return cls.scalar(d, 1) - cls.element(d, g)

    def _same(self, other: "GroupRingElement") -> None:
        if self.d != other.d:
            raise ValueError(f"rank mismatch: {self.d} vs {other.d}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._same(other)
        return GroupRingElement(self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._same(other)
        return GroupRingElement(self.d, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.d, tuple(-a for a in self.coeffs))

    def scale(self, n: int) -> "GroupRingElement":
        return GroupRingElement(self.d, tuple(n * a for a in self.coeffs))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._same(other)
        out = [0] * (1 << self.d)
        for g, a in enumerate(self.coeffs):
            if a:
                for h, b in enumerate(other.coeffs):
                    if b:
                        out[g ^ h] += a * b
        return GroupRingElement(self.d, tuple(out))


def eps(mask: int, lam: GroupRingElement) -> int:
    """Signed character sum; ``mask == 0`` gives the plain augmentation."""
    if mask >> lam.d:
        raise ValueError("character does not fit the rank of the element")
    return sum(c if not delta(mask, g) else -c for g, c in enumerate(lam.coeffs))


def subset_product(d: int, subset: int) -> GroupRingElement:
    """The product of (1 - x_i) over the x_i in ``subset``."""
    out = GroupRingElement.scalar(d, 1)
    for i in range(d):
        if subset >> i & 1:
            out = out * GroupRingElement.one_minus(d, 1 << i)
    return out


def jk_basis(d: int, k: int) -> list[GroupRingElement]:
    """Basis of J^k: subset products, scaled by 2^(k-|S|) when |S| < k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return [subset_product(d, s).scale(1 << max(k - popcount(s), 0)) for s in range(1 << d)]


class IntegerLattice:
    """A sublattice of Z^n kept in Hermite normal form.

    Rows have strictly increasing pivot columns, positive pivots, and entries
    above each pivot reduced into ``[0, pivot)``.  Equal lattices have equal
    ``basis`` tuples.
    """

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[int]] = ()):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, list[int]] = {}
        for v in vectors:
            self._insert(list(v))
        self.basis = self._canonical()

    def _insert(self, v: list[int]) -> None:
        if len(v) != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        for col in range(self.ambient_dim):
            if v[col] == 0:
                continue
            row = self._rows.get(col)
            if row is None:
                if v[col] < 0:
                    v = [-x for x in v]
                self._rows[col] = v
                return
            p, q = row[col], v[col]
            g, a, b = _xgcd(p, q)
            new_row = [a * x + b * y for x, y in zip(row, v)]
            v = [(q // g) * x - (p // g) * y for x, y in zip(row, v)]
            self._rows[col] = new_row
        return

    def _canonical(self) -> tuple[tuple[int, ...], ...]:
        cols = sorted(self._rows)
        for idx, col in enumerate(cols):
            row = self._rows[col]
            if row[col] < 0:
                self._rows[col] = row = [-x for x in row]
            for upper in cols[:idx]:
                urow = self._rows[upper]
                f = urow[col] // row[col]
                if f:
                    self._rows[upper] = [x - f * y for x, y in zip(urow, row)]
        return tuple(tuple(self._rows[c]) for c in cols)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index(self) -> int:
        """Index in Z^n of a full-rank lattice (product of the pivots)."""
        if self.rank != self.ambient_dim:
            raise ValueError("lattice is not of full rank")
        out = 1
        for i, row in enumerate(self.basis):
            out *= row[i]
        return out

    def contains(self, v: Sequence[int]) -> bool:
        v = list(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        for row in self.basis:
            col = next(i for i, x in enumerate(row) if x)
            if v[col] % row[col]:
                return False
            f = v[col] // row[col]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return not any(v)

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(self.contains(r) for r in other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) > 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@lru_cache(maxsize=None)
def jk_lattice(d: int, k: int) -> IntegerLattice:
    return IntegerLattice(1 << d, (b.coeffs for b in jk_basis(d, k)))


def jk_member_characters(lam: GroupRingElement, k: int) -> bool:
    """Membership in J^k from character values, including the trivial character."""
    mod = 1 << k
    return all(eps(mask, lam) % mod == 0 for mask in range(1 << lam.d))


def jk_member_lattice(lam: GroupRingElement, k: int) -> bool:
    return jk_lattice(lam.d, k).contains(lam.coeffs)


def jk_member(lam: GroupRingElement, k: int) -> bool:
    """Membership in J^k; the two independent tests must agree."""
    if k < 0:
        raise ValueError("k must be non-negative")
    a = jk_member_characters(lam, k)
    b = jk_member_lattice(lam, k)
    if a != b:
        raise AssertionError(f"membership tests disagree for {lam} at k={k}")
    return a


def subset_product_coords(lam: GroupRingElement) -> list[int]:
    """Coefficients of ``lam`` over the subset products prod_{i in S}(1 - x_i).

    Inverts the expansion g = prod_{i in g}(1 - (1 - x_i)) by a Moebius sum.
    """
    n = 1 << lam.d
    out = []
    for s in range(n):
        total = sum(lam.coeffs[t] for t in range(n) if t & s == s)
        out.append(-total if popcount(s) & 1 else total)
    return out


def graded_class(lam: GroupRingElement, k: int) -> GradedElement:
    """The image of ``lam`` in B_k = J^k / J^(k+1), in the squarefree monomial basis."""
    if not jk_member(lam, k):
        raise ValueError(f"element is not in J^{k}")
    support = set()
    for s, c in enumerate(subset_product_coords(lam)):
        size = popcount(s)
        if size > k:
            continue
        scale = 1 << (k - size)
        q, r = divmod(c, scale)
        if r:
            raise AssertionError("change of basis produced a non-integral coefficient")
        if q & 1:
            support.add(s)
    return GradedElement(lam.d, k, frozenset(support))
