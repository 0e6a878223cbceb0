"""The group G = (Z/2)^d, its characters, and the graded ring B(G).

Group elements and characters are stored as d-bit integers where bit ``i``
is the coefficient of the basis element ``x_{i+1}``.  A homogeneous element of
``B_k`` is a set of squarefree monomials ``S`` (subset bitmasks) with
``|S| <= min(k, d)``; the monomial ``S`` in degree ``k`` stands for
``[2]^(k-|S|) * prod_{i in S} omega(x_i)``.

Omega vectors are uint8 numpy arrays of length ``2^d - 1`` whose coordinate
``j`` belongs to the character with mask ``j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .gf2core import BitMatrix, Subspace

MAX_RANK = 20


def popcount(x: int) -> int:
    return bin(x).count("1")


def delta(mask: int, g: int) -> int:
    """Value of the character with ``mask`` on the element ``g`` (0 or 1)."""
    return popcount(mask & g) & 1


def parse_bits(text: str) -> int:
    """Read a bitstring over x1..xd ("101" means x1 x3)."""
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a bitstring: {text!r}")
    return sum(1 << i for i, c in enumerate(text) if c == "1")


def format_bits(value: int, d: int) -> str:
    return "".join("1" if value >> i & 1 else "0" for i in range(d))


def _check_rank(d: int) -> None:
    if not 0 <= d <= MAX_RANK:
        raise ValueError(f"rank d={d} outside 0..{MAX_RANK}")


@dataclass(frozen=True)
class GroupElement:
    d: int
    bits: int

    def __post_init__(self) -> None:
        _check_rank(self.d)
        if not 0 <= self.bits < 1 << self.d:
            raise ValueError(f"element {self.bits} does not fit rank {self.d}")

    @classmethod
    def identity(cls, d: int) -> "GroupElement":
        return cls(d, 0)

    @classmethod
    def basis(cls, d: int, i: int) -> "GroupElement":
        """The generator x_i, with i counted from 1."""
        if not 1 <= i <= d:
            raise ValueError(f"no basis element x_{i} in rank {d}")
        return cls(d, 1 << (i - 1))

    @classmethod
    def parse(cls, text: str) -> "GroupElement":
        return cls(len(text), parse_bits(text))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.d != other.d:
            raise ValueError("rank mismatch")
        return GroupElement(self.d, self.bits ^ other.bits)

    def is_identity(self) -> bool:
        return self.bits == 0

    def __str__(self) -> str:
        return format_bits(self.bits, self.d)


@dataclass(frozen=True)
class Character:
    """An index-2 subgroup H, held as the functional whose kernel is H."""

    d: int
    mask: int

    def __post_init__(self) -> None:
        _check_rank(self.d)
        if not 0 < self.mask < 1 << self.d:
            raise ValueError("character mask must be nonzero and fit the rank")

    @classmethod
    def parse(cls, text: str) -> "Character":
        return cls(len(text), parse_bits(text))

    @property
    def index(self) -> int:
        """Coordinate of this character in an omega vector."""
        return self.mask - 1

    def __call__(self, g: GroupElement) -> int:
        return char_value(self, g)

    def __str__(self) -> str:
        return format_bits(self.mask, self.d)


def char_value(h: Character, g: GroupElement) -> int:
    if h.d != g.d:
        raise ValueError(f"rank mismatch: character of rank {h.d}, element of rank {g.d}")
    return delta(h.mask, g.bits)


def characters(d: int) -> list[Character]:
    return [Character(d, m) for m in range(1, 1 << d)]


def span_elements(gens: Iterable[int]) -> frozenset[int]:
    """All elements of the subgroup generated by ``gens`` (as bitmasks)."""
    elems = {0}
    for g in gens:
        if g not in elems:
            elems |= {e ^ g for e in elems}
    return frozenset(elems)


def group_rank(gens: Iterable[int]) -> int:
    return len(span_elements(gens)).bit_length() - 1


# ---------------------------------------------------------------- graded ring


def dim_Bk(d: int, k: int) -> int:
    if k < 0:
        raise ValueError("degree must be non-negative")
    return sum(comb(d, l) for l in range(min(k, d) + 1))


def dim_Ak(d: int, k: int) -> int:
    if k < 1:
        raise ValueError("A_k is defined for k >= 1")
    return dim_Bk(d, k) - 1


@lru_cache(maxsize=None)
def bk_basis(d: int, k: int) -> tuple[int, ...]:
    """Admissible monomials of B_k ordered by size, then by mask."""
    top = min(k, d)
    return tuple(
        sum(1 << i for i in c) for l in range(top + 1) for c in combinations(range(d), l)
    )


@dataclass(frozen=True)
class GradedElement:
    """Homogeneous element of B_k over GF(2), stored as its monomial support."""

    d: int
    degree: int
    support: frozenset[int]

    def __post_init__(self) -> None:
        _check_rank(self.d)
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        cap = min(self.degree, self.d)
        for s in self.support:
            if s >> self.d or popcount(s) > cap:
                raise ValueError(f"monomial {s:b} not admissible in degree {self.degree}")

    @classmethod
    def zero(cls, d: int, k: int) -> "GradedElement":
        return cls(d, k, frozenset())

    @classmethod
    def two_power(cls, d: int, k: int) -> "GradedElement":
        """The element [2]^k."""
        return cls(d, k, frozenset({0}))

    @classmethod
    def monomial(cls, d: int, k: int, subset: int) -> "GradedElement":
        return cls(d, k, frozenset({subset}))

    @classmethod
    def from_coords(cls, d: int, k: int, coords: Iterable[int]) -> "GradedElement":
        basis = bk_basis(d, k)
        coords = list(coords)
        if len(coords) != len(basis):
            raise ValueError("coordinate vector has the wrong length")
        return cls(d, k, frozenset(s for s, c in zip(basis, coords) if c & 1))

    def coords(self) -> np.ndarray:
        basis = bk_basis(self.d, self.degree)
        return np.array([1 if s in self.support else 0 for s in basis], dtype=np.uint8)

    def in_A(self) -> bool:
        return self.degree >= 1 and 0 not in self.support

    def is_zero(self) -> bool:
        return not self.support

    def __add__(self, other: "GradedElement") -> "GradedElement":
        if (self.d, self.degree) != (other.d, other.degree):
            raise ValueError("can only add elements of equal rank and degree")
        return GradedElement(self.d, self.degree, self.support ^ other.support)

    def __mul__(self, other: "GradedElement") -> "GradedElement":
        return graded_mul(self, other)

    def double(self) -> "GradedElement":
        """Multiply by [2]_1."""
        return GradedElement(self.d, self.degree + 1, self.support)


def omega(g: GroupElement) -> GradedElement:
    """The degree-one element omega(g) = sum of omega(x_i) over the x_i in g."""
    return GradedElement(g.d, 1, frozenset(1 << i for i in range(g.d) if g.bits >> i & 1))


def graded_mul(a: GradedElement, b: GradedElement) -> GradedElement:
    if a.d != b.d:
        raise ValueError(f"rank mismatch: {a.d} vs {b.d}")
    out: set[int] = set()
    for s in a.support:
        for t in b.support:
            out ^= {s | t}
    return GradedElement(a.d, a.degree + b.degree, frozenset(out))


@lru_cache(maxsize=None)
def _char_masks(d: int) -> np.ndarray:
    return np.arange(1, 1 << d, dtype=np.int64)


def omega_monomial(d: int, subset: int) -> np.ndarray:
    """Omega of a single monomial: 1 at H exactly when every x_i in it lies outside H."""
    masks = _char_masks(d)
    return ((masks & subset) == subset).astype(np.uint8)


def omega_map(a: GradedElement) -> np.ndarray:
    vec = np.zeros((1 << a.d) - 1, dtype=np.uint8)
    for s in a.support:
        vec ^= omega_monomial(a.d, s)
    return vec


@lru_cache(maxsize=None)
def omega_matrix(d: int, k: int, a_only: bool = False) -> BitMatrix:
    """Rows are omega images of the B_k basis (or of A_k when ``a_only``)."""
    basis = [s for s in bk_basis(d, k) if not (a_only and s == 0)]
    rows = np.array([omega_monomial(d, s) for s in basis], dtype=np.uint8)
    return BitMatrix.from_dense(rows.reshape(len(basis), (1 << d) - 1), cols=(1 << d) - 1)


@lru_cache(maxsize=None)
def omega_Bk_subspace(d: int, k: int) -> Subspace:
    return Subspace.span((1 << d) - 1, omega_matrix(d, k))


@lru_cache(maxsize=None)
def omega_Ak_subspace(d: int, k: int) -> Subspace:
    """Omega(A_k), obtained as the annihilator of Omega(B_{d-k-1}) below degree d."""
    if not 1 <= k <= d:
        raise ValueError(f"k={k} outside 1..{d}")
    n = (1 << d) - 1
    if k == d:
        return Subspace.full(n)
    return omega_Bk_subspace(d, d - k - 1).orthogonal_complement()


@lru_cache(maxsize=None)
def _ak_rel(d: int, k: int, subgroup: frozenset[int]) -> Subspace:
    n = (1 << d) - 1
    gens = [g for g in subgroup if g]
    alive = [j for j in range(n) if any(delta(j + 1, g) for g in gens)]
    coord = Subspace.span(n, np.eye(n, dtype=np.uint8)[alive]) if alive else Subspace.zero(n)
    return omega_Ak_subspace(d, k).intersection(coord)


def ak_rel_subspace(d: int, k: int, gens: Iterable[GroupElement | int]) -> Subspace:
    """Omega(A_k(G, G')) for G' generated by ``gens``."""
    if not 1 <= k <= d:
        raise ValueError(f"k={k} outside 1..{d}")
    bits = []
    for g in gens:
        if isinstance(g, GroupElement):
            if g.d != d:
                raise ValueError("rank mismatch")
            g = g.bits
        bits.append(int(g))
    return _ak_rel(d, k, span_elements(bits))
