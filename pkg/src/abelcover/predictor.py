"""Closed-form predictions for the 2-torsion of abelian branched covers.

Each prediction is tied to a case tag ("8.1", "8.2", "8.3", "8.7", "8.8")
that names the family of hypotheses it rests on.  The hypotheses are checked
on the graph itself; the two rigid cases (the d=4 ladder and the d=5
Petersen coloring) additionally need the matching family tag.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .enumeration import _gl_normal_form
from .families import genpetersen_skeleton, ladder_is_standard, mobius_d4, petersen_d5
from .gf2core import BitMatrix, rank
from .graph import (
    ColoredGraph,
    _UnionFind,
    betti,
    gamma_h,
    is_connected,
    is_unsplittable,
    special_circuits,
    validate,
)
from .graded import delta


@dataclass(frozen=True)
class TwoGroup:
    """Direct sum of cyclic groups Z/2^e, one for each listed exponent."""

    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(e < 1 for e in self.exponents):
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents, reverse=True)))

    @classmethod
    def of(cls, counts: dict[int, int]) -> "TwoGroup":
        """Build from {exponent: multiplicity}; zero multiplicities are dropped."""
        exps: list[int] = []
        for e, n in counts.items():
            if n < 0:
                raise ValueError(f"negative multiplicity for Z/2^{e}")
            exps += [e] * n
        return cls(tuple(exps))

    @property
    def order_log2(self) -> int:
        return sum(self.exponents)

    @property
    def exponent_log2(self) -> int:
        return max(self.exponents, default=0)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def multiply(self, e: int) -> "TwoGroup":
        """The subgroup 2^e X."""
        return TwoGroup(tuple(x - e for x in self.exponents if x > e))

    def quotient(self, e: int) -> "TwoGroup":
        """The quotient X / 2^e X."""
        return TwoGroup(tuple(min(x, e) for x in self.exponents))

    def __str__(self) -> str:
        if not self.exponents:
            return "0"
        parts = []
        for e, n in sorted(Counter(self.exponents).items(), reverse=True):
            parts.append(f"Z/{2 ** e}" + (f"^{n}" if n > 1 else ""))
        return " + ".join(parts)


def iso_determined(a: TwoGroup, b: TwoGroup, e: int) -> bool:
    """Compare 2^e X and X / 2^e X for both groups."""
    if e < 1:
        raise ValueError("e must be at least 1")
    return a.multiply(e) == b.multiply(e) and a.quotient(e) == b.quotient(e)


# --------------------------------------------------------------- dimensions


def seq_quotient_dim(d: int, b1: int, k: int) -> int:
    if not 1 <= k <= d - 1:
        raise ValueError(f"k={k} outside 1..{d - 1}")
    if b1 < d:
        raise ValueError("need b1 >= d")
    return comb(d - 2, k - 1) * (b1 - 1) - comb(d, k) + 1


def order_constraints(d: int, b1: int) -> tuple[int, int]:
    """(m, bound): the cokernel has order 2^m and exponent dividing 2^bound."""
    if not 2 <= d <= b1:
        raise ValueError("need b1 >= d >= 2")
    m = (1 << (d - 2)) * (b1 - 5) + d + 1
    if m != sum(seq_quotient_dim(d, b1, k) for k in range(1, d)):
        raise AssertionError("order formula disagrees with the summed quotient dimensions")
    return m, d - 1


def link_cover_dim(n: int, r: int, s: int, b0L: int) -> tuple[int, int]:
    """(dim H1 of the double cover, rank of the transfer image)."""
    if not 0 <= r <= s <= n:
        raise ValueError("need 0 <= r <= s <= n")
    if b0L < 0:
        raise ValueError("b0L must be non-negative")
    return b0L - 1 + 2 * n - r - s, n - s


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric GF(2) matrix whose diagonal holds the off-diagonal row sums."""

    entries: BitMatrix

    def __post_init__(self) -> None:
        m = self.entries.to_dense()
        if m.shape[0] != m.shape[1]:
            raise ValueError("linking matrix must be square")
        if not np.array_equal(m, m.T):
            raise ValueError("linking matrix must be symmetric")
        off = m.copy()
        np.fill_diagonal(off, 0)
        if not np.array_equal(np.diag(m), off.sum(axis=1) % 2):
            raise ValueError("diagonal must equal the row sums of the off-diagonal entries")

    @classmethod
    def from_off_diagonal(cls, size: int, pairs: dict[tuple[int, int], int]) -> "LinkingMatrix":
        m = np.zeros((size, size), dtype=np.uint8)
        for (i, j), v in pairs.items():
            if i == j:
                raise ValueError("diagonal entries are derived, not given")
            m[i, j] = m[j, i] = v & 1
        np.fill_diagonal(m, m.sum(axis=1) % 2)
        return cls(BitMatrix.from_dense(m, cols=size))

    @property
    def size(self) -> int:
        return self.entries.rows

    @property
    def rank(self) -> int:
        return rank(self.entries)


def mod2_cover_dim(b0: int, b1: int, lam: LinkingMatrix) -> int:
    return b0 + b1 - 3 - lam.rank


def ladder_lambda(rung_colors: Sequence[int], g0: int) -> LinkingMatrix:
    """Cyclic linking matrix with entry (j, j+1) equal to [h_j != g0]."""
    m = len(rung_colors)
    if m < 3:
        raise ValueError("the cyclic linking pattern needs at least three rungs")
    pairs = {(j, (j + 1) % m): int(h != g0) for j, h in enumerate(rung_colors)}
    return LinkingMatrix.from_off_diagonal(m, pairs)


def ladder_lambda_from_coloring(g: ColoredGraph, mask: int) -> tuple[LinkingMatrix, list[int]]:
    """Linking matrix read off from the colors around each rung of Γ_H.

    The components of Γ minus Γ_H index the matrix.  A rung of Γ_H joining
    two components contributes 1 exactly when the complementary edges at its
    two ends carry different colors.  Also returns the rung colors in order.
    """
    n = len(g.vertices) // 2
    if not ladder_is_standard(g, n):
        raise ValueError("not a standard Moebius ladder layout")
    colors = g.colors()
    g0 = 0
    for i in range(n):
        g0 ^= colors[f"t{i}"]
    if not delta(mask, g0):
        raise ValueError("the rung product must lie outside H")
    inside = gamma_h(g, mask)
    uf = _UnionFind(g.vertices)
    for e in g.edges:
        if e.id not in inside:
            uf.union(*e.ends)  # type: ignore[misc]
    roots = sorted({uf.find(v) for v in g.vertices})
    pos = {r: i for i, r in enumerate(roots)}
    rungs = [i for i in range(n) if f"t{i}" in inside]
    if len(rungs) < 3:
        raise ValueError("the cyclic linking pattern needs at least three rungs")
    inc = g.incidence()
    pairs: dict[tuple[int, int], int] = {}
    for i in rungs:
        ends = (f"v{i}", f"v{i + n}")
        outside = []
        for v in ends:
            outs = [eid for eid in inc[v] if eid not in inside]
            if len(outs) != 1:
                raise AssertionError("rung end does not meet exactly one complementary edge")
            outside.append(colors[outs[0]])
        a, b = (pos[uf.find(v)] for v in ends)
        key = (min(a, b), max(a, b))
        pairs[key] = pairs.get(key, 0) ^ int(outside[0] != outside[1])
    return LinkingMatrix.from_off_diagonal(len(roots), pairs), [colors[f"t{i}"] for i in rungs]


PETERSEN_COVER_COMPONENTS = ("L11", "L12", "L21", "L22", "L31", "L32")


def petersen_cover_lambda(cross: int = 0) -> LinkingMatrix:
    """Six-component linking matrix of the Petersen d=5 double cover.

    Components L1*, L2* link each L3* once; the four L1*-L2* links share the
    value ``cross``; components carrying the same color do not contribute.
    """
    idx = {name: i for i, name in enumerate(PETERSEN_COVER_COMPONENTS)}
    pairs = {}
    for a in ("L11", "L12", "L21", "L22"):
        for b in ("L31", "L32"):
            pairs[(idx[a], idx[b])] = 1
    for a in ("L11", "L12"):
        for b in ("L21", "L22"):
            pairs[(idx[a], idx[b])] = cross
    return LinkingMatrix.from_off_diagonal(6, pairs)


# -------------------------------------------------------------- predictions

ODD_PART = "sum_H H1(M_H)"


@dataclass(frozen=True)
class Prediction:
    theorem: str
    coker: TwoGroup
    relation: str
    also: tuple[str, ...] = field(default=())
    odd_part: str = ODD_PART

    def to_json(self) -> dict:
        doc = {
            "theorem": self.theorem,
            "odd_part": self.odd_part,
            "coker": list(self.coker.exponents),
            "relation": self.relation,
        }
        if self.also:
            doc["also"] = list(self.also)
        return doc


class HypothesesUnmet(ValueError):
    def __init__(self, reasons: list[str]):
        super().__init__("no prediction applies: " + "; ".join(reasons))
        self.reasons = reasons


class InconsistentPrediction(RuntimeError):
    pass


def coker_two_rank2(d: int, b1: int) -> TwoGroup:
    return TwoGroup.of({1: b1 - 2})


def coker_special_circuit(m: int, b1: int) -> TwoGroup:
    return TwoGroup.of({2: m - 3, 1: 2 * (b1 - m)})


def coker_ladder_d3(n: int, k: int) -> TwoGroup:
    if k == 0:
        return TwoGroup.of({2: n - 2})
    return TwoGroup.of({2: n - k - 1, 1: 2 * (k - 1)})


def coker_ladder_d4(n: int) -> TwoGroup:
    if n == 3:
        return TwoGroup((1,))
    return TwoGroup.of({3: 1, 1: 4 * n - 14})


def coker_petersen_d5() -> TwoGroup:
    return TwoGroup.of({4: 1, 2: 4, 1: 2})


def _all_gamma_connected(g: ColoredGraph) -> bool:
    return all(betti(g, gamma_h(g, h))[0] == 1 for h in range(1, 1 << g.d))


def _same_coloring_up_to_basis(g: ColoredGraph, ref: ColoredGraph) -> bool:
    if [(e.id, e.ends) for e in g.edges] != [(e.id, e.ends) for e in ref.edges]:
        return False
    return _gl_normal_form([e.color for e in g.edges]) == _gl_normal_form([e.color for e in ref.edges])


def _candidates(g: ColoredGraph) -> tuple[list[tuple[str, TwoGroup, str]], list[str]]:
    found: list[tuple[str, TwoGroup, str]] = []
    reasons: list[str] = []
    b1 = betti(g)[1]
    family = g.tags.get("family", "")

    if g.d == 2:
        if is_connected(g):
            found.append(("8.1", coker_two_rank2(2, b1), "beta_image_2^1"))
        else:
            reasons.append("8.1: graph is not connected")
    else:
        reasons.append("8.1: needs d = 2")

    if g.d == 3:
        circuits = special_circuits(g)
        if not is_unsplittable(g):
            reasons.append("8.2: coloring is splittable")
        elif not circuits:
            reasons.append("8.2: no special circuit")
        else:
            lengths = {len(c) for _, c in circuits}
            if len(lengths) > 1:
                raise InconsistentPrediction(f"special circuits of different lengths {sorted(lengths)}")
            m = lengths.pop()
            if not 3 <= m <= b1:
                raise InconsistentPrediction(f"special circuit length {m} outside 3..{b1}")
            found.append(("8.2", coker_special_circuit(m, b1), "beta_image_2^2"))

        n = len(g.vertices) // 2
        if n >= 2 and ladder_is_standard(g, n):
            colors = g.colors()
            g0 = 0
            for i in range(n):
                g0 ^= colors[f"t{i}"]
            if g0:
                k = sum(1 for i in range(n) if colors[f"t{i}"] == g0)
                found.append(("8.3", coker_ladder_d3(n, k), "beta_image_2^2"))
            else:
                reasons.append("8.3: product of rung colors is 1")
        else:
            reasons.append("8.3: not in Moebius ladder layout")
    else:
        reasons.append("8.2/8.3: need d = 3")

    if g.d == 4 and family == "mobius-d4":
        n = len(g.vertices) // 2
        if n < 3 or not ladder_is_standard(g, n):
            reasons.append("8.7: not in Moebius ladder layout with n >= 3")
        elif not _all_gamma_connected(g):
            reasons.append("8.7: some Γ_H is disconnected")
        elif not _same_coloring_up_to_basis(g, mobius_d4(n)):
            reasons.append("8.7: coloring differs from the mobius-d4 family")
        else:
            found.append(("8.7", coker_ladder_d4(n), "split"))
    else:
        reasons.append("8.7: needs d = 4 and family tag mobius-d4")

    if g.d == 5 and family == "petersen-d5":
        sk = genpetersen_skeleton(5, 2)
        if [(e.id, e.ends) for e in g.edges] != [(e.id, e.ends) for e in sk.edges]:
            reasons.append("8.8: not in Petersen layout")
        elif not _all_gamma_connected(g):
            reasons.append("8.8: some Γ_H is disconnected")
        elif not _same_coloring_up_to_basis(g, petersen_d5()):
            reasons.append("8.8: coloring differs from the petersen-d5 family")
        else:
            found.append(("8.8", coker_petersen_d5(), "split"))
    else:
        reasons.append("8.8: needs d = 5 and family tag petersen-d5")
    return found, reasons


def predict(g: ColoredGraph) -> Prediction:
    problems = validate(g)
    if problems:
        raise ValueError("invalid colored graph: " + "; ".join(problems))
    found, reasons = _candidates(g)
    if not found:
        raise HypothesesUnmet(reasons)
    cokers = {c for _, c, _ in found}
    if len(cokers) > 1:
        raise InconsistentPrediction("overlapping cases predict different groups: " + ", ".join(f"{t}: {c}" for t, c, _ in found))
    theorem, coker, relation = found[0]
    b1 = betti(g)[1]
    m, bound = order_constraints(g.d, b1)
    if coker.order_log2 != m or coker.exponent_log2 > bound:
        raise InconsistentPrediction(f"group {coker} violates the order/exponent constraints (2^{m}, 2^{bound})")
    return Prediction(theorem, coker, relation, tuple(t for t, _, _ in found[1:]))
