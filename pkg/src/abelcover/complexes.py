"""Constrained GF(2) chain complexes C'(Γ|k) of a colored graph.

A chain is a set of (cell, character) coordinates.  Coordinate (σ, H) exists
only when H does not contain the stabilizer G_σ; at level k the vector of
coefficients on each cell must also lie in Omega(A_k(G, G_σ)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .gf2core import BitMatrix, Subspace, kernel_basis, matmul, rank, solve
from .graded import GradedElement, ak_rel_subspace, bk_basis, delta, dim_Bk, omega_map
from .graph import ColoredGraph, betti, gamma_h, validate


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    stabilizer: tuple[int, ...]
    faces: tuple[str, ...] = ()
    edge: str | None = None
    color: int = 0


@dataclass(frozen=True)
class ConstrainedChain:
    """A GF(2) chain given by its nonzero (cell id, character mask) coordinates."""

    k: int
    dim: int
    entries: frozenset[tuple[str, int]]

    def __add__(self, other: "ConstrainedChain") -> "ConstrainedChain":
        if (self.k, self.dim) != (other.k, other.dim):
            raise ValueError("chains live in different groups")
        return ConstrainedChain(self.k, self.dim, self.entries ^ other.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_json(self, d: int) -> dict:
        from .graded import format_bits

        items = sorted(self.entries, key=lambda t: (t[0], t[1]))
        return {"k": self.k, "entries": [{"simplex": s, "H": format_bits(h, d)} for s, h in items]}


def _subdivision_count(g: ColoredGraph) -> dict[str, int]:
    pairs: dict[frozenset, int] = {}
    for e in g.edges:
        if e.ends is not None:
            key = frozenset(e.ends)
            pairs[key] = pairs.get(key, 0) + 1
    out = {}
    for e in g.edges:
        if e.ends is None:
            out[e.id] = 3
        elif e.is_loop or pairs[frozenset(e.ends)] > 1:
            out[e.id] = 1
        else:
            out[e.id] = 0
    return out


class GraphComplex:
    """Cell structure of Γ with the (cell, character) coordinate spaces."""

    def __init__(self, source: ColoredGraph, extra_subdivision: int = 0):
        problems = validate(source)
        if problems:
            raise ValueError("invalid colored graph: " + "; ".join(problems))
        self.source = source
        self.d = source.d
        self.extra_subdivision = extra_subdivision
        cells0: list[Cell] = []
        cells1: list[Cell] = []
        groups: dict[str, set[int]] = {v: set() for v in source.vertices}
        for e in source.edges:
            if e.ends is not None:
                for v in e.ends:
                    groups[v].add(e.color)
        for v in source.vertices:
            cells0.append(Cell(v, 0, tuple(sorted(groups[v]))))
        counts = _subdivision_count(source)
        for e in source.edges:
            p = counts[e.id] + extra_subdivision
            if e.ends is None and p < 3:
                p = 3
            pts = [f"{e.id}@{j}" for j in range(p)]
            for pt in pts:
                cells0.append(Cell(pt, 0, (e.color,), edge=e.id))
            if e.ends is None:
                chain = pts + [pts[0]]
            else:
                chain = [e.ends[0]] + pts + [e.ends[1]]
            pieces = len(chain) - 1
            for j in range(pieces):
                cid = e.id if pieces == 1 else f"{e.id}#{j}"
                cells1.append(Cell(cid, 1, (e.color,), (chain[j], chain[j + 1]), e.id, e.color))
        self.cells0 = tuple(cells0)
        self.cells1 = tuple(cells1)
        self.cells = {c.id: c for c in cells0 + cells1}
        self.coords: dict[int, list[tuple[str, int]]] = {}
        self.index: dict[int, dict[tuple[str, int], int]] = {}
        for dim, cells in ((0, self.cells0), (1, self.cells1)):
            lst = [(c.id, h) for c in cells for h in self._admissible(c)]
            self.coords[dim] = lst
            self.index[dim] = {key: i for i, key in enumerate(lst)}
        self._spaces: dict[tuple[int, int], Subspace] = {}

    def _admissible(self, cell: Cell) -> list[int]:
        return [h for h in range(1, 1 << self.d) if any(delta(h, g) for g in cell.stabilizer)]

    # ---------------------------------------------------------------- spaces

    @cached_property
    def boundary(self) -> BitMatrix:
        """Matrix of the boundary map, rows indexed by 0-coordinates."""
        dense = np.zeros((len(self.coords[0]), len(self.coords[1])), dtype=np.uint8)
        idx0 = self.index[0]
        for j, (cid, h) in enumerate(self.coords[1]):
            for face in self.cells[cid].faces:
                dense[idx0[(face, h)], j] ^= 1
        return BitMatrix.from_dense(dense, cols=len(self.coords[1]))

    def _check_k(self, k: int) -> None:
        if not 1 <= k <= self.d:
            raise ValueError(f"level k={k} outside 1..{self.d}")

    def constrained_space(self, k: int, dim: int) -> Subspace:
        """C'_dim(Γ|k) inside the full coordinate space."""
        self._check_k(k)
        key = (k, dim)
        if key not in self._spaces:
            cells = self.cells0 if dim == 0 else self.cells1
            n = len(self.coords[dim])
            rows = []
            for c in cells:
                local = ak_rel_subspace(self.d, k, c.stabilizer).vectors()
                if local.shape[0] == 0:
                    continue
                cols = [self.index[dim][(c.id, h)] for h in self._admissible(c)]
                block = np.zeros((local.shape[0], n), dtype=np.uint8)
                block[:, cols] = local[:, [h - 1 for h in self._admissible(c)]]
                rows.append(block)
            dense = np.vstack(rows) if rows else np.zeros((0, n), dtype=np.uint8)
            self._spaces[key] = Subspace.span(n, dense)
        return self._spaces[key]

    def _boundary_images(self, k: int) -> BitMatrix:
        """Boundaries of the basis of C'_1(Γ|k), one per row."""
        basis = self.constrained_space(k, 1).basis
        return matmul(basis, self.boundary.transpose())

    def betti(self, k: int) -> tuple[int, int]:
        self._check_k(k)
        r = rank(self._boundary_images(k))
        return self.constrained_space(k, 0).dim - r, self.constrained_space(k, 1).dim - r

    def cycles(self, k: int) -> Subspace:
        """Z'_1(Γ|k) in coordinates."""
        images = self._boundary_images(k)
        ker = kernel_basis(images.transpose())
        basis = self.constrained_space(k, 1).basis
        return Subspace.span(len(self.coords[1]), matmul(ker.basis, basis))

    def fundamental_chain(self, h: int) -> np.ndarray:
        """The chain with coefficient 1 on every cell of Γ_H at character ``h``."""
        vec = np.zeros(len(self.coords[1]), dtype=np.uint8)
        for c in self.cells1:
            if delta(h, c.color):
                vec[self.index[1][(c.id, h)]] = 1
        return vec

    def w_space(self, k: int) -> Subspace:
        """Chains of C'_1(Γ|k) constant on each whole Γ_H."""
        n = len(self.coords[1])
        rows = [self.fundamental_chain(h) for h in range(1, 1 << self.d)]
        full = Subspace.span(n, np.array(rows, dtype=np.uint8))
        return full.intersection(self.constrained_space(k, 1))

    # --------------------------------------------------------------- chains

    def vector(self, chain: ConstrainedChain) -> np.ndarray:
        vec = np.zeros(len(self.coords[chain.dim]), dtype=np.uint8)
        idx = self.index[chain.dim]
        for key in chain.entries:
            if key not in idx:
                raise ValueError(f"coordinate {key} is not admissible")
            vec[idx[key]] ^= 1
        return vec

    def chain(self, vec: Sequence[int] | np.ndarray, k: int, dim: int) -> ConstrainedChain:
        coords = self.coords[dim]
        return ConstrainedChain(k, dim, frozenset(coords[i] for i in np.flatnonzero(np.asarray(vec))))

    def boundary_of(self, chain: ConstrainedChain) -> ConstrainedChain:
        if chain.dim != 1:
            raise ValueError("only 1-chains have a boundary here")
        return self.chain(self.boundary.matvec(self.vector(chain)), chain.k, 0)

    def is_admissible(self, chain: ConstrainedChain) -> bool:
        try:
            vec = self.vector(chain)
        except ValueError:
            return False
        return self.constrained_space(chain.k, chain.dim).contains(vec)


def build(g: ColoredGraph, extra_subdivision: int = 0) -> GraphComplex:
    return GraphComplex(g, extra_subdivision)


def betti_gk(gc: GraphComplex, k: int) -> tuple[int, int]:
    return gc.betti(k)


def predicted_euler(d: int, k: int, chi: int) -> int:
    """-C(d-2, k-1) * chi(Γ), with C(n, r) = 0 for r > n."""
    return -comb(d - 2, k - 1) * chi if d >= 2 else 0


def euler_check(gc: GraphComplex, k: int) -> bool:
    b0, b1 = gc.betti(k)
    return b0 - b1 == predicted_euler(gc.d, k, gc.source.euler_characteristic)


def iota_k(gc: GraphComplex, b: GradedElement, k: int | None = None) -> ConstrainedChain:
    """The cycle whose (σ, H) coefficient is δ_H(g_σ) times Omega(b) at H."""
    k = b.degree + 1 if k is None else k
    if b.degree != k - 1:
        raise ValueError(f"expected an element of degree {k - 1}, got {b.degree}")
    if b.d != gc.d:
        raise ValueError("rank mismatch")
    gc._check_k(k)
    om = omega_map(b)
    entries = frozenset(
        (c.id, h) for c in gc.cells1 for h in range(1, 1 << gc.d) if delta(h, c.color) and om[h - 1]
    )
    return ConstrainedChain(k, 1, entries)


def iota_image(gc: GraphComplex, k: int) -> Subspace:
    rows = [gc.vector(iota_k(gc, GradedElement.monomial(gc.d, k - 1, s), k)) for s in bk_basis(gc.d, k - 1)]
    return Subspace.span(len(gc.coords[1]), np.array(rows, dtype=np.uint8))


def taut_by_dimension(gc: GraphComplex, k: int) -> bool:
    return gc.betti(k)[1] == dim_Bk(gc.d, k - 1)


def taut_by_w_space(gc: GraphComplex, k: int) -> bool:
    return gc.w_space(k) == gc.cycles(k)


def is_k_taut(gc: GraphComplex, k: int) -> bool:
    a = taut_by_dimension(gc, k)
    b = taut_by_w_space(gc, k)
    if a != b:
        raise AssertionError(f"tautness tests disagree at k={k}")
    return a


def is_taut(gc: GraphComplex) -> bool:
    return is_k_taut(gc, gc.d - 1) if gc.d >= 2 else True


def taut_levels(gc: GraphComplex) -> dict[int, bool]:
    return {k: is_k_taut(gc, k) for k in range(1, gc.d + 1)}


# ------------------------------------------------------------ witnesses


def _product(gc: GraphComplex, edge_ids: Iterable[str]) -> int:
    idx = gc.source.edge_index()
    out = 0
    for e in edge_ids:
        out ^= idx[e].color
    return out


def high_order_witness(gc: GraphComplex, edges: Sequence[str], vertices: Sequence[str]) -> ConstrainedChain:
    """The 0-chain sum_i sum_H δ_H(g_i) v_i H at level d-1."""
    if len(edges) != len(vertices):
        raise ValueError("need one vertex per edge")
    if len(set(edges)) != len(edges):
        raise ValueError("edges must be distinct")
    idx = gc.source.edge_index()
    for e, v in zip(edges, vertices):
        if e not in idx:
            raise KeyError(e)
        ends = idx[e].ends
        if ends is None or v not in ends:
            raise ValueError(f"vertex {v!r} is not an end of edge {e!r}")
    if _product(gc, edges):
        raise ValueError("the product of the chosen edge colors is not 1")
    entries: set[tuple[str, int]] = set()
    for e, v in zip(edges, vertices):
        g = idx[e].color
        for h in range(1, 1 << gc.d):
            if delta(h, g):
                entries ^= {(v, h)}
    chain = ConstrainedChain(gc.d - 1, 0, frozenset(entries))
    if not gc.is_admissible(chain):
        raise AssertionError("witness chain fails the level constraint")
    return chain


def h0_class_is_zero(gc: GraphComplex, z: ConstrainedChain, k: int | None = None) -> bool:
    """True iff z is the boundary of some chain of C'_1(Γ|k)."""
    k = z.k if k is None else k
    gc._check_k(k)
    vec = gc.vector(z)
    if not gc.constrained_space(k, 0).contains(vec):
        raise ValueError(f"chain is not in C'_0 at level {k}")
    images = gc._boundary_images(k)
    return solve(images.transpose(), vec) is not None


def _phi_value(gc: GraphComplex, c: np.ndarray, designated: Iterable[str]) -> int:
    cells = set(designated)
    total = 0
    for i, (cid, _h) in enumerate(gc.coords[1]):
        if cid in cells and c[i]:
            total ^= 1
    return total


def phi_invariant(gc: GraphComplex, z: ConstrainedChain, designated: Sequence[str]) -> int:
    """Solve ∂c = z in C'(Γ|d) and sum the coefficients of c on the designated edges."""
    g = gc.source
    for h in range(1, 1 << gc.d):
        if betti(g, gamma_h(g, h))[0] != 1:
            raise ValueError("phi needs every Γ_H to be connected")
    if _product(gc, designated):
        raise ValueError("the product of the designated edge colors is not 1")
    for e in designated:
        if e not in gc.cells or gc.cells[e].dim != 1:
            raise ValueError(f"designated edge {e!r} is not a single cell")
    vec = gc.vector(z)
    if not gc.constrained_space(gc.d, 0).contains(vec):
        raise ValueError("chain is not admissible at level d")
    c = solve(gc.boundary, vec)
    if c is None:
        raise ValueError("chain does not bound in C'(Γ|d)")
    return _phi_value(gc, c, designated)


def chain_from_edges(gc: GraphComplex, k: int, per_character: dict[int, Iterable[str]]) -> ConstrainedChain:
    """1-chain with coefficient 1 at (e, H) for each edge e listed under H."""
    entries: set[tuple[str, int]] = set()
    for h, eids in per_character.items():
        for e in eids:
            entries ^= {(e, h)}
    return ConstrainedChain(k, 1, frozenset(entries))


# --------------------------------------------------------- ladder parity


def _ladder_incidence(m: int, circuit: Sequence[str]) -> tuple[BitMatrix, list[str]]:
    verts = [f"v{i}" for i in range(2 * m)]
    vidx = {v: i for i, v in enumerate(verts)}
    dense = np.zeros((2 * m, len(circuit)), dtype=np.uint8)
    for j, eid in enumerate(circuit):
        i = int(eid[1:])
        if eid[0] == "s":
            a, b = i, (i + 1) % (2 * m)
        else:
            a, b = i, i + m
        dense[vidx[f"v{a}"], j] ^= 1
        dense[vidx[f"v{b}"], j] ^= 1
    return BitMatrix.from_dense(dense, cols=len(circuit)), verts


def through_circuits(m: int) -> list[list[str]]:
    """The two circuits of the m-rung ladder that use every rung."""
    rungs = [f"t{i}" for i in range(m)]
    return [rungs + [f"s{i}" for i in range(parity, 2 * m, 2)] for parity in (0, 1)]


def mob_parity(m: int, indices: Sequence[int]) -> int:
    """Sum of designated-rung coefficients of chains bounding sum_j v_(i_j).

    Each chain lives in one of the two circuits through all rungs; the result
    is checked to be independent of the particular solution.
    """
    idx = list(indices)
    k = len(idx)
    if idx != sorted(set(idx)) or any(not 0 <= i < m for i in idx):
        raise ValueError("indices must be strictly increasing in [0, m)")
    if not ((m % 2 == 1 and k % 2 == 0) or (m == 2 and k == 2)):
        raise ValueError("need m odd with an even number of indices, or m = k = 2")
    target = np.zeros(2 * m, dtype=np.uint8)
    for i in idx:
        target[i] ^= 1
    designated = {f"t{i}" for i in idx}
    total = 0
    for circuit in through_circuits(m):
        mat, _ = _ladder_incidence(m, circuit)
        values = set()
        for order in (list(range(len(circuit))), list(reversed(range(len(circuit))))):
            perm = BitMatrix.from_dense(mat.to_dense()[:, order], cols=len(circuit))
            sol = solve(perm, target)
            if sol is None:
                raise ValueError("boundary equation has no solution")
            c = np.zeros(len(circuit), dtype=np.uint8)
            c[order] = sol
            values.add(sum(int(c[j]) for j, eid in enumerate(circuit) if eid in designated) % 2)
        if len(values) != 1:
            raise AssertionError("parity depends on the choice of chain")
        total ^= values.pop()
    return total
