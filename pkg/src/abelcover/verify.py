"""Verification suites run by ``abelcover verify`` and by the acceptance tests.

Every suite returns a list of :class:`Check` records sorted by case id.  A
suite never stops at the first failure; exceptions raised inside a case are
recorded as failures with the exception text as the counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterator

import numpy as np

from . import families as fam
from .complexes import (
    ConstrainedChain,
    build,
    chain_from_edges,
    euler_check,
    h0_class_is_zero,
    high_order_witness,
    mob_parity,
    phi_invariant,
    taut_levels,
)
from .enumeration import count_colorings, enumerate_colorings
from .gf2core import Subspace, rank
from .graded import (
    bk_basis,
    delta,
    dim_Ak,
    dim_Bk,
    omega_Ak_subspace,
    omega_Bk_subspace,
    omega_matrix,
    omega_monomial,
)
from .graph import ColoredGraph, Edge, betti, gamma_h, has_bridge, is_unsplittable, special_circuits, validate, wye_delta
from .groupring import (
    GroupRingElement,
    graded_class,
    jk_basis,
    jk_member_characters,
    jk_member_lattice,
)
from .graded import graded_mul
from .predictor import (
    coker_ladder_d3,
    coker_ladder_d4,
    coker_petersen_d5,
    coker_special_circuit,
    ladder_lambda,
    ladder_lambda_from_coloring,
    mod2_cover_dim,
    order_constraints,
    petersen_cover_lambda,
    predict,
    seq_quotient_dim,
)


@dataclass(frozen=True)
class Check:
    case: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        doc = {"case": self.case, "ok": self.ok}
        if self.detail:
            doc["detail"] = self.detail
        return doc


def _run(case: str, fn: Callable[[], bool | tuple[bool, str]]) -> Check:
    try:
        out = fn()
    except Exception as exc:  # a crash inside a case is a failing case
        return Check(case, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Check(case, bool(out[0]), out[1])
    return Check(case, bool(out))


def _expect(got, want) -> tuple[bool, str]:
    return got == want, f"got {got!r}, expected {want!r}"


# ------------------------------------------------------------ graded ring


def suite_graded_ring(d_max: int = 6) -> list[Check]:
    checks = []
    for d in range(1, d_max + 1):
        n = (1 << d) - 1
        for k in range(0, d):
            checks.append(_run(f"d{d}/B{k}/injective", lambda d=d, k=k: _expect(rank(omega_matrix(d, k)), dim_Bk(d, k))))
        for k in range(1, d + 3):
            checks.append(_run(f"d{d}/A{k}/injective", lambda d=d, k=k: _expect(rank(omega_matrix(d, k, True)), dim_Ak(d, k))))
        checks.append(_run(f"d{d}/B{d - 1}/full", lambda d=d, n=n: omega_Bk_subspace(d, d - 1) == Subspace.full(n)))
        checks.append(_run(f"d{d}/A{d}/full", lambda d=d, n=n: Subspace.span(n, omega_matrix(d, d, True)) == Subspace.full(n)))
        for k in range(1, d):
            checks.append(_run(f"d{d}/orthog{k}", lambda d=d, k=k: _orthogonality(d, k)))
        for k in range(0, d + 2):
            checks.append(_run(f"d{d}/double{k}", lambda d=d, k=k: _doubling(d, k)))
    checks.append(_run("dims/d3", lambda: _expect(tuple(dim_Bk(3, k) for k in range(4)), (1, 4, 7, 8))))
    for d in range(1, d_max + 1):
        checks.append(_run(f"dims/basis{d}", lambda d=d: all(len(bk_basis(d, k)) == dim_Bk(d, k) for k in range(d + 2))))
    return sorted(checks, key=lambda c: c.case)


def _orthogonality(d: int, k: int) -> tuple[bool, str]:
    n = (1 << d) - 1
    a = omega_matrix(d, k, True).to_dense().astype(np.int64)
    b = omega_matrix(d, d - k - 1).to_dense().astype(np.int64)
    if ((a @ b.T) % 2).any():
        return False, "non-zero pairing between A_k and B_(d-k-1)"
    direct = Subspace.span(n, omega_matrix(d, k, True))
    if direct.dim + omega_Bk_subspace(d, d - k - 1).dim != n:
        return False, "dimensions do not add up to 2^d - 1"
    return direct == omega_Ak_subspace(d, k), "direct span differs from the annihilator"


def _doubling(d: int, k: int) -> tuple[bool, str]:
    # [2]_1 sends the monomial S of degree k to the same monomial in degree k+1
    src = omega_matrix(d, k).to_dense()
    img = np.array([omega_monomial(d, s) for s in bk_basis(d, k)], dtype=np.uint8)
    if not np.array_equal(src, img):
        return False, "Omega of the degree-k basis is not degree independent"
    inj = rank(omega_matrix(d, k)) == dim_Bk(d, k) if k < d else True
    surj = dim_Bk(d, k) == dim_Bk(d, k + 1) if k >= d else True
    return inj and surj, f"injective={inj} surjective={surj}"


# ----------------------------------------------------------- group ring


def _random_jk(d: int, k: int, rng: random.Random, spread: int = 3) -> GroupRingElement:
    out = GroupRingElement.zero(d)
    for b in jk_basis(d, k):
        out = out + b.scale(rng.randint(-spread, spread))
    return out


def _agree(lam: GroupRingElement, k: int) -> bool:
    return jk_member_characters(lam, k) == jk_member_lattice(lam, k)


def suite_oracle(d_max: int = 4, samples: int = 200, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    for d in range(1, d_max + 1):
        pool = jk_basis(d, 1)
        prods = [a * b for a, b in combinations_with_replacement(pool, 2)]
        prods += [a * b * c for a, b, c in combinations_with_replacement(pool, 3)]
        for k in range(0, d + 2):
            checks.append(_run(f"d{d}/k{k}/basis-products", lambda k=k, prods=prods: all(_agree(p, k) for p in prods)))
            rand = [GroupRingElement(d, tuple(rng.randint(-8, 8) for _ in range(1 << d))) for _ in range(samples)]
            checks.append(_run(f"d{d}/k{k}/random", lambda k=k, rand=rand: all(_agree(p, k) for p in rand)))
        for k in range(0, 6):
            for l in range(0, 6 - k):
                pairs = [(_random_jk(d, k, rng), _random_jk(d, l, rng)) for _ in range(samples)]
                checks.append(_run(f"d{d}/mul{k}+{l}", lambda k=k, l=l, pairs=pairs: _graded_mul_agrees(pairs, k, l)))
    return sorted(checks, key=lambda c: c.case)


def _graded_mul_agrees(pairs, k: int, l: int) -> tuple[bool, str]:
    for lam, mu in pairs:
        lhs = graded_class(lam * mu, k + l)
        rhs = graded_mul(graded_class(lam, k), graded_class(mu, l))
        if lhs != rhs:
            return False, f"lam={lam.coeffs} mu={mu.coeffs}"
    return True, ""


# ------------------------------------------------------------ chi / tautness


def chi_families(n_max: int = 8) -> Iterator[tuple[str, ColoredGraph]]:
    yield "k4", fam.make_k4_d3()
    yield "theta", fam.make_theta()
    for n in range(1, n_max + 1):
        yield f"mobius-d2/{n}", fam.mobius_d2(n)
    for n in range(2, n_max + 1):
        yield f"mobius-d3-special/tree/{n}", fam.mobius_d3_special(n)
    for n in range(3, n_max + 1):
        yield f"mobius-d3-special/four-circuit/{n}", fam.mobius_d3_special(n, "four-circuit")
    yield "mobius-d3-exceptional4", fam.mobius_d3_exceptional4()
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            g = fam.mobius_d3_ladder(n, k)
            if g is not None:
                yield f"mobius-d3/{n}/k{k}", g
    for n in range(3, n_max + 1):
        yield f"mobius-d4/{n}", fam.mobius_d4(n)
    for n in range(4, n_max + 1):
        yield f"mobius-d4-alt/{n}", fam.mobius_d4_alt(n)
    yield "genpetersen-d3/5,2", fam.genpetersen_d3(5, 2)
    yield "genpetersen-d3/7,2", fam.genpetersen_d3(7, 2)
    yield "petersen-d5", fam.petersen_d5()


def suite_chi(n_max: int = 8) -> list[Check]:
    checks = []
    for name, g in chi_families(n_max):
        gc = build(g)
        for k in range(1, g.d + 1):
            checks.append(_run(f"{name}/k{k}", lambda gc=gc, k=k: euler_check(gc, k)))
    return sorted(checks, key=lambda c: c.case)


def _levels_check(g: ColoredGraph, expect: Callable[[dict[int, bool]], bool]) -> tuple[bool, str]:
    levels = taut_levels(build(g))
    # tautness at level k forces tautness at every lower level
    descends = all(levels[k - 1] or not levels[k] for k in range(2, g.d + 1))
    return descends and expect(levels), f"levels={levels}"


def suite_tautness(n_max: int = 8, enum_n_max: int = 6) -> list[Check]:
    checks = []

    def add(case: str, g: ColoredGraph, expect: Callable[[dict[int, bool]], bool]) -> None:
        checks.append(_run(case, lambda: _levels_check(g, expect)))

    add("k4", fam.make_k4_d3(), lambda lv: lv[2])
    for n in range(1, n_max + 1):
        add(f"mobius-d2/{n}", fam.mobius_d2(n), lambda lv, n=n: lv[1] and lv[2] == (n % 2 == 1 or n == 2))
    for n in range(3, n_max + 1):
        add(f"mobius-d4/{n}", fam.mobius_d4(n), lambda lv: lv[4])
    for n in range(4, n_max + 1):
        add(f"mobius-d4-alt/{n}", fam.mobius_d4_alt(n), lambda lv: lv[3] and not lv[4])
    add("petersen-d5", fam.petersen_d5(), lambda lv: lv[5])
    for n in range(2, enum_n_max + 1):
        for i, g in enumerate(_ladder_d3_colorings(n)):
            add(f"mobius-d3-enum/{n}/{i:03d}", g, lambda lv: lv[2])
    for m in range(3, 8):
        for b in range(m, 8):
            add(f"d3-tree-circuit/{m},{b}", fam.d3_tree_circuit(m, b), lambda lv: lv[2])
    return sorted(checks, key=lambda c: c.case)


def _rung_product(g: ColoredGraph, n: int) -> int:
    col = g.colors()
    out = 0
    for i in range(n):
        out ^= col[f"t{i}"]
    return out


def _ladder_d3_colorings(n: int) -> list[ColoredGraph]:
    """All G(3)-colorings of the n-rung ladder with g0 != 1, up to symmetry."""
    return [g for g in enumerate_colorings(fam.mobius_ladder_skeleton(n), 3, up_to_symmetry=True) if _rung_product(g, n)]


# --------------------------------------------------------------- predictor


def _predicts(g: ColoredGraph, theorem: str, want) -> tuple[bool, str]:
    p = predict(g)
    b1 = betti(g)[1]
    m, bound = order_constraints(g.d, b1)
    seq = sum(seq_quotient_dim(g.d, b1, k) for k in range(1, g.d))
    ok = (
        theorem in (p.theorem,) + p.also
        and p.coker == want
        and p.coker.order_log2 == m == seq
        and p.coker.exponent_log2 <= bound
    )
    return ok, f"{p.to_json()} expected {theorem} {list(want.exponents)}"


def suite_predictor(n_max: int = 8, m_max: int = 7) -> list[Check]:
    from .predictor import TwoGroup

    checks = [_run("k4", lambda: _predicts(fam.make_k4_d3(), "8.2", TwoGroup()))]
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            g = fam.mobius_d3_ladder(n, k)
            if g is None:
                # only k = n-1 and k = n are excluded; see the rung product
                checks.append(_run(f"mobius-d3/{n}/k{k}/absent", lambda k=k, n=n: k >= n - 1))
                continue
            checks.append(_run(f"mobius-d3/{n}/k{k}", lambda g=g, n=n, k=k: _predicts(g, "8.3", coker_ladder_d3(n, k))))
    for m in range(3, m_max + 1):
        for b in range(m, m_max + 1):
            checks.append(_run(f"d3-tree-circuit/{m},{b}", lambda m=m, b=b: _predicts(fam.d3_tree_circuit(m, b), "8.2", coker_special_circuit(m, b))))
    checks.append(_run("mobius-d4/3", lambda: _predicts(fam.mobius_d4(3), "8.7", TwoGroup((1,)))))
    for n in range(4, n_max + 1):
        want = TwoGroup.of({3: 1, 1: 4 * n - 14})
        checks.append(_run(f"mobius-d4/{n}", lambda n=n, want=want: _predicts(fam.mobius_d4(n), "8.7", want) if coker_ladder_d4(n) == want else (False, "table mismatch")))
    want = TwoGroup.of({4: 1, 2: 4, 1: 2})
    checks.append(_run("petersen-d5", lambda: _predicts(fam.petersen_d5(), "8.8", want) if coker_petersen_d5() == want else (False, "table mismatch")))
    return sorted(checks, key=lambda c: c.case)


# ----------------------------------------------------------------- witness

PETERSEN_CHAR_ROWS = {1: "10000", 2: "01111", 3: "11000", 4: "00111", 5: "10100", 6: "01011"}
PETERSEN_OTHER_ROWS = {
    (1, 2): ("01010", "11000"),
    (3, 4): ("01111", "10100"),
    (5, 6): ("11000", "11110"),
}


def petersen_character(j: int, i: int) -> int:
    """H_(ji) as a bitmask: its values on x_i, .., x_(i+4) read from row j."""
    row = PETERSEN_CHAR_ROWS[j]
    return sum(int(row[t]) << ((i + t) % 5) for t in range(5))


def petersen_chain_edges(j: int, i: int) -> list[str]:
    r = lambda a: a % 5  # noqa: E731
    if j in (1, 2):
        return [f"t{r(i + 1)}"]
    if j in (3, 4):
        return [f"t{r(i + 1)}", f"t{r(i + 2)}"]
    if j == 5:
        return [f"r{i}", f"s{i}", f"r{r(i + 1)}"]
    return [f"t{i}", f"r{r(i + 2)}", f"s{r(i + 1)}", f"r{r(i + 1)}"]


def _petersen_table_support(j: int, i: int) -> set[str]:
    """Edges outside H_(ji) according to the two character tables."""
    char_row = PETERSEN_CHAR_ROWS[j]
    tau, rho = next(v for k, v in PETERSEN_OTHER_ROWS.items() if j in k)
    out = set()
    for t in range(5):
        if char_row[t] == "1":
            out.add(f"s{(i + t) % 5}")
        if tau[t] == "1":
            out.add(f"t{(i + t) % 5}")
        if rho[t] == "1":
            out.add(f"r{(i + t) % 5}")
    return out


def suite_witness(family: str = "all", n_max: int = 8) -> list[Check]:
    if family not in ("all", "mobius-d4", "petersen-d5"):
        raise ValueError(f"unknown witness family {family!r}")
    checks = []
    if family in ("all", "mobius-d4"):
        for n in range(4, n_max + 1):
            checks.append(_run(f"mobius-d4/{n}", lambda n=n: _mobius_d4_witness(n)))
    if family in ("all", "petersen-d5"):
        gc = build(fam.petersen_d5())
        rungs = [f"t{i}" for i in range(5)]
        z = high_order_witness(gc, rungs, [f"v{i}" for i in range(5)])
        z5 = ConstrainedChain(5, 0, z.entries)
        checks.append(_run("petersen-d5/bounds-at-5", lambda: h0_class_is_zero(gc, z5, 5)))
        checks.append(_run("petersen-d5/nonzero-at-4", lambda: not h0_class_is_zero(gc, z, 4)))
        checks.append(_run("petersen-d5/phi", lambda: _expect(phi_invariant(gc, z5, rungs), 1)))
        checks.append(_run("petersen-d5/characters", lambda: _petersen_characters_cover()))
        h0 = 31
        checks.append(_run("petersen-d5/H0", lambda: not any(h == h0 for _, h in z5.entries) and gamma_h(gc.source, h0) == frozenset(f"s{i}" for i in range(5))))
        total: set = set()
        for j in range(1, 7):
            for i in range(5):
                h = petersen_character(j, i)
                edges = petersen_chain_edges(j, i)
                c = chain_from_edges(gc, 5, {h: edges})
                total ^= set(c.entries)
                checks.append(_run(f"petersen-d5/c_H{j}{i}", lambda gc=gc, c=c, h=h, edges=edges, j=j, i=i: _petersen_chain_ok(gc, z5, c, h, edges, j, i)))
        whole = ConstrainedChain(5, 1, frozenset(total))
        checks.append(_run("petersen-d5/table-sum", lambda: gc.boundary_of(whole) == z5 and _phi_of(gc, whole, rungs) == 1))
    return sorted(checks, key=lambda c: c.case)


def _mobius_d4_witness(n: int) -> tuple[bool, str]:
    gc = build(fam.mobius_d4(n))
    rungs = [f"t{i}" for i in range(1, n)]
    z = high_order_witness(gc, rungs, [f"v{i}" for i in range(1, n)])
    nonzero = not h0_class_is_zero(gc, z, 3)
    phi = phi_invariant(gc, ConstrainedChain(4, 0, z.entries), rungs)
    return nonzero and phi == 1, f"nonzero_at_3={nonzero} phi={phi}"


def _petersen_characters_cover() -> tuple[bool, str]:
    masks = {petersen_character(j, i) for j in range(1, 7) for i in range(5)}
    return masks == set(range(1, 32)) - {31}, f"{len(masks)} distinct characters"


def _petersen_chain_ok(gc, z5, c, h, edges, j, i) -> tuple[bool, str]:
    zh = ConstrainedChain(5, 0, frozenset(e for e in z5.entries if e[1] == h))
    support = gamma_h(gc.source, h)
    table = _petersen_table_support(j, i)
    ok = gc.boundary_of(c) == zh and set(edges) <= support and support == table
    return ok, f"support={sorted(support)} table={sorted(table)}"


def _phi_of(gc, chain: ConstrainedChain, designated: list[str]) -> int:
    return sum(1 for cid, _ in chain.entries if cid in designated) % 2


# --------------------------------------------------------------- mobparity


def suite_mobparity(m_max: int = 9) -> list[Check]:
    checks = []
    for m in range(3, m_max + 1, 2):
        for k in range(0, m + 1, 2):
            subsets = list(combinations(range(m), k))
            checks.append(_run(f"m{m}/k{k}", lambda m=m, subsets=subsets: _all_zero_parity(m, subsets)))
    checks.append(_run("m2/k2", lambda: _expect(mob_parity(2, [0, 1]), 1)))
    return sorted(checks, key=lambda c: c.case)


def _all_zero_parity(m: int, subsets) -> tuple[bool, str]:
    for s in subsets:
        if mob_parity(m, s):
            return False, f"indices {s} give parity 1"
    return True, f"{len(subsets)} index sets"


# -------------------------------------------------------------- lambda rank


def suite_lambda_rank(m_max: int = 8, enum_n_max: int = 6) -> list[Check]:
    checks = []
    g0, other = 1, 2
    for m in range(3, m_max + 1):
        checks.append(_run(f"closed-form/m{m}", lambda m=m: _ladder_ranks(m, g0, other)))
    checks.append(_run("petersen/t0", lambda: _expect(mod2_cover_dim(6, 6, petersen_cover_lambda(0)), 7)))
    checks.append(_run("petersen/t1", lambda: _expect(mod2_cover_dim(6, 6, petersen_cover_lambda(1)), 7)))
    for n in range(2, enum_n_max + 1):
        checks.append(_run(f"from-coloring/n{n}", lambda n=n: _coloring_ranks(n)))
    checks.append(_run("rejects-m2", lambda: _raises(lambda: ladder_lambda([1, 2], 1))))
    return sorted(checks, key=lambda c: c.case)


def _raises(fn) -> bool:
    try:
        fn()
    except ValueError:
        return True
    return False


def _ladder_ranks(m: int, g0: int, other: int) -> tuple[bool, str]:
    tested = 0
    for pattern in range(1 << m):
        colors = [g0 if pattern >> j & 1 else other for j in range(m)]
        k = bin(pattern).count("1")
        if m % 2 == 0 and k == 0:
            # even unbroken cycle: rank m - 2; never arises, a circuit Γ_H with g0 outside H has an odd rung count
            continue
        lam = ladder_lambda(colors, g0)
        want = m - k - (k == 0)
        if lam.rank != want:
            return False, f"pattern {colors}: rank {lam.rank} != {want}"
        for n in range(m, m + 4):
            if mod2_cover_dim(m, n, lam) != n + k - 3 + (k == 0):
                return False, f"pattern {colors}: cover dim mismatch at n={n}"
        tested += 1
    return True, f"{tested} of {1 << m} patterns"


def _coloring_ranks(n: int) -> tuple[bool, str]:
    tested = 0
    for g in _ladder_d3_colorings(n):
        g0 = _rung_product(g, n)
        for h in range(1, 8):
            if not delta(h, g0):
                continue
            rung_colors = [g.colors()[e] for e in (f"t{i}" for i in range(n)) if e in gamma_h(g, h)]
            if len(rung_colors) < 3:
                continue
            lam, rc = ladder_lambda_from_coloring(g, h)
            k = sum(c == g0 for c in rc)
            want = len(rc) - k - (k == 0)
            if lam.rank != want or ladder_lambda(rc, g0).rank != want:
                return False, f"{g.colors()} H={h}: rank {lam.rank} != {want}"
            tested += 1
    return True, f"{tested} (coloring, H) pairs"


# -------------------------------------------------------------- enumeration


def random_bridged_graph(rng: random.Random, max_edges: int = 10) -> ColoredGraph:
    """Random trivalent multigraph with a bridge, built by pairing half-edges."""
    sizes = [v for v in (2, 4, 6) if 3 * v // 2 <= max_edges]
    while True:
        nv = rng.choice(sizes)
        half = [i for i in range(nv) for _ in range(3)]
        rng.shuffle(half)
        verts = [f"w{i}" for i in range(nv)]
        edges = [Edge(f"e{j}", (verts[half[2 * j]], verts[half[2 * j + 1]])) for j in range(len(half) // 2)]
        g = ColoredGraph(0, verts, edges, {})
        if betti(g)[0] == 1 and has_bridge(g):
            return g


def _brute_force_count(g: ColoredGraph, d: int) -> int:
    inc = g.incidence()
    ids = [e.id for e in g.edges]
    count = 0
    for colors in product(range(1, 1 << d), repeat=len(ids)):
        col = dict(zip(ids, colors))
        if any(_xor(col[e] for e in inc[v]) for v in g.vertices):
            continue
        if _span_rank(colors) == d:
            count += 1
    return count


def _xor(values) -> int:
    out = 0
    for v in values:
        out ^= v
    return out


def _span_rank(values) -> int:
    basis: list[int] = []
    for v in set(values):
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def suite_enumeration(samples: int = 30, max_edges: int = 10, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    checks = [
        _run("k4/d3/up-to-symmetry", lambda: _expect(len(enumerate_colorings(fam.k4_skeleton(), 3, True)), 1)),
        _run("theta/d2/up-to-symmetry", lambda: _expect(len(enumerate_colorings(_theta_skeleton(), 2, True)), 1)),
        _run("k4/d3/total", lambda: _expect(count_colorings(fam.k4_skeleton(), 3), _brute_force_count(fam.k4_skeleton(), 3))),
        _run("theta/d2/total", lambda: _expect(len(enumerate_colorings(_theta_skeleton(), 2)), _brute_force_count(_theta_skeleton(), 2))),
        _run("ladder3/d2/total", lambda: _expect(count_colorings(fam.mobius_ladder_skeleton(3), 2), _brute_force_count(fam.mobius_ladder_skeleton(3), 2))),
        _run("ladder4/d2/total", lambda: _expect(count_colorings(fam.mobius_ladder_skeleton(4), 2), _brute_force_count(fam.mobius_ladder_skeleton(4), 2))),
    ]
    for s in range(samples):
        g = random_bridged_graph(rng, max_edges)
        for d in (2, 3):
            checks.append(_run(f"bridged/{s:03d}/d{d}", lambda g=g, d=d: _expect(count_colorings(g, d), 0)))
        checks.append(_run(f"bridged/{s:03d}/brute-d2", lambda g=g: _expect(_brute_force_count(g, 2), 0)))
    return sorted(checks, key=lambda c: c.case)


def _theta_skeleton() -> ColoredGraph:
    return ColoredGraph(0, ["u", "v"], [Edge(f"e{i}", ("u", "v")) for i in range(3)], {})


# ------------------------------------------------------------ constructions


def suite_constructions(m_max: int = 7) -> list[Check]:
    checks = []
    for m in range(3, m_max + 1):
        for b in range(m, m_max + 1):
            checks.append(_run(f"tree-circuit/{m},{b}", lambda m=m, b=b: _tree_circuit_ok(m, b)))
    return sorted(checks, key=lambda c: c.case)


def _circuit_lengths(g: ColoredGraph) -> set[int]:
    return {len(c) for _, c in special_circuits(g)}


def _tree_circuit_ok(m: int, b: int) -> tuple[bool, str]:
    g = fam.d3_tree_circuit(m, b)
    if validate(g) or betti(g)[1] != b or not is_unsplittable(g) or m not in _circuit_lengths(g):
        return False, "construction fails"
    circuit = next(c for _, c in special_circuits(g) if len(c) == m)
    on = {v for e in g.edges if e.id in circuit for v in e.ends}  # type: ignore[union-attr]
    moved = 0
    for v in g.vertices:
        if v in on:
            continue
        h = wye_delta(g, v)
        still = any(c == circuit for _, c in special_circuits(h))
        if validate(h) or not is_unsplittable(h) or not still or betti(h)[1] != b + 1:
            return False, f"Y-Delta at {v} breaks the construction"
        moved += 1
    if not moved:
        return False, "no vertex off the circuit"
    return True, f"{moved} Y-Delta moves checked"


SUITES: dict[str, Callable[..., list[Check]]] = {
    "graded-ring": suite_graded_ring,
    "oracle": suite_oracle,
    "chi": suite_chi,
    "tautness": suite_tautness,
    "predictor": suite_predictor,
    "witness": suite_witness,
    "mobparity": suite_mobparity,
    "lambda-rank": suite_lambda_rank,
    "enumeration": suite_enumeration,
    "constructions": suite_constructions,
}


def run_suite(name: str, **bounds) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**bounds)
