"""Generators for the standard colored graph families.

Ladder conventions: an n-rung Moebius ladder has vertices v0..v(2n-1), rim
edges s_i = {v_i, v_(i+1)} and rungs t_i = {v_i, v_(i+n)} for i < n.  The
generalized Petersen graph P(n, k) has outer vertices u_i, inner vertices
v_i, rim edges s_i = {u_i, u_(i+1)}, inner edges t_i = {v_i, v_(i+k)} and
spokes r_i = {u_i, v_i}.

Basis elements x1..xd are the bitmasks 1, 2, 4, ...
"""

from __future__ import annotations

from collections import deque
from math import gcd
from typing import Mapping, Sequence

from .graph import ColoredGraph, Edge, complete_coloring, is_valid, validate, wye_delta


def x(*indices: int) -> int:
    """Product of basis elements x_i (indices counted from 1)."""
    out = 0
    for i in indices:
        out ^= 1 << (i - 1)
    return out


def _power(g: int, n: int) -> int:
    return g if n % 2 else 0


def _finish(skeleton: ColoredGraph, d: int, partial: Mapping[str, int], tags: Mapping[str, str]) -> ColoredGraph:
    colors = complete_coloring(skeleton, partial)
    g = skeleton.with_colors(colors, d=d, tags=tags)
    problems = validate(g)
    if problems:
        raise ValueError("coloring does not complete to a valid G-coloring: " + "; ".join(problems))
    return g


# ----------------------------------------------------------------- skeletons


def mobius_ladder_skeleton(n: int) -> ColoredGraph:
    if n < 1:
        raise ValueError("a Moebius ladder needs at least one rung")
    verts = [f"v{i}" for i in range(2 * n)]
    edges = [Edge(f"s{i}", (f"v{i}", f"v{(i + 1) % (2 * n)}")) for i in range(2 * n)]
    edges += [Edge(f"t{i}", (f"v{i}", f"v{i + n}")) for i in range(n)]
    return ColoredGraph(0, verts, edges, {"family": "mobius-ladder", "n": str(n)})


def genpetersen_skeleton(n: int, k: int) -> ColoredGraph:
    if n < 3 or not 1 <= k <= n - 1 or n == 2 * k:
        raise ValueError(f"P({n},{k}) is not defined")
    verts = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    edges = [Edge(f"s{i}", (f"u{i}", f"u{(i + 1) % n}")) for i in range(n)]
    edges += [Edge(f"t{i}", (f"v{i}", f"v{(i + k) % n}")) for i in range(n)]
    edges += [Edge(f"r{i}", (f"u{i}", f"v{i}")) for i in range(n)]
    return ColoredGraph(0, verts, edges, {"family": "genpetersen", "n": str(n), "k": str(k)})


def k4_skeleton() -> ColoredGraph:
    return mobius_ladder_skeleton(2)


def ladder_is_standard(g: ColoredGraph, n: int) -> bool:
    """Check that ``g`` has exactly the vertex and edge layout of the n-rung ladder."""
    ref = mobius_ladder_skeleton(n)
    if tuple(g.vertices) != ref.vertices or len(g.edges) != len(ref.edges):
        return False
    mine = {e.id: e.ends for e in g.edges}
    return all(mine.get(e.id) == e.ends for e in ref.edges)


def rung_ids(n: int) -> list[str]:
    return [f"t{i}" for i in range(n)]


# ------------------------------------------------------------------ families


def make_theta() -> ColoredGraph:
    verts = ["u", "v"]
    edges = [Edge("e0", ("u", "v"), x(1)), Edge("e1", ("u", "v"), x(2)), Edge("e2", ("u", "v"), x(1, 2))]
    return ColoredGraph(2, verts, edges, {"family": "theta"})


def mobius_ladder_colored(d: int, rung_colors: Sequence[int], rim0: int, tags: Mapping[str, str] | None = None) -> ColoredGraph:
    """Ladder colored by its rungs plus the color of rim edge s0."""
    n = len(rung_colors)
    sk = mobius_ladder_skeleton(n)
    partial = {f"t{i}": c for i, c in enumerate(rung_colors)}
    partial["s0"] = rim0
    base = {"family": "mobius-ladder", "n": str(n)}
    base.update(tags or {})
    return _finish(sk, d, partial, base)


def mobius_d2(n: int) -> ColoredGraph:
    """Rungs colored x1, rim alternately x2 and x1x2."""
    if n < 1:
        raise ValueError("n must be at least 1")
    sk = mobius_ladder_skeleton(n)
    partial = {f"t{i}": x(1) for i in range(n)}
    partial.update({f"s{i}": x(2) if i % 2 == 0 else x(1, 2) for i in range(2 * n)})
    return _finish(sk, 2, partial, {"family": "mobius-d2", "n": str(n)})


def _tree_plus_circuit(
    skeleton: ColoredGraph,
    d: int,
    circuit: Sequence[str],
    h_colors: tuple[int, int, int],
    g0: int,
    tags: Mapping[str, str],
) -> ColoredGraph:
    """Color a graph made of a tree and a circuit through its leaves.

    Tree edges get the three nontrivial elements of a rank-2 subgroup with
    distinct colors at every fork; the first circuit edge gets ``g0`` and the
    rest of the circuit follows from the vertex relation.
    """
    circ = set(circuit)
    tree = [e for e in skeleton.edges if e.id not in circ]
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in skeleton.vertices}
    for e in tree:
        a, b = e.ends  # type: ignore[misc]
        adj[a].append((e.id, b))
        adj[b].append((e.id, a))
    root = next(v for v in skeleton.vertices if len(adj[v]) == 1)
    colors: dict[str, int] = {}
    first_edge, first_nbr = adj[root][0]
    colors[first_edge] = h_colors[0]
    queue = deque([(first_nbr, first_edge)])
    while queue:
        v, via = queue.popleft()
        others = [c for c in h_colors if c != colors[via]]
        outgoing = [(eid, w) for eid, w in adj[v] if eid != via]
        if outgoing and len(outgoing) != 2:
            raise ValueError(f"tree vertex {v!r} is neither a leaf nor a fork")
        for (eid, w), c in zip(outgoing, others):
            colors[eid] = c
            queue.append((w, eid))
    if len(colors) != len(tree):
        raise ValueError("complement of the circuit is not a tree")
    colors[circuit[0]] = g0
    return _finish(skeleton, d, colors, tags)


_H0 = (x(1), x(2), x(1, 2))
_G0 = x(3)


def mobius_d3_special(n: int, variant: str = "tree") -> ColoredGraph:
    """Unsplittable G(3)-colorings of the n-rung ladder with a special circuit.

    ``tree``: the circuit t0, s0..s(n-1) of length n+1, whose complement is a
    tree.  ``four-circuit`` (n >= 3): s0 = x1, t0 = x2, t1 = x2 x3^(n-1),
    all other rungs x3; the special circuit has length 4.
    """
    if variant == "tree":
        if n < 2:
            raise ValueError("the tree variant needs n >= 2")
        sk = mobius_ladder_skeleton(n)
        circuit = ["t0"] + [f"s{i}" for i in range(n)]
        return _tree_plus_circuit(sk, 3, circuit, _H0, _G0, {"family": "mobius-d3-special", "n": str(n), "variant": variant})
    if variant == "four-circuit":
        if n < 3:
            raise ValueError("the four-circuit variant needs n >= 3")
        rungs = [x(2), x(2) ^ _power(x(3), n - 1)] + [x(3)] * (n - 2)
        return mobius_ladder_colored(3, rungs, x(1), {"family": "mobius-d3-special", "variant": variant})
    raise ValueError(f"unknown variant {variant!r}")


def mobius_d3_exceptional4() -> ColoredGraph:
    rungs = [x(1, 2, 3), x(1), x(2), x(3)]
    return mobius_ladder_colored(3, rungs, x(2), {"family": "mobius-d3-exceptional4"})


def mobius_d3_ladder(n: int, k: int, g0: int = x(1)) -> ColoredGraph | None:
    """A G(3)-coloring of the n-rung ladder with rung product g0 on exactly k rungs.

    Rung tuples and then the rim color are tried in a fixed order, so the
    result is deterministic.  Returns None when no such coloring exists.
    """
    if n < 2 or not 0 <= k <= n:
        raise ValueError("need n >= 2 and 0 <= k <= n")
    if not 0 < g0 < 8:
        raise ValueError("g0 must be a non-identity element of G(3)")
    others = [c for c in range(1, 8) if c != g0]

    def rim_ok(rungs: list[int], rim0: int) -> bool:
        s, seen = rim0, {rim0}
        for i in range(1, 2 * n):
            s ^= rungs[i % n]
            if not s:
                return False
            seen.add(s)
        return s ^ rim0 == rungs[0] and _rank(seen | set(rungs)) == 3

    def search(pos: int, left: int, prod: int, rungs: list[int]) -> ColoredGraph | None:
        if pos == n:
            if prod != g0 or left:
                return None
            for rim0 in range(1, 8):
                if rim_ok(rungs, rim0):
                    return mobius_ladder_colored(3, rungs, rim0, {"family": "mobius-d3", "k": str(k)})
            return None
        choices = ([g0] if left else []) + (others if n - pos > left else [])
        for c in choices:
            found = search(pos + 1, left - (c == g0), prod ^ c, rungs + [c])
            if found is not None:
                return found
        return None

    return search(0, k, 0, [])


def _rank(elements: set[int]) -> int:
    basis: list[int] = []
    for v in elements:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def mobius_d4(n: int) -> ColoredGraph:
    """Rungs x3 except for three carrying x1, x2 and x1 x2 x3^n; rim edge s0 is x4.

    The three special rungs sit at the end, so t0 is an x3 rung once n >= 4.
    """
    if n < 3:
        raise ValueError("mobius_d4 needs n >= 3")
    rungs = [x(3)] * (n - 3) + [x(1), x(2), x(1, 2) ^ _power(x(3), n)]
    return mobius_ladder_colored(4, rungs, x(4), {"family": "mobius-d4"})


def mobius_d4_alt(n: int) -> ColoredGraph:
    """Rungs x1, x2, x3 and x1 x2 x3 x4^(n-1), others x4.

    The rim color of s0 is the first color, in mask order, that completes to
    a valid coloring.
    """
    if n < 4:
        raise ValueError("mobius_d4_alt needs n >= 4")
    rungs = [x(1), x(2), x(3), x(1, 2, 3) ^ _power(x(4), n - 1)] + [x(4)] * (n - 4)
    for rim in range(1, 16):
        try:
            return mobius_ladder_colored(4, rungs, rim, {"family": "mobius-d4-alt", "rim0": str(rim)})
        except ValueError:
            continue
    raise ValueError("no rim color completes the coloring")  # pragma: no cover


def _caterpillar_with_circuit(m: int) -> tuple[ColoredGraph, list[str]]:
    forks = max(m - 2, 1)
    verts = [f"f{i}" for i in range(forks)] + [f"l{i}" for i in range(m)]
    edges = [Edge(f"p{i}", (f"f{i}", f"f{i + 1}")) for i in range(forks - 1)]
    # leaves in path order: two on the first fork, one per middle fork, two on the last
    owner = []
    if forks == 1:
        owner = [0, 0, 0]
    else:
        owner = [0, 0] + list(range(1, forks - 1)) + [forks - 1, forks - 1]
    edges += [Edge(f"q{i}", (f"f{owner[i]}", f"l{i}")) for i in range(m)]
    circuit = [f"c{i}" for i in range(m)]
    edges += [Edge(f"c{i}", (f"l{i}", f"l{(i + 1) % m}")) for i in range(m)]
    return ColoredGraph(0, verts, edges), circuit


def d3_tree_circuit(m: int, b: int | None = None) -> ColoredGraph:
    """Caterpillar tree plus an m-circuit through its leaves, then Y-Delta moves.

    The result has first Betti number ``b`` and a special m-circuit c0..c(m-1).
    """
    b = m if b is None else b
    if not 3 <= m <= b:
        raise ValueError("need 3 <= m <= b")
    sk, circuit = _caterpillar_with_circuit(m)
    tags = {"family": "d3-tree-circuit", "m": str(m), "b": str(b)}
    g = _tree_plus_circuit(sk, 3, circuit, _H0, _G0, tags)
    on_circuit = {v for e in g.edges if e.id in set(circuit) for v in e.ends}  # type: ignore[union-attr]
    for _ in range(b - m):
        v = next(u for u in g.vertices if u not in on_circuit)
        g = wye_delta(g, v)
    return g


def make_k4_d3() -> ColoredGraph:
    g = d3_tree_circuit(3, 3)
    return ColoredGraph(g.d, g.vertices, g.edges, {"family": "k4"})


def genpetersen_d3(n: int, k: int) -> ColoredGraph:
    """P(n, k) with the inner rim in a rank-2 subgroup and the outer rim special."""
    if gcd(n, k) != 1:
        raise ValueError("k must be coprime to n")
    sk = genpetersen_skeleton(n, k)
    partial: dict[str, int] = {}
    for j in range(n):
        eid = f"t{(j * k) % n}"
        partial[eid] = _H0[2] if j == 0 else (_H0[0] if j % 2 else _H0[1])
    partial["s0"] = _G0
    return _finish(sk, 3, partial, {"family": "genpetersen-d3", "n": str(n), "k": str(k)})


def petersen_d5() -> ColoredGraph:
    """P(5,2) with s_i = y_i, t_i = y_(i-1) y_(i+2), r_i = y_(i-1) y_i for y_i = x_(i+1)."""
    sk = genpetersen_skeleton(5, 2)

    def y(*idx: int) -> int:
        return x(*[(i % 5) + 1 for i in idx])

    colors = {}
    for i in range(5):
        colors[f"s{i}"] = y(i)
        colors[f"t{i}"] = y(i - 1, i + 2)
        colors[f"r{i}"] = y(i - 1, i)
    g = sk.with_colors(colors, d=5, tags={"family": "petersen-d5"})
    assert is_valid(g)
    return g


FAMILIES = {
    "theta": make_theta,
    "k4": make_k4_d3,
    "mobius-d2": mobius_d2,
    "mobius-d3-special": mobius_d3_special,
    "mobius-d3-exceptional4": mobius_d3_exceptional4,
    "mobius-d4": mobius_d4,
    "mobius-d4-alt": mobius_d4_alt,
    "d3-tree-circuit": d3_tree_circuit,
    "genpetersen-d3": genpetersen_d3,
    "petersen-d5": petersen_d5,
}
