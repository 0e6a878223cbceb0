"""Exhaustive enumeration of G-colorings of a small trivalent graph.

Colorings are produced in a normal form for the action of GL(d, 2): walking
the edges in a fixed order, every color either lies in the span of earlier
colors or is the next unused basis vector.  Each GL(d, 2)-orbit therefore
appears exactly once.  Graph automorphisms are then removed by comparing
canonical keys.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from .graph import ColoredGraph

MAX_EDGES = 21


def _edge_order(g: ColoredGraph) -> list[str]:
    """Breadth-first edge order so that vertex constraints fire early."""
    inc = g.incidence()
    ends = {e.id: e.ends for e in g.edges}
    order: list[str] = []
    seen_e: set[str] = set()
    seen_v: set[str] = set()
    for start in g.vertices:
        if start in seen_v:
            continue
        queue = [start]
        seen_v.add(start)
        while queue:
            v = queue.pop(0)
            for eid in inc[v]:
                if eid in seen_e:
                    continue
                seen_e.add(eid)
                order.append(eid)
                for w in ends[eid]:  # type: ignore[union-attr]
                    if w not in seen_v:
                        seen_v.add(w)
                        queue.append(w)
    return order


def _colorings_normal_form(g: ColoredGraph, d: int) -> Iterator[dict[str, int]]:
    order = _edge_order(g)
    inc = g.incidence()
    ends = {e.id: e.ends for e in g.edges}
    colors: dict[str, int] = {}

    def vertex_ok(v: str) -> bool:
        eids = inc[v]
        if all(e in colors for e in eids):
            prod = 0
            for e in eids:
                prod ^= colors[e]
            return prod == 0
        return True

    def forced(eid: str) -> int | None:
        for v in ends[eid]:  # type: ignore[union-attr]
            others = list(inc[v])
            others.remove(eid)
            if all(o in colors for o in others):
                prod = 0
                for o in others:
                    prod ^= colors[o]
                return prod
        return None

    def rec(pos: int, span: frozenset[int], rank: int) -> Iterator[dict[str, int]]:
        if pos == len(order):
            if rank == d:
                yield dict(colors)
            return
        eid = order[pos]
        fresh = 1 << rank if rank < d else None
        f = forced(eid)
        if f is not None:
            candidates = [f] if f and (f in span or f == fresh) else []
        else:
            candidates = sorted(span - {0}) + ([fresh] if fresh else [])
        for c in candidates:
            colors[eid] = c
            if all(vertex_ok(v) for v in ends[eid]):  # type: ignore[union-attr]
                if c in span:
                    yield from rec(pos + 1, span, rank)
                else:
                    yield from rec(pos + 1, span | {s ^ c for s in span}, rank + 1)
            del colors[eid]

    yield from rec(0, frozenset({0}), 0)


def edge_automorphisms(g: ColoredGraph) -> list[dict[str, str]]:
    """All incidence-preserving permutations of the edges (as id maps)."""
    verts = list(g.vertices)
    pair_edges: dict[frozenset, list[str]] = {}
    for e in g.edges:
        pair_edges.setdefault(frozenset(e.ends), []).append(e.id)  # type: ignore[arg-type]
    mult = {k: len(v) for k, v in pair_edges.items()}
    vmaps: list[dict[str, str]] = []

    def extend(mapping: dict[str, str], used: set[str]) -> None:
        if len(mapping) == len(verts):
            vmaps.append(dict(mapping))
            return
        v = verts[len(mapping)]
        for w in verts:
            if w in used:
                continue
            ok = True
            for u, img in mapping.items():
                if mult.get(frozenset((u, v)), 0) != mult.get(frozenset((img, w)), 0):
                    ok = False
                    break
            if ok and mult.get(frozenset((v,)), 0) != mult.get(frozenset((w,)), 0):
                ok = False
            if ok:
                mapping[v] = w
                used.add(w)
                extend(mapping, used)
                del mapping[v]
                used.discard(w)

    extend({}, set())
    out = []
    for vm in vmaps:
        classes = []
        for key, eids in pair_edges.items():
            img = frozenset(vm[v] for v in key)
            classes.append((eids, pair_edges[img]))
        for choice in product(*[list(permutations(tgt)) for _, tgt in classes]):
            emap = {}
            for (src, _), tgt in zip(classes, choice):
                emap.update(zip(src, tgt))
            out.append(emap)
    return out


def _gl_normal_form(seq: list[int]) -> tuple[int, ...]:
    """Relabel colors so that the first independent ones become x1, x2, ..."""
    basis: list[int] = []
    new_seq = []
    for c in seq:
        rep = _express(c, basis)
        if rep is None:
            basis.append(c)
            rep = 1 << (len(basis) - 1)
        new_seq.append(rep)
    return tuple(new_seq)


def _express(c: int, basis: list[int]) -> int | None:
    for combo in range(1 << len(basis)):
        v = 0
        for i, b in enumerate(basis):
            if combo >> i & 1:
                v ^= b
        if v == c:
            return combo
    return None


def canonical_key(g: ColoredGraph, autos: list[dict[str, str]] | None = None) -> tuple[int, ...]:
    """Invariant of the coloring under Aut(G) x Aut(Γ)."""
    autos = autos if autos is not None else edge_automorphisms(g)
    ids = [e.id for e in g.edges]
    col = g.colors()
    best = None
    for a in autos:
        seq = [col[a[eid]] for eid in ids]
        key = _gl_normal_form(seq)
        if best is None or key < best:
            best = key
    return best  # type: ignore[return-value]


def enumerate_colorings(graph: ColoredGraph, d: int, up_to_symmetry: bool = False) -> list[ColoredGraph]:
    """All G(d)-colorings of ``graph`` (its own colors are ignored).

    Without ``up_to_symmetry`` the result lists every coloring, so it has one
    entry per element of each GL(d,2)-orbit.  With it, one representative per
    orbit of Aut(G) x Aut(Γ) is returned.
    """
    if any(e.ends is None for e in graph.edges):
        raise ValueError("enumeration does not accept circular edges")
    if len(graph.edges) > MAX_EDGES:
        raise ValueError(f"size limit exceeded: {len(graph.edges)} edges > {MAX_EDGES}")
    inc = graph.incidence()
    if any(len(v) != 3 for v in inc.values()):
        raise ValueError("graph is not trivalent")
    reps = list(_colorings_normal_form(graph, d))
    tags = dict(graph.tags)
    tags["coloring"] = "enumerated"
    if up_to_symmetry:
        autos = edge_automorphisms(graph)
        seen: dict[tuple[int, ...], dict[str, int]] = {}
        for c in reps:
            key = canonical_key(graph.with_colors(c, d=d), autos)
            seen.setdefault(key, c)
        return [graph.with_colors(c, d=d, tags=tags) for c in seen.values()]
    out = []
    for c in reps:
        for m in _gl_matrices(d):
            out.append(graph.with_colors({k: _apply(m, v) for k, v in c.items()}, d=d, tags=tags))
    return out


def _apply(cols: tuple[int, ...], v: int) -> int:
    out = 0
    for i, c in enumerate(cols):
        if v >> i & 1:
            out ^= c
    return out


def _gl_matrices(d: int) -> Iterator[tuple[int, ...]]:
    """Invertible d x d matrices over GF(2), as tuples of column bitmasks."""

    def rec(cols: list[int], span: set[int]) -> Iterator[tuple[int, ...]]:
        if len(cols) == d:
            yield tuple(cols)
            return
        for c in range(1, 1 << d):
            if c not in span:
                yield from rec(cols + [c], span | {s ^ c for s in span})

    yield from rec([], {0})


def count_colorings(graph: ColoredGraph, d: int) -> int:
    """Number of G(d)-colorings, counted without expanding GL orbits."""
    order = 1
    for i in range(d):
        order *= (1 << d) - (1 << i)
    return order * sum(1 for _ in _colorings_normal_form(graph, d))
