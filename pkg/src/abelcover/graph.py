"""Trivalent graphs whose edges are colored by elements of (Z/2)^d.

Colors are stored as d-bit integers (see :mod:`abelcover.graded`).  An edge
has two end vertices, the same vertex twice (a loop), or no ends at all (a
circular edge, i.e. a vertex-free circle component).
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .graded import delta, format_bits, group_rank, parse_bits


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str] | None
    color: int = 0

    @property
    def is_loop(self) -> bool:
        return self.ends is not None and self.ends[0] == self.ends[1]

    @property
    def is_circular(self) -> bool:
        return self.ends is None


@dataclass(frozen=True)
class ColoredGraph:
    d: int
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    tags: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "tags", dict(self.tags))

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def edge_index(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def incidence(self) -> dict[str, list[str]]:
        """Edge ids at each vertex, a loop listed twice."""
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.ends is not None:
                for v in e.ends:
                    inc.setdefault(v, []).append(e.id)
        return inc

    def colors(self) -> dict[str, int]:
        return {e.id: e.color for e in self.edges}

    def with_colors(self, colors: Mapping[str, int], d: int | None = None, tags: Mapping[str, str] | None = None) -> "ColoredGraph":
        edges = tuple(replace(e, color=colors[e.id]) for e in self.edges)
        return ColoredGraph(self.d if d is None else d, self.vertices, edges, self.tags if tags is None else tags)

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - sum(1 for e in self.edges if not e.is_circular)


# ------------------------------------------------------------------ validation


def validate(g: ColoredGraph) -> list[str]:
    """Describe every violated coloring rule; an empty list means valid."""
    problems: list[str] = []
    ids = Counter(e.id for e in g.edges)
    for eid, n in ids.items():
        if n > 1:
            problems.append(f"edge id {eid!r} used {n} times")
    if len(set(g.vertices)) != len(g.vertices):
        problems.append("duplicate vertex ids")
    known = set(g.vertices)
    for e in g.edges:
        if e.ends is not None:
            for v in e.ends:
                if v not in known:
                    problems.append(f"edge {e.id!r} ends at unknown vertex {v!r}")
        if e.color == 0:
            problems.append(f"edge {e.id!r} has the identity color")
        if e.color < 0 or e.color >> g.d:
            problems.append(f"edge {e.id!r} color does not fit rank {g.d}")
    for v, inc in g.incidence().items():
        if v not in known:
            continue
        if len(inc) != 3:
            problems.append(f"vertex {v!r} has degree {len(inc)}")
        prod = 0
        for eid in inc:
            prod ^= g.edge_index()[eid].color
        if prod:
            problems.append(f"vertex {v!r}: product of incident colors is {format_bits(prod, g.d)}, not 1")
    if group_rank(e.color for e in g.edges) != g.d:
        problems.append(f"edge colors do not generate a group of rank {g.d}")
    return problems


def is_valid(g: ColoredGraph) -> bool:
    return not validate(g)


# --------------------------------------------------------------- connectivity


class _UnionFind:
    def __init__(self, items: Iterable[str]):
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _betti(vertices: Iterable[str], edges: Iterable[Edge]) -> tuple[int, int]:
    verts = list(vertices)
    uf = _UnionFind(verts)
    n_edges = 0
    circles = 0
    for e in edges:
        if e.ends is None:
            circles += 1
            continue
        n_edges += 1
        uf.union(*e.ends)
    b0 = len({uf.find(v) for v in verts}) + circles
    b1 = n_edges - len(verts) + b0
    return b0, b1


def betti(g: ColoredGraph, edge_ids: Iterable[str] | None = None) -> tuple[int, int]:
    """(b0, b1) of the graph, or of the subgraph spanned by ``edge_ids``."""
    if edge_ids is None:
        return _betti(g.vertices, g.edges)
    chosen = set(edge_ids)
    edges = [e for e in g.edges if e.id in chosen]
    verts = {v for e in edges if e.ends is not None for v in e.ends}
    return _betti(verts, edges)


def gamma_h(g: ColoredGraph, mask: int) -> frozenset[str]:
    """Ids of the edges whose color lies outside the index-2 subgroup ``mask``."""
    if not 0 < mask < 1 << g.d:
        raise ValueError(f"character mask {mask} invalid for rank {g.d}")
    return frozenset(e.id for e in g.edges if delta(mask, e.color))


def is_cycle_subgraph(g: ColoredGraph, edge_ids: Iterable[str]) -> bool:
    deg: Counter[str] = Counter()
    for e in g.edges:
        if e.id in edge_ids and e.ends is not None:
            deg.update(e.ends)
    return all(n in (0, 2) for n in deg.values())


def is_connected(g: ColoredGraph) -> bool:
    return betti(g)[0] == 1


def is_unsplittable(g: ColoredGraph) -> bool:
    """Deleting all edges of any one color (the identity too) leaves Γ connected."""
    for color in range(1 << g.d):
        rest = [e for e in g.edges if e.color != color]
        if _betti(g.vertices, rest)[0] != 1:
            return False
    return True


def special_circuits(g: ColoredGraph) -> list[tuple[int, frozenset[str]]]:
    """Characters whose Γ_H is one circuit with connected complement."""
    found = []
    for mask in range(1, 1 << g.d):
        circ = gamma_h(g, mask)
        if not circ or betti(g, circ) != (1, 1):
            continue
        rest = [e.id for e in g.edges if e.id not in circ]
        if betti(g, rest)[0] == 1:
            found.append((mask, circ))
    return found


def has_bridge(g: ColoredGraph) -> bool:
    base = betti(g)[0]
    for e in g.edges:
        if e.ends is None or e.is_loop:
            continue
        rest = [f for f in g.edges if f.id != e.id]
        if _betti(g.vertices, rest)[0] > base:
            return True
    return False


# -------------------------------------------------------------------- Y-Delta


def wye_delta(g: ColoredGraph, v: str) -> ColoredGraph:
    """Replace vertex ``v`` by a triangle.

    Leg ``i`` keeps its color and now ends at a new vertex ``w_i``; the
    triangle edge from ``w_i`` to ``w_j`` gets the color of the third leg.
    """
    inc = g.incidence().get(v)
    if inc is None:
        raise KeyError(v)
    edges = g.edge_index()
    if len(inc) != 3 or len(set(inc)) != 3 or any(edges[e].is_loop for e in inc):
        raise ValueError(f"vertex {v!r} must have three distinct non-loop edges")
    new_v = [f"{v}.{i}" for i in range(3)]
    taken = set(g.vertices)
    if taken & set(new_v):
        raise ValueError("generated vertex names collide")
    legs = {eid: i for i, eid in enumerate(inc)}
    out_edges: list[Edge] = []
    for e in g.edges:
        if e.id in legs:
            w = new_v[legs[e.id]]
            a, b = e.ends  # type: ignore[misc]
            out_edges.append(replace(e, ends=(w, b) if a == v else (a, w)))
        else:
            out_edges.append(e)
    leg_colors = [edges[eid].color for eid in inc]
    for i, j in ((0, 1), (1, 2), (0, 2)):
        third = 3 - i - j
        out_edges.append(Edge(f"{v}.{i}{j}", (new_v[i], new_v[j]), leg_colors[third]))
    verts = [u for u in g.vertices if u != v] + new_v
    return ColoredGraph(g.d, verts, out_edges, g.tags)


# ----------------------------------------------------------------------- JSON


def to_json(g: ColoredGraph) -> dict:
    edges = []
    for e in g.edges:
        if e.ends is None:
            ends: object = "circular"
        elif e.is_loop:
            ends = {"loop": e.ends[0]}
        else:
            ends = list(e.ends)
        edges.append({"id": e.id, "ends": ends, "color": format_bits(e.color, g.d)})
    return {"d": g.d, "vertices": list(g.vertices), "edges": edges, "tags": dict(g.tags)}


class GraphFormatError(ValueError):
    """The JSON document does not follow the graph schema."""


def from_json(doc: Mapping, skeleton: bool = False) -> ColoredGraph:
    """Parse a graph document.  With ``skeleton`` set, "d" and colors may be absent."""
    try:
        d = doc.get("d", 0) if skeleton else doc["d"]
        if not isinstance(d, int) or d < (0 if skeleton else 1):
            raise GraphFormatError("'d' must be a positive integer")
        verts = [str(v) for v in doc["vertices"]]
        edges = []
        for item in doc["edges"]:
            ends_raw = item["ends"]
            if ends_raw == "circular":
                ends = None
            elif isinstance(ends_raw, Mapping) and set(ends_raw) == {"loop"}:
                ends = (str(ends_raw["loop"]),) * 2
            elif isinstance(ends_raw, list) and len(ends_raw) == 2:
                ends = (str(ends_raw[0]), str(ends_raw[1]))
            else:
                raise GraphFormatError(f"bad ends for edge {item.get('id')!r}")
            color = item.get("color", "") if skeleton else item["color"]
            if skeleton and d == 0:
                color = ""
            if not isinstance(color, str) or len(color) != d:
                raise GraphFormatError(f"color of edge {item.get('id')!r} must be a bitstring of length {d}")
            edges.append(Edge(str(item["id"]), ends, parse_bits(color) if color else 0))
        tags = {str(k): str(v) for k, v in dict(doc.get("tags", {})).items()}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(str(exc)) from exc
    return ColoredGraph(d, verts, edges, tags)


def dumps(g: ColoredGraph) -> str:
    return json.dumps(to_json(g), indent=2)


def loads(text: str, skeleton: bool = False) -> ColoredGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise GraphFormatError("top level must be an object")
    return from_json(doc, skeleton)


# ------------------------------------------------------------- coloring help


def complete_coloring(g: ColoredGraph, partial: Mapping[str, int]) -> dict[str, int]:
    """Propagate the vertex relation from a partial coloring until all edges are set.

    Raises ValueError if the propagation meets a contradiction or stalls.
    """
    colors = dict(partial)
    inc = g.incidence()
    changed = True
    while changed:
        changed = False
        for v, eids in inc.items():
            unknown = [e for e in eids if e not in colors]
            if not unknown:
                prod = 0
                for e in eids:
                    prod ^= colors[e]
                if prod:
                    raise ValueError(f"vertex relation fails at {v!r}")
                continue
            if len(unknown) == 1:
                prod = 0
                for e in eids:
                    if e in colors:
                        prod ^= colors[e]
                colors[unknown[0]] = prod
                changed = True
    missing = [e.id for e in g.edges if e.id not in colors]
    if missing:
        raise ValueError(f"coloring not determined on {missing}")
    return colors


def vertex_groups(g: ColoredGraph) -> dict[str, list[int]]:
    """Colors at each vertex (the loop color twice)."""
    idx = g.edge_index()
    return {v: [idx[e].color for e in eids] for v, eids in g.incidence().items()}


def component_count_by_character(g: ColoredGraph) -> dict[int, int]:
    return {mask: betti(g, gamma_h(g, mask))[0] for mask in range(1, 1 << g.d)}


def edges_by_color(g: ColoredGraph) -> dict[int, list[str]]:
    out: dict[int, list[str]] = defaultdict(list)
    for e in g.edges:
        out[e.color].append(e.id)
    return dict(out)
