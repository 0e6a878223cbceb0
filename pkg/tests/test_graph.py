import json

import pytest
from hypothesis import given, settings, strategies as st

from abelcover import families as fam
from abelcover.enumeration import enumerate_colorings
from abelcover.graph import (
    ColoredGraph,
    Edge,
    GraphFormatError,
    betti,
    complete_coloring,
    dumps,
    from_json,
    gamma_h,
    has_bridge,
    is_cycle_subgraph,
    is_unsplittable,
    loads,
    special_circuits,
    to_json,
    validate,
    wye_delta,
)

ALL_FAMILIES = [
    fam.make_theta(),
    fam.make_k4_d3(),
    fam.mobius_d2(4),
    fam.mobius_d2(5),
    fam.mobius_d3_special(5),
    fam.mobius_d3_special(5, "four-circuit"),
    fam.mobius_d3_exceptional4(),
    fam.mobius_d4(5),
    fam.mobius_d4_alt(6),
    fam.d3_tree_circuit(4, 6),
    fam.genpetersen_d3(5, 2),
    fam.genpetersen_d3(7, 2),
    fam.petersen_d5(),
]


def with_circle() -> ColoredGraph:
    g = fam.make_theta()
    return ColoredGraph(2, g.vertices, list(g.edges) + [Edge("o", None, 0b11)], {"note": "circle"})


def with_loop() -> ColoredGraph:
    edges = [Edge("a", ("u", "u"), 1), Edge("b", ("u", "v"), 2), Edge("c", ("v", "v"), 1)]
    return ColoredGraph(2, ["u", "v"], edges, {})


@pytest.mark.parametrize("g", ALL_FAMILIES + [with_circle(), with_loop()], ids=lambda g: g.tags.get("family", "hand"))
def test_json_round_trip(g):
    assert loads(dumps(g)) == g
    doc = to_json(g)
    assert [e["id"] for e in doc["edges"]] == [e.id for e in g.edges]


def test_json_forms():
    doc = to_json(with_circle())
    assert doc["edges"][-1]["ends"] == "circular"
    assert to_json(with_loop())["edges"][0]["ends"] == {"loop": "u"}
    assert doc["edges"][0]["color"] == "10"


@pytest.mark.parametrize(
    "doc",
    [
        {"vertices": [], "edges": []},
        {"d": 2, "vertices": ["u", "v"], "edges": [{"id": "e", "ends": ["u", "v"], "color": "1x"}]},
        {"d": 2, "vertices": ["u", "v"], "edges": [{"id": "e", "ends": ["u", "v"], "color": "101"}]},
        {"d": 2, "vertices": ["u", "v"], "edges": [{"id": "e", "ends": ["u"], "color": "10"}]},
        {"d": 0, "vertices": [], "edges": []},
    ],
)
def test_malformed_documents_rejected(doc):
    with pytest.raises(GraphFormatError):
        from_json(doc)


def test_dangling_references_are_validation_errors():
    g = from_json({"d": 2, "vertices": ["u", "u"], "edges": [{"id": "e", "ends": ["u", "w"], "color": "10"}]})
    problems = validate(g)
    assert any("unknown vertex" in p for p in problems)
    assert any("duplicate vertex" in p for p in problems)


def test_malformed_text_rejected():
    with pytest.raises((GraphFormatError, json.JSONDecodeError)):
        loads("{not json")


@pytest.mark.parametrize("g", ALL_FAMILIES, ids=lambda g: g.tags.get("family"))
def test_families_are_valid(g):
    assert validate(g) == []


def test_validation_messages():
    g = fam.make_theta()
    bad = g.with_colors({"e0": 0, "e1": 2, "e2": 3})
    problems = validate(bad)
    assert any("identity" in p for p in problems)
    assert any("product" in p for p in problems)
    degenerate = g.with_colors({"e0": 1, "e1": 1, "e2": 0})
    assert validate(degenerate)
    assert validate(with_loop())


def test_colors_must_generate():
    g = fam.make_theta()
    lifted = ColoredGraph(3, g.vertices, g.edges, g.tags)
    assert any("generate" in p for p in validate(lifted))


@pytest.mark.parametrize("g", ALL_FAMILIES, ids=lambda g: g.tags.get("family"))
def test_every_gamma_h_is_a_union_of_circles(g):
    for h in range(1, 2**g.d):
        assert is_cycle_subgraph(g, gamma_h(g, h))


@pytest.mark.parametrize("n", range(2, 6))
def test_gamma_h_circles_on_enumerated_colorings(n):
    for g in enumerate_colorings(fam.mobius_ladder_skeleton(n), 3, up_to_symmetry=True):
        for h in range(1, 8):
            assert is_cycle_subgraph(g, gamma_h(g, h))


def test_betti_numbers():
    assert betti(fam.petersen_d5()) == (1, 6)
    assert betti(fam.genpetersen_d3(7, 2)) == (1, 8)
    assert betti(fam.mobius_d4(5)) == (1, 6)
    assert betti(with_circle()) == (2, 3)


def test_k4_special_circuit_and_unsplittable():
    g = fam.make_k4_d3()
    assert is_unsplittable(g)
    assert {len(c) for _, c in special_circuits(g)} == {3}


def test_mobius_d2_even_is_splittable():
    assert not is_unsplittable(fam.mobius_d2(4))


def test_genpetersen_outer_rim_is_special():
    g = fam.genpetersen_d3(5, 2)
    rim = frozenset(f"s{i}" for i in range(5))
    assert rim in [c for _, c in special_circuits(g)]


def test_has_bridge():
    barbell = ColoredGraph(
        0,
        ["a", "b", "c", "d"],
        [
            Edge("p", ("a", "b")),
            Edge("q", ("a", "b")),
            Edge("r", ("c", "d")),
            Edge("s", ("c", "d")),
            Edge("x", ("a", "c")),
            Edge("y", ("b", "d")),
        ],
        {},
    )
    assert not has_bridge(barbell)
    cut = ColoredGraph(0, ["u", "v"], [Edge("a", ("u", "u")), Edge("b", ("u", "v")), Edge("c", ("v", "v"))], {})
    assert has_bridge(cut)
    assert not has_bridge(fam.petersen_d5())


@pytest.mark.parametrize("g", [fam.make_k4_d3(), fam.petersen_d5(), fam.mobius_d4(4), fam.genpetersen_d3(5, 2)], ids=lambda g: g.tags["family"])
def test_wye_delta_keeps_coloring_valid(g):
    for v in g.vertices:
        h = wye_delta(g, v)
        assert validate(h) == []
        assert betti(h) == (1, betti(g)[1] + 1)
        assert len(h.vertices) == len(g.vertices) + 2


def test_wye_delta_colors_triangle_by_opposite_leg():
    g = fam.make_k4_d3()
    v = g.vertices[0]
    legs = g.incidence()[v]
    h = wye_delta(g, v)
    col = h.colors()
    for i, j in ((0, 1), (1, 2), (0, 2)):
        assert col[f"{v}.{i}{j}"] == col[legs[3 - i - j]]


def test_wye_delta_rejects_bad_vertex():
    with pytest.raises(KeyError):
        wye_delta(fam.make_k4_d3(), "nope")
    with pytest.raises(ValueError):
        wye_delta(with_loop(), "u")


def test_complete_coloring_propagates():
    sk = fam.mobius_ladder_skeleton(3)
    col = complete_coloring(sk, {"t0": 1, "t1": 2, "t2": 4, "s0": 3})
    assert len(col) == len(sk.edges)
    g = sk.with_colors(col, d=3)
    assert validate(g) == []


@given(st.integers(3, 7).flatmap(lambda m: st.tuples(st.just(m), st.integers(m, 8))))
@settings(max_examples=20, deadline=None)
def test_tree_circuit_has_special_circuit(mb):
    m, b = mb
    g = fam.d3_tree_circuit(m, b)
    assert betti(g)[1] == b
    assert is_unsplittable(g)
    assert m in {len(c) for _, c in special_circuits(g)}


def test_skeleton_documents():
    doc = {"vertices": ["u", "v"], "edges": [{"id": f"e{i}", "ends": ["u", "v"]} for i in range(3)]}
    g = from_json(doc, skeleton=True)
    assert g.d == 0 and all(e.color == 0 for e in g.edges)
    assert loads(dumps(fam.k4_skeleton()), skeleton=True) == fam.k4_skeleton()
    with pytest.raises(GraphFormatError):
        from_json(doc)
