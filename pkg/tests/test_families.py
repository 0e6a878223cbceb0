import pytest

from abelcover import families as fam
from abelcover.graph import betti, gamma_h, is_unsplittable, special_circuits, validate


def test_petersen_shape_and_connected_gammas():
    g = fam.petersen_d5()
    assert (len(g.vertices), len(g.edges)) == (10, 15)
    for h in range(1, 32):
        assert betti(g, gamma_h(g, h))[0] == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_variant_special_circuit(n):
    g = fam.mobius_d3_special(n)
    assert is_unsplittable(g)
    assert n + 1 in {len(c) for _, c in special_circuits(g)}


@pytest.mark.parametrize("n", range(3, 9))
def test_four_circuit_variant(n):
    g = fam.mobius_d3_special(n, "four-circuit")
    assert validate(g) == []
    assert is_unsplittable(g)
    assert {len(c) for _, c in special_circuits(g)} == {4}


def test_exceptional_ladder():
    g = fam.mobius_d3_exceptional4()
    assert validate(g) == []
    assert is_unsplittable(g)
    assert special_circuits(g)


@pytest.mark.parametrize("n", range(3, 9))
def test_mobius_d4_rungs(n):
    g = fam.mobius_d4(n)
    col = g.colors()
    rungs = [col[t] for t in fam.rung_ids(n)]
    assert rungs.count(fam.x(3)) == n - 3
    assert {fam.x(1), fam.x(2)} <= set(rungs)
    assert col["s0"] == fam.x(4)


@pytest.mark.parametrize("n", range(4, 9))
def test_mobius_d4_alt_rungs(n):
    g = fam.mobius_d4_alt(n)
    rungs = [g.colors()[t] for t in fam.rung_ids(n)]
    assert rungs[:3] == [fam.x(1), fam.x(2), fam.x(3)]
    assert rungs.count(fam.x(4)) == n - 4
    assert g.tags["rim0"] == str(g.colors()["s0"])


@pytest.mark.parametrize("n,k", [(5, 2), (7, 2), (7, 3)])
def test_genpetersen_inner_rim_in_h0(n, k):
    g = fam.genpetersen_d3(n, k)
    h0 = next(h for h, c in special_circuits(g) if c == frozenset(f"s{i}" for i in range(n)))
    for i in range(n):
        assert not gamma_h(g, h0) & {f"t{i}"}


@pytest.mark.parametrize("n", range(2, 9))
def test_ladder_with_k_special_rungs(n):
    for k in range(n + 1):
        g = fam.mobius_d3_ladder(n, k)
        if k >= n - 1:
            # the rung product would force a trivial or repeated color
            assert g is None
            continue
        assert validate(g) == []
        col = g.colors()
        g0 = 0
        for t in fam.rung_ids(n):
            g0 ^= col[t]
        assert g0 == fam.x(1)
        assert sum(col[t] == g0 for t in fam.rung_ids(n)) == k
        assert fam.mobius_d3_ladder(n, k) == g


def test_bad_parameters():
    with pytest.raises(ValueError):
        fam.mobius_d4(2)
    with pytest.raises(ValueError):
        fam.d3_tree_circuit(4, 3)
    with pytest.raises(ValueError):
        fam.genpetersen_d3(4, 2)
    with pytest.raises(ValueError):
        fam.mobius_d3_special(2, "four-circuit")


def test_registry_covers_cli_families():
    assert set(fam.FAMILIES) == {
        "theta", "k4", "mobius-d2", "mobius-d3-special", "mobius-d3-exceptional4",
        "mobius-d4", "mobius-d4-alt", "d3-tree-circuit", "genpetersen-d3", "petersen-d5",
    }
