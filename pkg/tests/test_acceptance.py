"""End-to-end acceptance checks, one per criterion, each under its time budget.

Every test prints a "criterion N: PASS|FAIL" line (visible with -s or -v).
"""

import time

import pytest

from abelcover.predictor import ladder_lambda
from abelcover.verify import run_suite

CRITERIA = [
    (1, "oracle", {"d_max": 4, "samples": 200}, 60),
    (2, "graded-ring", {"d_max": 6}, 30),
    (3, "chi", {"n_max": 8}, 60),
    (4, "tautness", {"n_max": 8, "enum_n_max": 6}, 90),
    (5, "predictor", {"n_max": 8, "m_max": 7}, 10),
    (6, "witness", {"family": "all", "n_max": 8}, 60),
    (7, "mobparity", {"m_max": 9}, 30),
    (8, "lambda-rank", {"m_max": 8, "enum_n_max": 6}, 10),
    (9, "enumeration", {"samples": 30, "max_edges": 10}, 60),
    (10, "constructions", {"m_max": 7}, 30),
]


def report(capsys, label, ok, note):
    with capsys.disabled():
        print(f"\n{label}: {'PASS' if ok else 'FAIL'} ({note})")


@pytest.mark.parametrize("number,suite,bounds,limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(capsys, number, suite, bounds, limit):
    start = time.perf_counter()
    checks = run_suite(suite, **bounds)
    elapsed = time.perf_counter() - start
    failed = [c for c in checks if not c.ok]
    ok = bool(checks) and not failed and elapsed < limit
    note = f"{suite}: {len(checks) - len(failed)}/{len(checks)} checks in {elapsed:.1f}s, limit {limit}s"
    label = f"criterion {number}"
    if number == 8:
        # the suite leaves out even m with no g0 rung; see the two tests below
        label += " (odd m, or at least one rung colored g0)"
    report(capsys, label, ok, note)
    assert checks
    assert not failed, [c.to_json() for c in failed]
    assert elapsed < limit


def _literal_rank_failures(m_max=8):
    bad = []
    for m in range(3, m_max + 1):
        for pattern in range(1 << m):
            colors = [1 if pattern >> j & 1 else 2 for j in range(m)]
            k = sum(c == 1 for c in colors)
            if ladder_lambda(colors, 1).rank != m - k - (k == 0):
                bad.append((m, k))
    return bad


@pytest.mark.xfail(strict=True, reason="rank is m-2, not m-1, when m is even and no rung carries g0")
def test_criterion_8_every_pattern(capsys):
    bad = _literal_rank_failures()
    report(capsys, "criterion 8 (every pattern, m even included)", not bad, f"{len(bad)} counterexamples: {bad}")
    assert not bad


def test_criterion_8_counterexamples_are_exactly_even_cycles(capsys):
    bad = _literal_rank_failures()
    assert bad == [(4, 0), (6, 0), (8, 0)]
    for m, _ in bad:
        assert ladder_lambda([2] * m, 1).rank == m - 2
    report(capsys, "criterion 8 (counterexample set)", True, "only m = 4, 6, 8 with k = 0")
