"""Acceptance suite: one test per numbered criterion, each rerunning its
verification from scratch through rainbowramsey.criteria (the same code
the CLI's `repro <claim-id>` invokes) and printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
report lines.
"""

import pytest

from rainbowramsey.criteria import REGISTRY, run_criterion


def _report(rep):
    num = REGISTRY[rep.claim_id][0]
    status = "PASS" if rep.passed else "FAIL"
    print(f"\ncriterion {num:2d} [{status}] {rep.claim_id}: {rep.title}")
    for st, line in rep.lines:
        print(f"    [{st:4s}] {line}")
    return rep


def test_criterion_01_subcube_mass_closed_form():
    rep = _report(run_criterion("subcube-mass"))
    assert rep.passed


def test_criterion_02_max_partition_identity():
    rep = _report(run_criterion("maxpart-identity"))
    assert rep.passed


def test_criterion_03_rainbow_ramsey_chain_instances():
    rep = _report(run_criterion("rainbow-chain-values"))
    assert rep.passed


def test_criterion_04_ramsey_cross_check():
    rep = _report(run_criterion("ramsey-chain-values"))
    assert rep.passed


def test_criterion_05_thin_antichains():
    rep = _report(run_criterion("thin-antichains"))
    assert rep.passed


def test_criterion_06_level_coloring_witnesses():
    rep = _report(run_criterion("level-witnesses"))
    assert rep.passed


def test_criterion_07_partial_two_color_sizes():
    rep = _report(run_criterion("two-color-sizes"))
    assert rep.passed


def test_criterion_08_mass_threshold_trend():
    rep = _report(run_criterion("two-color-mass-trend"))
    assert rep.passed


def test_criterion_09_fork_base_data_and_constants():
    rep = _report(run_criterion("fork-growth"))
    assert rep.passed


def test_criterion_10_trace_coloring_witnesses():
    rep = _report(run_criterion("trace-witnesses"))
    assert rep.passed


def test_criterion_11_fk_random_attainable_parts():
    # everything the randomized construction can deliver at these sizes:
    # the (14,5) instance alone is impossible (see the xfail below)
    rep = _report(run_criterion("fk-random"))
    fails = [text for status, text in rep.lines if status == "FAIL"]
    assert fails, "expected the impossible (14,5) instance to be reported"
    assert all("k=5" in text for text in fails)
    passes = [text for status, text in rep.lines if status == "ok"]
    assert any("n=14 k=3" in text for text in passes)
    assert any("n=8, k=3" in text for text in passes)
    assert any("seed-deterministic" in text for text in passes)


@pytest.mark.xfail(
    strict=True,
    reason="criterion 11 as stated includes (n=14, k=5), which cannot exist: "
    "the k-1 = 4 centers would have size 8 with pairwise intersections <= "
    "floor(0.26*14) = 3, i.e. complements of size 6 with pairwise "
    "intersections <= 1, and already three such complements need a union "
    "of size >= 3*6 - 3 = 15 > 14.  See notes in the decisions ledger.",
)
def test_criterion_11_fk_random_as_stated():
    rep = run_criterion("fk-random")
    assert rep.passed


def test_criterion_12_inequality_grids():
    rep = _report(run_criterion("inequality-grids"))
    assert rep.passed


def test_criterion_13_threshold_consistency():
    rep = _report(run_criterion("threshold-consistency"))
    assert rep.passed


def test_criterion_14_rainbow_a2_characterization():
    rep = _report(run_criterion("rainbow-a2-comparability"))
    assert rep.passed
