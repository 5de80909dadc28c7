from __future__ import annotations

from sparsegroup import CheckResult, run_checks

EXPECTED_NAMES = {
    "tree-parent-roundtrip",
    "arf-deciders-agree",
    "arf-implies-sparse",
    "leap-counts-sum-to-genus",
    "hyperelliptic-leap-shape",
    "unit-and-ordinary-signatures",
    "sparse-leap-identities",
    "kappa-deciders-agree",
    "frobenius-equals-weighted-leaps",
    "identity-matches-class",
    "pure-run-agrees",
    "pure-classes-partition",
    "kappa-chain-strict",
    "intersection-stays-in-class",
    "adjunction-stays-in-class",
    "pruned-equals-filtered",
    "two-block-family-structure",
}


def test_every_family_passes_at_genus_six():
    results = run_checks(6)
    assert {result.name for result in results} == EXPECTED_NAMES
    for result in results:
        assert result.passed, f"{result.name}: {result.counterexample}"
        assert result.instances > 0


def test_check_result_reports_failure():
    failing = CheckResult("example", 3, counterexample="gaps=[1]")
    assert not failing.passed
    assert CheckResult("example", 3).passed
