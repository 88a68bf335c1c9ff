"""Bundled derivative and pseudo-Gaussian verification suites."""

from lacunary.identities import (
    laguerre_derivative_suite,
    pseudo_gaussian_suite,
    worst,
)


def test_derivative_suite_passes_with_zero_error():
    report = laguerre_derivative_suite()
    assert report.passed
    assert report.case_id == "EQ3.12-3.15"
    assert report.mode == "exact"
    assert report.grid_size == 1016
    assert report.max_abs_err == 0.0
    assert report.max_rel_err == 0.0
    assert not report.notes


def test_pseudo_gaussian_suite_passes():
    report = pseudo_gaussian_suite()
    assert report.passed
    assert report.case_id == "EQ3.17-3.21"
    assert report.mode == "exact+quadrature"
    assert report.grid_size == 88
    # Exact checks contribute zero; only the quadrature rows carry error.
    assert report.max_abs_err <= 1e-8
    assert not report.notes


def test_worst_aggregates_both_suites():
    reports = [laguerre_derivative_suite(), pseudo_gaussian_suite()]
    abs_err, rel_err = worst(reports)
    assert abs_err <= 1e-8
    assert rel_err <= 1e-8
    assert worst([]) == (0.0, 0.0)
