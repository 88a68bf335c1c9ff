"""Guarded series summation."""

import math

import pytest

from lacunary import NonConvergence, SumControl, sum_series, sum_shells


def _exp_terms(x=1.0):
    term = 1.0
    k = 0
    while True:
        yield term
        k += 1
        term *= x / k


def test_exponential_series_converges():
    value, tail = sum_series(_exp_terms(), SumControl(rel_tol=1e-14))
    assert abs(value - math.e) <= 1e-13
    assert tail <= 1e-14 * math.e * 10


def test_all_zero_generator_is_exhausted_sum():
    value, tail = sum_series(iter([0.0, 0.0, 0.0]))
    assert value == 0.0
    assert tail == 0.0


def test_divergent_series_raises():
    def powers_of_two():
        v = 1.0
        while True:
            yield v
            v *= 2.0

    with pytest.raises(NonConvergence):
        sum_series(powers_of_two(), SumControl(max_terms=50))


def test_mittag_leffler_style_series_matches_exp():
    # E_{1,1}(1) is the plain exponential series.
    value, _ = sum_series(_exp_terms(1.0), SumControl(rel_tol=1e-15))
    assert abs(value - math.exp(1.0)) <= 1e-12


def test_stop_rule_needs_consecutive_small_terms():
    # A single small term among large ones must not stop the sum.
    terms = [1.0, 1e-20, 1.0, 1e-20, 1.0]
    value, tail = sum_series(iter(terms), SumControl(max_terms=10))
    assert value == pytest.approx(3.0)
    assert tail == 0.0


def test_non_finite_term_is_rejected():
    from lacunary import NumericError

    with pytest.raises(NumericError):
        sum_series(iter([1.0, float("inf")]))


def test_sum_shells_groups_by_order():
    # sum over n of x^n/n! via shells reproduces exp.
    def shell(n: int) -> float:
        return 0.5**n / math.factorial(n)

    value, _ = sum_shells(shell)
    assert abs(value - math.exp(0.5)) <= 1e-13


def test_control_validation():
    with pytest.raises(ValueError):
        SumControl(max_terms=0)
    with pytest.raises(ValueError):
        SumControl(rel_tol=2.0)
    with pytest.raises(ValueError):
        SumControl(consecutive_small=0)
