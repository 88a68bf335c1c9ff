"""Polynomial families: explicit sums, recurrences, decompositions."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lacunary import (
    DomainError,
    FormalPowerSeries,
    assoc_laguerre,
    assoc_laguerre_sequence,
    assoc_laguerre_xpoly,
    hermite,
    hermite_coeff_sequence,
    hermite_h,
    hermite_h_sequence,
    lacunary_decomposition,
    laguerre,
    laguerre_sequence,
    laguerre_xpoly,
    lambda_poly,
    rgamma_exact,
)
from lacunary.polys import hermite2_from_classical

F = Fraction


def test_laguerre_base_values():
    assert laguerre(0, F(7), F(5)) == 1
    assert laguerre(2, 2, 1) == -1
    for n in range(6):
        assert laguerre(n, 0, F(3)) == F(3) ** n


def test_laguerre_rejects_negative_degree():
    with pytest.raises(DomainError):
        laguerre(-1, 1, 1)


def test_lambda_poly_small_orders():
    assert lambda_poly(0, 2, 1, F(5), F(3)) == rgamma_exact(3)
    alpha, beta, x, y = 2, 2, F(1, 2), F(3)
    want = y * rgamma_exact(1 + alpha) - x * rgamma_exact(beta + 1 + alpha)
    assert lambda_poly(1, alpha, beta, x, y) == want
    assert lambda_poly(2, 1, 1, 1, 1) == F(1, 6)


def test_assoc_laguerre_values():
    assert assoc_laguerre(2, 1, 1, 1) == F(1, 2)
    for x in (F(0), F(1, 3), F(2)):
        assert assoc_laguerre(1, 1, x, 1) == 2 - x


def test_assoc_laguerre_negative_offset_is_finite():
    # Negative integer offsets must stay well defined termwise; the pole of
    # the prefactor is absorbed into the finite per-term product.
    x, y = F(1), F(1)
    assert assoc_laguerre(2, -1, x, y) == x * x / 2 - x * y
    val = assoc_laguerre(4, 2 - 4, F(1), F(1))
    assert isinstance(val, Fraction)


def test_hermite_values():
    a, b = F(2), F(3)
    assert hermite(2, 2, (a, b)) == a * a + 2 * b
    assert hermite(3, 3, (F(1), F(2), F(3))) == 1 + 12 + 18
    assert hermite(4, 5, (F(2), 0, 0, 0)) == F(2) ** 5


def test_hermite_generating_function():
    # n! [t^n] exp(sum_s x_s t^s) equals the multi-variable polynomial.
    xs = (F(1, 2), F(-1), F(2), F(1, 3))
    for m in range(1, 5):
        order = 12
        coeffs = [F(0)] * (order + 1)
        for s in range(1, m + 1):
            if s <= order:
                coeffs[s] = xs[s - 1]
        series = FormalPowerSeries(coeffs).exp()
        for n in range(order + 1):
            assert math.factorial(n) * series[n] == hermite(m, n, xs[:m])


def test_hermite_coeff_sequence_matches_direct():
    xs = (F(1, 2), F(-2))
    seq = hermite_coeff_sequence(2, 10, xs)
    for n in range(11):
        assert seq[n] * math.factorial(n) == hermite(2, n, xs)


def test_hermite_h_small_orders():
    assert hermite_h(0, 0.3 + 0j) == 1
    u = 0.25 + 0j
    assert hermite_h(1, u) == 2 * u
    assert hermite_h(2, u) == 4 * u * u - 2


def test_hermite_h_sequence_consistent():
    u = 0.1j
    seq = hermite_h_sequence(6, u)
    for n in range(7):
        assert seq[n] == pytest.approx(hermite_h(n, u), rel=1e-13, abs=1e-13)


def test_hermite2_from_classical_agrees():
    for x in (-2.0, -0.5, 0.5, 2.0):
        for y in (0.25, 1.0, 4.0):
            for n in range(21):
                direct = float(hermite(2, n, (F(x), F(y))))
                via_h = hermite2_from_classical(n, x, y)
                assert abs(direct - via_h) <= 1e-11 * max(1.0, abs(direct))


def test_lacunary_decompositions():
    tuples = ((F(1), F(1)), (F(1, 2), F(2, 3)), (F(3, 2), F(-1)))
    for x, y in tuples:
        for n in range(7):
            assert lacunary_decomposition("double", n, x, y) == laguerre(2 * n, x, y)
            assert lacunary_decomposition("triple", n, x, y) == laguerre(3 * n, x, y)
    with pytest.raises(DomainError):
        lacunary_decomposition("quadruple", 1, F(1), F(1))


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@settings(max_examples=25, deadline=None)
@given(small, small.filter(lambda v: v != 0), st.integers(min_value=0, max_value=12))
def test_homogeneity(x, y, n):
    assert laguerre(n, x, y) == y**n * laguerre(n, x / y, 1)


@settings(max_examples=15, deadline=None)
@given(small, small, st.integers(min_value=0, max_value=25))
def test_laguerre_sequence_matches_explicit(x, y, n):
    seq = laguerre_sequence(n, x, y)
    assert seq[n] == laguerre(n, x, y)


@settings(max_examples=15, deadline=None)
@given(
    small,
    small,
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=25),
)
def test_assoc_sequence_matches_explicit(x, y, alpha, n):
    seq = assoc_laguerre_sequence(n, alpha, x, y)
    assert seq[n] == assoc_laguerre(n, alpha, x, y)


def test_sequences_float_path_is_stable():
    seq = laguerre_sequence(250, 1.0)
    ref = float(laguerre(250, F(1)))
    assert abs(seq[250] - ref) <= 1e-12 * abs(ref)


def test_xpoly_coefficient_lists():
    x, y = F(2, 3), F(5, 4)
    for n in range(8):
        coeffs = laguerre_xpoly(n, y)
        assert sum(c * x**k for k, c in enumerate(coeffs)) == laguerre(n, x, y)
    for n in range(8):
        coeffs = assoc_laguerre_xpoly(n, 2)
        assert sum(c * x**k for k, c in enumerate(coeffs)) == assoc_laguerre(
            n, 2, x, 1
        )
