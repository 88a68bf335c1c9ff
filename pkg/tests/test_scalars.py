"""Scalar helpers: reciprocal Gamma, Pochhammer, realness guards."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lacunary import (
    ImaginaryResidue,
    as_real,
    binomial,
    is_exact,
    pochhammer,
    rgamma,
    rgamma_exact,
)

INV_SQRT_PI = 0.5641895835477563


def test_rgamma_exact_small_integers():
    assert rgamma_exact(3) == Fraction(1, 2)
    assert rgamma_exact(1) == 1
    assert rgamma_exact(0) == 0
    assert rgamma_exact(-1) == 0


def test_rgamma_float_matches_poles_and_half_integer():
    assert rgamma(3) == 0.5
    assert rgamma(0) == 0.0
    assert rgamma(-1) == 0.0
    assert rgamma(-3.0) == 0.0
    assert math.isclose(rgamma(0.5), INV_SQRT_PI, rel_tol=1e-12)


def test_rgamma_exact_times_factorial_is_one():
    for n in range(1, 31):
        assert rgamma_exact(n) * math.factorial(n - 1) == 1


def test_rgamma_large_argument_underflows_to_zero():
    assert rgamma(400.0) == 0.0
    assert rgamma(171) > 0.0


@given(
    st.floats(min_value=-10.0, max_value=10.0).filter(
        lambda z: z > 0.1 or abs(z - round(z)) > 0.05
    )
)
def test_rgamma_functional_equation(z):
    lhs = rgamma(z)
    rhs = z * rgamma(z + 1.0)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs))


def test_rgamma_complex_near_real_collapses():
    assert rgamma(complex(3.0, 0.0)) == 0.5


def test_pochhammer_values():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(3, 0) == 1


@given(st.integers(min_value=0, max_value=30))
def test_pochhammer_of_one_is_factorial(n):
    assert pochhammer(1, n) == math.factorial(n)


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.integers(min_value=0, max_value=12),
)
def test_pochhammer_recurrence(a, n):
    assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_as_real_accepts_tiny_imaginary_part():
    assert as_real(complex(2.0, 1e-14)) == 2.0
    assert as_real(1.5) == 1.5


def test_as_real_rejects_large_imaginary_part():
    with pytest.raises(ImaginaryResidue):
        as_real(complex(1.0, 1e-3))


def test_is_exact_classification():
    assert is_exact(Fraction(1, 3))
    assert is_exact(7)
    assert not is_exact(0.5)
    assert not is_exact(complex(1, 0))
