"""Zero-tolerance coefficient engines.

Every function here compares rational numbers for equality; a single
mismatch fails the case.  Each engine yields (label, lhs, rhs) triples so
the caller can count comparisons and collect mismatches uniformly.

Two recurring strategies:
  * reduce a truncated umbral expansion and extract the t-coefficients,
    then convolve with the exponential prefactor;
  * build both sides as formal power series and compare term by term.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from ..fps import FormalPowerSeries, fps_geometric, fps_x
from ..polys import assoc_laguerre, laguerre, lambda_poly
from ..scalars import binomial, rgamma_exact
from ..umbral import UmbralSeries, umb_exp

Check = tuple[str, Fraction, Fraction]

# The x-degree slot of UmbralSeries doubles as a t-degree tracker in the
# generating-function engines below: each factor of t tags one unit.


def _exp_conv(poly: dict[int, Fraction], rate: Fraction, n: int) -> Fraction:
    """[t^n] of (sum_k poly[k] t^k) * exp(rate * t)."""
    total = Fraction(0)
    for k, c in poly.items():
        if k <= n:
            total += c * rate ** (n - k) * rgamma_exact(n - k + 1)
    return total


def _label(name: str, binding: dict, n: int) -> str:
    parts = ", ".join(f"{k}={v}" for k, v in binding.items())
    return f"{name}[{parts}; n={n}]"


# -- generating functions over t -----------------------------------------


def eq1_7(nmax: int, tuples: Sequence[dict]) -> Iterator[Check]:
    """Exponential generating function of the two-index family.

    RHS built as c^alpha exp(-c^beta x t) reduced termwise, times e^{y t}.
    """
    for binding in tuples:
        alpha, beta = int(binding["alpha"]), int(binding["beta"])
        x, y = Fraction(binding["x"]), Fraction(binding["y"])
        arg = UmbralSeries.monomial(-x, beta, x_degree=1)
        reduced = (UmbralSeries.symbol(alpha) * umb_exp(arg, nmax)).reduce_poly()
        for n in range(nmax + 1):
            lhs = lambda_poly(n, alpha, beta, x, y) * rgamma_exact(n + 1)
            rhs = _exp_conv(reduced, y, n)
            yield _label("EQ1.7", binding, n), lhs, rhs


def eq1_9(nmax: int, tuples: Sequence[dict]) -> Iterator[Check]:
    """Ordinary generating function against the composed closed form."""
    for binding in tuples:
        alpha, beta = int(binding["alpha"]), int(binding["beta"])
        x, y = Fraction(binding["x"]), Fraction(binding["y"])
        geom = fps_geometric(nmax, y)  # 1/(1 - t y)
        inner = geom * fps_x(nmax, -x)
        outer = FormalPowerSeries(
            [rgamma_exact(beta * r + alpha + 1) for r in range(nmax + 1)]
        )
        rhs_series = outer.compose(inner) * geom
        for n in range(nmax + 1):
            lhs = lambda_poly(n, alpha, beta, x, y)
            yield _label("EQ1.9", binding, n), lhs, rhs_series[n]


def eq1_11(nmax: int, tuples: Sequence[dict]) -> Iterator[Check]:
    """Classical associated generating function, fully composed."""
    for binding in tuples:
        alpha = int(binding["alpha"])
        x, y = Fraction(binding["x"]), Fraction(binding["y"])
        geom = fps_geometric(nmax, y)
        rhs_series = (geom * fps_x(nmax, -x)).exp() * geom.pow(1 + alpha)
        for n in range(nmax + 1):
            lhs = assoc_laguerre(n, alpha, x, y)
            yield _label("EQ1.11", binding, n), lhs, rhs_series[n]


def eq2_7(nmax: int, tuples: Sequence[dict]) -> Iterator[Check]:
    """Double-lacunary exponential generating function, oracle double sum.

    The quadratic umbral exponent reduces to the double sum directly; its
    t-coefficients times the e^{y^2 t} convolution must match the lacunary
    polynomials exactly.
    """
    for binding in tuples:
        x, y = Fraction(binding["x"]), Fraction(binding["y"])
        arg = UmbralSeries.monomial(x * x, 2, x_degree=1) + UmbralSeries.monomial(
            -2 * x * y, 1, x_degree=1
        )
        reduced = umb_exp(arg, nmax).reduce_poly()
        for n in range(nmax + 1):
            lhs = laguerre(2 * n, x, y) * rgamma_exact(n + 1)
            rhs = _exp_conv(reduced, y * y, n)
            yield _label("EQ2.7", binding, n), lhs, rhs


def eq2_13(nmax: int, tuples: Sequence[dict]) -> Iterator[Check]:
    """Negative-offset family summed against (1 + y t)^alpha e^{-t x}.

    The inverse-symbol exponential block supplies the binomial factor:
    Gamma(1+alpha) c^alpha e^{y t / c} reduces to sum_k C(alpha,k) (y t)^k.
    """
    for binding in tuples:
        alpha = int(binding["alpha"])
        x, y = Fraction(binding["x"]), Fraction(binding["y"])
        arg = UmbralSeries.monomial(y, -1, x_degree=1)
        reduced = (UmbralSeries.symbol(alpha) * umb_exp(arg, nmax)).reduce_poly()
        gamma_alpha = Fraction(math.factorial(alpha))
        binom = {k: gamma_alpha * c for k, c in reduced.items()}
        for n in range(nmax + 1):
            lhs = assoc_laguerre(n, alpha - n, x, y)
            rhs = _exp_conv(binom, -x, n)
            yield _label("EQ2.13", binding, n), lhs, rhs


def eq2_12_block(alphas: Sequence[int], b: Fraction, nmax: int) -> Iterator[Check]:
    """Building block: c^alpha e^{b/c} reduces to (1+b)^alpha / alpha!.

    Exact for integer alpha once the truncation passes alpha (the series
    terminates there because negative-integer weights vanish).
    """
    for alpha in alphas:
        arg = UmbralSeries.monomial(b, -1, x_degree=0)
        got = (UmbralSeries.symbol(alpha) * umb_exp(arg, max(nmax, alpha + 1))).reduce()
        want = (1 + b) ** alpha * rgamma_exact(alpha + 1)
        yield f"EQ2.12[alpha={alpha}, b={b}]", got, want


def eq3_8(nmax: int, tuples: Sequence[dict]) -> Iterator[Check]:
    """Bilateral generating function via two commuting symbols."""
    for binding in tuples:
        x, y = Fraction(binding["x"]), Fraction(binding["y"])
        z, u = Fraction(binding["z"]), Fraction(binding["u"])
        arg = (
            UmbralSeries.monomial(-x * u, 1, x_degree=1, which=1)
            + UmbralSeries.monomial(-y * z, 1, x_degree=1, which=2)
            + UmbralSeries.monomial(x * z, 1, x_degree=1, which=1)
            * UmbralSeries.symbol(1, which=2)
        )
        reduced = umb_exp(arg, nmax).reduce_poly()
        for n in range(nmax + 1):
            lhs = laguerre(n, x, y) * laguerre(n, z, u) * rgamma_exact(n + 1)
            rhs = _exp_conv(reduced, u * y, n)
            yield _label("EQ3.8", binding, n), lhs, rhs


# -- Laguerre derivative ---------------------------------------------------


def laguerre_derivative(coeffs: list[Fraction]) -> list[Fraction]:
    """Apply -d/dx x d/dx to a polynomial given by its x-coefficients."""
    out = [Fraction(0)] * max(len(coeffs) - 1, 0)
    for k in range(1, len(coeffs)):
        out[k - 1] -= k * k * coeffs[k]
    return out


def eq3_12_lowering(nmax: int, ys: Sequence[Fraction]) -> Iterator[Check]:
    """The derivative lowers the polynomial index: -d_x x d_x L_n = n L_{n-1}."""
    from ..polys import laguerre_xpoly

    for y in ys:
        for n in range(1, nmax + 1):
            got = laguerre_derivative(laguerre_xpoly(n, y))
            want = [n * c for c in laguerre_xpoly(n - 1, y)]
            got += [Fraction(0)] * (len(want) - len(got))
            for k, (g, w) in enumerate(zip(got, want)):
                yield f"EQ3.12[y={y}, n={n}, x^{k}]", g, w


def eq3_14(total_order: int, _tuples: Sequence[dict] = ()) -> Iterator[Check]:
    """Exponentiated derivative on e^{-x}, as a bivariate coefficient identity.

    [y^a x^b] of both sides for a+b <= total_order; the closed form gives
    (-1)^b C(a+b, a) / b!.  Pointwise evaluation at fixed y is an infinite
    sum, so the finitely exact statement is this double-Taylor identity.
    """
    base = [Fraction((-1) ** b, math.factorial(b)) for b in range(total_order + 1)]
    current = base
    a_fact = Fraction(1)
    for a in range(total_order + 1):
        if a:
            current = laguerre_derivative(current)
            a_fact *= a
        for b in range(total_order + 1 - a):
            lhs = (current[b] if b < len(current) else Fraction(0)) / a_fact
            rhs = Fraction((-1) ** b * binomial(a + b, a), math.factorial(b))
            yield f"EQ3.14[y^{a} x^{b}]", lhs, rhs


def eq3_15(order: int, depth: int = 10) -> Iterator[Check]:
    """Eigenfunction check: repeated derivative applications fix the series.

    C_0's x-coefficients are reproduced exactly by every power of the
    derivative, which is the coefficient-level content of the exponential
    identity (the e^y factor is the a-index normalization).
    """
    start = [
        Fraction((-1) ** k, math.factorial(k) ** 2) for k in range(order + depth + 1)
    ]
    current = start
    for a in range(1, depth + 1):
        current = laguerre_derivative(current)
        for b in range(order + 1):
            yield f"EQ3.15[a={a}, x^{b}]", current[b], start[b]


# -- pseudo-Gaussian family -------------------------------------------------


def _pseudo_gaussian(order: int) -> UmbralSeries:
    """exp(-c (x/2)^2) truncated; x-degree metadata carries the monomials."""
    return umb_exp(UmbralSeries.monomial(Fraction(-1, 4), 1, x_degree=2), order)


def eq3_17(order: int) -> Iterator[Check]:
    """Bessel J0 as a pseudo-Gaussian: reduction vs Taylor coefficients."""
    reduced = _pseudo_gaussian(order).reduce_poly()
    for k in range(order + 1):
        want = Fraction((-1) ** k, 4**k * math.factorial(k) ** 2)
        yield f"EQ3.17[x^{2 * k}]", reduced.get(2 * k, Fraction(0)), want


def eq3_18_exact(order: int) -> Iterator[Check]:
    """Dilation by sigma = -1/2 turns the pseudo-Gaussian into a Gaussian."""
    dilated = _pseudo_gaussian(order).dilate(Fraction(-1, 2))
    reduced = dilated.reduce_poly()
    for k in range(order + 1):
        want = Fraction((-1) ** k, 4**k * math.factorial(k))
        yield f"EQ3.18[x^{2 * k}]", reduced.get(2 * k, Fraction(0)), want


def eq3_20(order: int) -> Iterator[Check]:
    """Gaussian as an umbral Lorentzian: geometric series in -c x^2."""
    acc = UmbralSeries.scalar(Fraction(0))
    for k in range(order + 1):
        acc = acc + UmbralSeries.monomial(Fraction((-1) ** k), k, x_degree=2 * k)
    reduced = acc.reduce_poly()
    for k in range(order + 1):
        want = Fraction((-1) ** k, math.factorial(k))
        yield f"EQ3.20[x^{2 * k}]", reduced.get(2 * k, Fraction(0)), want


def eq3_21(order: int) -> Iterator[Check]:
    """Error-function integral via the arctan umbral series.

    Half-integer symbol powers cancel in the product, so the reduction stays
    exact; term k carries x^{2k+1}/(2k+1) and weight 1/k!.
    """
    acc = UmbralSeries.scalar(Fraction(0))
    for k in range(order + 1):
        acc = acc + UmbralSeries.monomial(
            Fraction((-1) ** k, 2 * k + 1), Fraction(2 * k + 1, 2), x_degree=2 * k + 1
        )
    reduced = (UmbralSeries.symbol(Fraction(-1, 2)) * acc).reduce_poly()
    for k in range(order + 1):
        want = Fraction((-1) ** k, (2 * k + 1) * math.factorial(k))
        yield f"EQ3.21[x^{2 * k + 1}]", reduced.get(2 * k + 1, Fraction(0)), want
