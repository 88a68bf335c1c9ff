"""Entire special functions used as closed forms for the identity checks.

Everything here is a floating-point series evaluator built on sum_series, so
each value carries the same stop rule and tail accounting.  The Hermite-based
hybrids follow one sign convention throughout: slot p of h_tricomi receives
an extra (-1)^p, which is the reading that the umbral oracle confirms.
"""

from __future__ import annotations

import math
from itertools import count
from typing import Iterator, Sequence

from .errors import DomainError
from .scalars import rgamma
from .summation import SumControl, sum_series, sum_shells
from .polys import hermite_coeff_sequence

_DEFAULT = SumControl(max_terms=400, rel_tol=1e-14)


def wright(beta: float, alpha: float, x: float, control: SumControl | None = None) -> float:
    """Bessel-Wright W^(beta,alpha)(x) = sum_r x^r / (r! Gamma(beta r + alpha))."""
    if beta <= 0:
        raise DomainError("wright needs beta > 0")
    ctrl = control or _DEFAULT

    def terms() -> Iterator[float]:
        power = 1.0
        for r in count():
            yield power * rgamma(beta * r + alpha)
            power *= x / (r + 1)

    value, _ = sum_series(terms(), ctrl)
    return value


def mittag_leffler(beta: float, alpha: float, x: float, control: SumControl | None = None) -> float:
    """E_(beta,alpha)(x) = sum_r x^r / Gamma(beta r + alpha)."""
    if beta <= 0:
        raise DomainError("mittag_leffler needs beta > 0")
    ctrl = control or _DEFAULT

    def gen() -> Iterator[float]:
        power = 1.0
        for r in count():
            yield power * rgamma(beta * r + alpha)
            power *= x

    value, _ = sum_series(gen(), ctrl)
    return value


def tricomi(alpha: float, x: float, control: SumControl | None = None) -> float:
    """Tricomi C_alpha(x) = sum_r (-x)^r / (r! Gamma(1 + alpha + r))."""
    ctrl = control or _DEFAULT

    def gen() -> Iterator[float]:
        term = 1.0
        for r in count():
            yield term * rgamma(1.0 + alpha + r)
            term *= -x / (r + 1)

    value, _ = sum_series(gen(), ctrl)
    return value


def bessel_i(m: int, z: float, control: SumControl | None = None) -> float:
    """Modified Bessel I_m(z) = sum_k (z/2)^(m+2k) / (k! (m+k)!)."""
    if m < 0:
        raise DomainError("bessel_i needs m >= 0")
    ctrl = control or _DEFAULT
    half = z / 2.0

    def gen() -> Iterator[float]:
        term = half**m / math.factorial(m)
        for k in count():
            yield term
            term *= half * half / ((k + 1.0) * (m + k + 1.0))

    value, _ = sum_series(gen(), ctrl)
    return value


def bessel_j0(x: float, control: SumControl | None = None) -> float:
    """J_0(x) by its Taylor series (adequate for moderate |x|)."""
    ctrl = control or SumControl(max_terms=600, rel_tol=1e-15)
    q = -(x * x) / 4.0

    def gen() -> Iterator[float]:
        term = 1.0
        for k in count():
            yield term
            term *= q / ((k + 1.0) * (k + 1.0))

    value, _ = sum_series(gen(), ctrl)
    return value


def _signed(args: Sequence[float]) -> list[float]:
    # Slot p (1-based) picks up (-1)^p.
    return [(-1) ** p * a for p, a in enumerate(args, start=1)]


def h_tricomi(
    m: int,
    s: float,
    args: Sequence[float],
    control: SumControl | None = None,
) -> float:
    """Hermite-based Tricomi: sum_r H_r^(m)(-a1, a2, ..., (-1)^m am) / (r! Gamma(1+s+r)).

    For m = 2 this is the two-variable hybrid; general m shows up in the
    order-m lacunary closed forms.
    """
    if m < 1:
        raise DomainError("h_tricomi needs m >= 1")
    if len(args) != m:
        raise DomainError(f"expected {m} slot arguments, got {len(args)}")
    ctrl = control or _DEFAULT
    xs = _signed([float(a) for a in args])
    coeffs = hermite_coeff_sequence(m, ctrl.max_terms, xs)

    def gen() -> Iterator[float]:
        for r in count():
            yield coeffs[r] * rgamma(1.0 + s + r)

    value, _ = sum_series(gen(), ctrl)
    return value


def h_wright(
    beta: float,
    alpha: float,
    x: float,
    y: float,
    control: SumControl | None = None,
) -> float:
    """Hermite-based Wright: sum_r H_r^(2)(x, y) / (r! Gamma(beta r + alpha)).

    The first superscript multiplies r inside the Gamma, exactly as in the
    scalar Bessel-Wright function; no slot sign flips here.
    """
    if beta <= 0:
        raise DomainError("h_wright needs beta > 0")
    ctrl = control or _DEFAULT
    coeffs = hermite_coeff_sequence(2, ctrl.max_terms, [float(x), float(y)])

    def gen() -> Iterator[float]:
        for r in count():
            yield coeffs[r] * rgamma(beta * r + alpha)

    value, _ = sum_series(gen(), ctrl)
    return value


def h_bessel_j(n: int, x: float, y: float, control: SumControl | None = None) -> float:
    """Hermite-based Bessel: sum_r (-1)^r H_(n+2r)^(2)(x, y) / (2^(n+2r) r! (n+r)!)."""
    if n < 0:
        raise DomainError("h_bessel_j needs n >= 0")
    ctrl = control or _DEFAULT
    coeffs = hermite_coeff_sequence(2, n + 2 * ctrl.max_terms, [float(x), float(y)])

    def gen() -> Iterator[float]:
        # factor_r = (n+2r)! / (2^(n+2r) r! (n+r)!), tracked by its ratio.
        factor = 0.5**n
        for r in count():
            yield (-1) ** r * coeffs[n + 2 * r] * factor
            factor *= (n + 2 * r + 1.0) * (n + 2 * r + 2.0) / (4.0 * (r + 1.0) * (n + r + 1.0))

    value, _ = sum_series(gen(), ctrl)
    return value


def h_tricomi_bilateral(
    x: float,
    y: float,
    tau: float,
    control: SumControl | None = None,
) -> float:
    """Two-index hybrid sum_{r,s,k} x^r y^s tau^k / (r! s! k! (r+k)! (s+k)!).

    Summed by total-order shells r+s+k = N so the stop rule sees monotone
    shell totals rather than an arbitrary interleaving.
    """
    ctrl = control or _DEFAULT
    fact = math.factorial

    def shell(total: int) -> float:
        acc = 0.0
        for k in range(total + 1):
            tk = tau**k / fact(k)
            for r in range(total - k + 1):
                s = total - k - r
                acc += (
                    tk
                    * x**r
                    / fact(r)
                    * y**s
                    / fact(s)
                    / fact(r + k)
                    / fact(s + k)
                )
        return acc

    value, _ = sum_shells(shell, ctrl)
    return value
