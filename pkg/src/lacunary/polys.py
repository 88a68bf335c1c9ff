"""Polynomial families: two-variable Laguerre, Gamma-weighted variants,
higher-order Hermite, and the lacunary decompositions that tie them together.

All closed forms are written over the exact numeric tower (Fraction binomials
times powers of the inputs), so rational inputs give exact values and float
inputs flow through unchanged.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .scalars import Scalar, as_real, is_exact, rgamma, rgamma_exact


def _gamma_weight(arg: Scalar):
    """rgamma dispatch: exact for integral arguments, floating otherwise."""
    if isinstance(arg, Fraction) and arg.denominator == 1:
        return rgamma_exact(int(arg))
    if isinstance(arg, int):
        return rgamma_exact(arg)
    return rgamma(arg)


def laguerre(n: int, x: Scalar, y: Scalar = 1):
    """Two-variable Laguerre L_n(x, y) = n! sum (-x)^r y^(n-r) / ((r!)^2 (n-r)!)."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    total = 0
    for r in range(n + 1):
        w = Fraction(math.factorial(n), math.factorial(r) ** 2 * math.factorial(n - r))
        total = total + w * (-x) ** r * y ** (n - r)
    return total


def lambda_poly(n: int, alpha: Scalar, beta: Scalar, x: Scalar, y: Scalar = 1):
    """Gamma-weighted companion polynomial

        n! sum_r (-x)^r y^(n-r) / (r! (n-r)! Gamma(beta r + 1 + alpha)).

    Equals the vacuum reduction of c^alpha (y - c^beta x)^n.  Exact when
    alpha and beta are integers and x, y are rational.
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    total = 0
    for r in range(n + 1):
        w = Fraction(math.factorial(n), math.factorial(r) * math.factorial(n - r))
        g = _gamma_weight(beta * r + 1 + alpha)
        total = total + w * g * (-x) ** r * y ** (n - r)
    return total


def assoc_laguerre(n: int, alpha: Scalar, x: Scalar, y: Scalar = 1):
    """Associated Laguerre L_n^(alpha)(x, y) valid for any rational offset.

    The Gamma prefactor is distributed termwise as the finite product
    Gamma(1+alpha+n)/Gamma(1+alpha+r) = prod_{j=r+1..n} (alpha + j), which
    stays exact (and finite) for negative integer offsets such as alpha - n.
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    total = 0
    prod = 1  # prod_{j=r+1..n}(alpha+j), built from r=n downward
    terms = []
    for r in range(n, -1, -1):
        w = Fraction(1, math.factorial(r) * math.factorial(n - r))
        terms.append(w * prod * (-x) ** r * y ** (n - r))
        prod = prod * (alpha + r)
    for t in reversed(terms):
        total = total + t
    return total


def hermite(m: int, n: int, xs: Sequence[Scalar]):
    """Higher-order Hermite H_n^(m)(x_1..x_m) = n! [t^n] exp(sum_s x_s t^s).

    Evaluated by the nested-sum recursion over the top variable,
    grounded at H_n^(1)(x_1) = x_1^n.
    """
    if m < 1:
        raise DomainError("order m must be >= 1")
    if n < 0:
        raise DomainError("degree must be >= 0")
    if len(xs) != m:
        raise DomainError(f"expected {m} variables, got {len(xs)}")
    memo: dict[tuple[int, int], Scalar] = {}

    def h(mm: int, nn: int):
        if mm == 1:
            return xs[0] ** nn
        key = (mm, nn)
        if key in memo:
            return memo[key]
        total = 0
        for r in range(nn // mm + 1):
            w = Fraction(
                math.factorial(nn),
                math.factorial(nn - mm * r) * math.factorial(r),
            )
            total = total + w * xs[mm - 1] ** r * h(mm - 1, nn - mm * r)
        memo[key] = total
        return total

    return h(m, n)


def hermite_coeff_sequence(m: int, nmax: int, xs: Sequence[Scalar]) -> list:
    """[t^n] exp(sum_s x_s t^s) for n = 0..nmax, i.e. H_n^(m)/n!.

    Uses the derivative recurrence (n+1) c_{n+1} = sum_s s x_s c_{n+1-s};
    numerically tamer than the factorially-growing H_n themselves.
    """
    if m < 1:
        raise DomainError("order m must be >= 1")
    if len(xs) != m:
        raise DomainError(f"expected {m} variables, got {len(xs)}")
    exact = all(is_exact(v) for v in xs)
    coeffs: list = [Fraction(1) if exact else 1.0]
    for n in range(nmax):
        acc = 0
        for s in range(1, min(m, n + 1) + 1):
            acc = acc + s * xs[s - 1] * coeffs[n + 1 - s]
        nxt = Fraction(acc, n + 1) if exact and isinstance(acc, (int, Fraction)) else acc / (n + 1)
        coeffs.append(nxt)
    return coeffs


def laguerre_sequence(nmax: int, x: Scalar, y: Scalar = 1) -> list:
    """[L_0, ..., L_nmax](x, y) by the three-term recurrence.

    (n+1) L_{n+1} = ((2n+1) y - x) L_n - n y^2 L_{n-1}.  Exact for exact
    inputs; for floats this is far cheaper than the explicit sums once the
    degree runs into the hundreds (lacunary series evaluate L_{mn+l}).
    """
    if nmax < 0:
        raise DomainError("degree must be >= 0")
    exact = is_exact(x) and is_exact(y)
    out = [Fraction(1) if exact else 1.0]
    if nmax >= 1:
        out.append(y - x if exact else float(y) - float(x))
    y2 = y * y
    for n in range(1, nmax):
        nxt = (((2 * n + 1) * y - x) * out[n] - n * y2 * out[n - 1]) / (n + 1)
        out.append(nxt if exact else float(nxt))
    return out


def assoc_laguerre_sequence(nmax: int, alpha: Scalar, x: Scalar, y: Scalar = 1) -> list:
    """[L_0^(a), ..., L_nmax^(a)](x, y), fixed offset, by the recurrence

    (n+1) L_{n+1}^(a) = ((2n+1+a) y - x) L_n^(a) - (n+a) y^2 L_{n-1}^(a).
    """
    if nmax < 0:
        raise DomainError("degree must be >= 0")
    exact = is_exact(x) and is_exact(y) and is_exact(alpha)
    out = [Fraction(1) if exact else 1.0]
    if nmax >= 1:
        first = (1 + alpha) * y - x
        out.append(first if exact else float(first))
    y2 = y * y
    for n in range(1, nmax):
        nxt = (((2 * n + 1 + alpha) * y - x) * out[n] - (n + alpha) * y2 * out[n - 1]) / (
            n + 1
        )
        out.append(nxt if exact else float(nxt))
    return out


def hermite_h(n: int, u: complex) -> complex:
    """Classical Hermite H_n(u) by the three-term recurrence (complex-safe)."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    prev, cur = 1.0 + 0.0j, 2.0 * u
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, 2.0 * u * cur - 2.0 * k * prev
    return cur


def hermite_h_sequence(nmax: int, u: complex) -> list[complex]:
    """[H_0(u), ..., H_nmax(u)] by the same recurrence."""
    out = [1.0 + 0.0j]
    if nmax >= 1:
        out.append(2.0 * u + 0.0j)
    for k in range(1, nmax):
        out.append(2.0 * u * out[-1] - 2.0 * k * out[-2])
    return out


def hermite2_from_classical(n: int, x: float, y: float) -> float:
    """H_n^(2)(x, y) via the scaling identity (-i sqrt(y))^n H_n(i x / (2 sqrt(y))).

    Needs y != 0; the result is real for real inputs and is returned as float.
    """
    if y == 0:
        raise DomainError("scaling identity needs y != 0")
    sy = cmath.sqrt(complex(y))
    val = (-1j * sy) ** n * hermite_h(n, 1j * x / (2.0 * sy))
    return as_real(val, "hermite2_from_classical")


def lacunary_decomposition(kind: str, n: int, x: Scalar, y: Scalar = 1):
    """Reassemble L_{2n} or L_{3n} from degree-n Gamma-weighted pieces.

    kind "double":  sum_r C(n,r) (-x)^r y^(n-r) Lambda_n^(r)(x, y)
    kind "triple":  sum_{r,k} C(n,r) C(n,k) (-x)^(r+k) y^(2n-r-k) Lambda_n^(r+k)(x, y)
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    if kind == "double":
        total = 0
        for r in range(n + 1):
            total = total + (
                Fraction(math.comb(n, r))
                * (-x) ** r
                * y ** (n - r)
                * lambda_poly(n, r, 1, x, y)
            )
        return total
    if kind == "triple":
        total = 0
        for r in range(n + 1):
            for k in range(n + 1):
                total = total + (
                    Fraction(math.comb(n, r) * math.comb(n, k))
                    * (-x) ** (r + k)
                    * y ** (2 * n - r - k)
                    * lambda_poly(n, r + k, 1, x, y)
                )
        return total
    raise DomainError("kind must be 'double' or 'triple'")


def laguerre_xpoly(n: int, y: Scalar = 1) -> list:
    """Coefficients in x of L_n(x, y): [c_0, ..., c_n], exact for rational y."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    return [
        Fraction((-1) ** r * math.factorial(n), math.factorial(r) ** 2 * math.factorial(n - r))
        * y ** (n - r)
        for r in range(n + 1)
    ]


def assoc_laguerre_xpoly(n: int, alpha: Scalar) -> list:
    """Coefficients in x of L_n^(alpha)(x) with the termwise Gamma product."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    coeffs = []
    prods = [1] * (n + 1)  # prods[r] = prod_{j=r+1..n}(alpha+j)
    for r in range(n - 1, -1, -1):
        prods[r] = prods[r + 1] * (alpha + r + 1)
    for r in range(n + 1):
        w = Fraction((-1) ** r, math.factorial(r) * math.factorial(n - r))
        coeffs.append(w * prods[r])
    return coeffs
