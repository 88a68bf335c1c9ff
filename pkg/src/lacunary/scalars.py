"""Scalar primitives: reciprocal Gamma in exact and floating modes, Pochhammer symbols.

The reciprocal Gamma function is the basic vacuum expectation of the umbral
symbol: c^n applied to the vacuum evaluates to rgamma(n + 1).  It is entire,
which is why it (and not Gamma itself) is the primitive here: negative-integer
arguments are exact zeros instead of poles.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Union

from .errors import DomainError, ImaginaryResidue, NumericError

Exact = Fraction
Scalar = Union[int, Fraction, float, complex]

#: |imag| <= IMAG_SLACK * (1 + |real|) is treated as roundoff residue.
IMAG_SLACK = 1e-12

# Lanczos coefficients, g = 7, n = 9 (double-precision grade).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def is_exact(value: Scalar) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def ensure_finite(value: Scalar, where: str = "computation") -> Scalar:
    """Reject NaN/inf floats so they never propagate silently."""
    if isinstance(value, complex):
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NumericError(f"non-finite value in {where}: {value!r}")
    elif isinstance(value, float) and not math.isfinite(value):
        raise NumericError(f"non-finite value in {where}: {value!r}")
    return value


def as_real(value: Scalar, where: str = "result", slack: float = IMAG_SLACK) -> float:
    """Collapse a numerically-real scalar to float.

    Raises ImaginaryResidue when the imaginary part exceeds
    slack * (1 + |real part|).
    """
    if isinstance(value, complex):
        bound = slack * (1.0 + abs(value.real))
        if abs(value.imag) > bound:
            raise ImaginaryResidue(
                f"{where}: imaginary residue {value.imag!r} exceeds {bound!r}"
            )
        return ensure_finite(value.real, where)  # type: ignore[return-value]
    if isinstance(value, Fraction):
        return float(value)
    return float(ensure_finite(value, where))  # type: ignore[arg-type]


def rgamma_exact(n: int) -> Fraction:
    """Exact 1/Gamma(n) for integer n: Fraction(1, (n-1)!) or 0 at the poles."""
    if n <= 0:
        return Fraction(0)
    return Fraction(1, math.factorial(n - 1))


def _rgamma_positive_real(x: float) -> float:
    # x >= 0.5, away from poles; lgamma avoids overflow past Gamma's range.
    if x > 170.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def _rgamma_complex(z: complex) -> complex:
    if z.real < 0.5:
        # Reflection: 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi.
        return cmath.sin(cmath.pi * z) * _gamma_complex(1.0 - z) / cmath.pi
    return 1.0 / _gamma_complex(z)


def _gamma_complex(z: complex) -> complex:
    # Lanczos for Re z >= 0.5.
    z = z - 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


def rgamma(z: Scalar) -> float | complex:
    """Floating 1/Gamma(z); exact zeros at non-positive integer z.

    Real arguments use the libm Gamma (relative error well under 1e-13 for
    |z| <= 170); complex arguments fall back to a Lanczos evaluation.
    """
    if isinstance(z, complex):
        if abs(z.imag) <= IMAG_SLACK * (1.0 + abs(z.real)):
            return rgamma(z.real)
        ensure_finite(z, "rgamma argument")
        return ensure_finite(_rgamma_complex(z), "rgamma")
    if isinstance(z, Fraction):
        if z.denominator == 1:
            z = int(z)
        else:
            z = float(z)
    if isinstance(z, int) and not isinstance(z, bool):
        if z <= 0:
            return 0.0
        if z <= 171:
            return 1.0 / math.gamma(float(z))
        return math.exp(-math.lgamma(float(z)))
    if not math.isfinite(z):
        raise NumericError(f"non-finite rgamma argument: {z!r}")
    if z <= 0.0 and z == math.floor(z):
        return 0.0
    if z >= 0.5:
        return _rgamma_positive_real(z)
    # Reflection keeps the negative real axis accurate between poles.
    n = math.floor(z)
    frac = z - n
    sin_term = math.sin(math.pi * frac) * (1.0 if n % 2 == 0 else -1.0)
    # 1/Gamma(z) = sin(pi z)/pi * Gamma(1 - z)
    one_minus = 1.0 - z
    if one_minus > 170.0:
        magnitude = math.exp(math.lgamma(one_minus) + math.log(abs(sin_term) / math.pi))
        return math.copysign(magnitude, sin_term)
    return sin_term / math.pi * math.gamma(one_minus)


def pochhammer(a: Scalar, n: int) -> Scalar:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.

    Exact for int/Fraction a, floating otherwise.
    """
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    out: Scalar = Fraction(1) if is_exact(a) else 1.0
    for k in range(n):
        out = out * (a + k)
    if isinstance(out, Fraction) and out.denominator == 1 and isinstance(a, int):
        return int(out)
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
