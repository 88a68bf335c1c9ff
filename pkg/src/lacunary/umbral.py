"""Umbral symbol algebra with vacuum reduction.

A series is a finite sum of terms  coeff * c1^e1 * c2^e2 * x^d  where c1, c2
are commuting umbral symbols and x is an ordinary indeterminate tracked only
through its degree d.  Exponents add under multiplication; the vacuum rule is

    c^a |0>  ->  1 / Gamma(1 + a)

applied independently per symbol, so negative-integer exponents annihilate a
term exactly.  Exact mode keeps Fraction coefficients and demands integer
exponents at reduction time; float mode reduces through the floating rgamma.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    DomainError,
    ExactnessViolation,
    MissingDegreeMetadata,
    ModeMismatch,
    TermBudgetExceeded,
)
from .scalars import ensure_finite, is_exact, rgamma, rgamma_exact

Key = tuple[Fraction, Fraction, int]
Coeff = Union[Fraction, float, complex]

#: Hard cap on stored terms; expansions beyond this raise TermBudgetExceeded.
DEFAULT_TERM_CAP = 200_000


def _as_exponent(e) -> Fraction:
    if isinstance(e, Fraction):
        return e
    if isinstance(e, int):
        return Fraction(e)
    raise TypeError("umbral exponents must be int or Fraction")


class UmbralSeries:
    """Immutable finite umbral sum; construct via the module helpers."""

    __slots__ = ("terms", "mode", "term_cap")

    def __init__(
        self,
        terms: Mapping[Key, Coeff],
        mode: str,
        term_cap: int = DEFAULT_TERM_CAP,
    ):
        if mode not in ("exact", "float"):
            raise ValueError("mode must be 'exact' or 'float'")
        if len(terms) > term_cap:
            raise TermBudgetExceeded(
                f"{len(terms)} terms exceed the cap of {term_cap}"
            )
        clean: dict[Key, Coeff] = {}
        for key, coeff in terms.items():
            if mode == "exact":
                if not is_exact(coeff):
                    raise ModeMismatch("exact series requires Fraction coefficients")
                coeff = Fraction(coeff)
            else:
                ensure_finite(coeff, "umbral coefficient")
            if coeff == 0:
                continue
            clean[key] = coeff
        self.terms: dict[Key, Coeff] = clean
        self.mode = mode
        self.term_cap = term_cap

    # -- constructors ------------------------------------------------------

    @staticmethod
    def scalar(value: Coeff, mode: str | None = None) -> "UmbralSeries":
        mode = mode or ("exact" if is_exact(value) else "float")
        v: Coeff = Fraction(value) if mode == "exact" else value
        return UmbralSeries({(Fraction(0), Fraction(0), 0): v}, mode)

    @staticmethod
    def symbol(exponent, which: int = 1, mode: str = "exact") -> "UmbralSeries":
        e = _as_exponent(exponent)
        if which == 1:
            key = (e, Fraction(0), 0)
        elif which == 2:
            key = (Fraction(0), e, 0)
        else:
            raise DomainError("symbol index must be 1 or 2")
        one: Coeff = Fraction(1) if mode == "exact" else 1.0
        return UmbralSeries({key: one}, mode)

    @staticmethod
    def monomial(
        coeff: Coeff,
        exponent,
        x_degree: int = 0,
        which: int = 1,
        mode: str | None = None,
    ) -> "UmbralSeries":
        """coeff * c^exponent * x^x_degree with degree metadata."""
        if x_degree < 0:
            raise DomainError("x_degree must be >= 0")
        e = _as_exponent(exponent)
        key = (
            (e, Fraction(0), x_degree) if which == 1 else (Fraction(0), e, x_degree)
        )
        mode = mode or ("exact" if is_exact(coeff) else "float")
        v: Coeff = Fraction(coeff) if mode == "exact" else coeff
        return UmbralSeries({key: v}, mode)

    # -- algebra -----------------------------------------------------------

    def _check_mode(self, other: "UmbralSeries") -> None:
        if self.mode != other.mode:
            raise ModeMismatch(f"cannot mix {self.mode} and {other.mode} series")

    def __add__(self, other: "UmbralSeries") -> "UmbralSeries":
        self._check_mode(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, _zero(self.mode)) + coeff
        return UmbralSeries(out, self.mode, self.term_cap)

    def __sub__(self, other: "UmbralSeries") -> "UmbralSeries":
        return self + (-other)

    def __neg__(self) -> "UmbralSeries":
        return UmbralSeries(
            {k: -c for k, c in self.terms.items()}, self.mode, self.term_cap
        )

    def scale(self, factor: Coeff) -> "UmbralSeries":
        if self.mode == "exact" and not is_exact(factor):
            raise ModeMismatch("cannot scale an exact series by a float")
        return UmbralSeries(
            {k: c * factor for k, c in self.terms.items()}, self.mode, self.term_cap
        )

    def __mul__(self, other: "UmbralSeries") -> "UmbralSeries":
        self._check_mode(other)
        out: dict[Key, Coeff] = {}
        for (a1, a2, da), ca in self.terms.items():
            for (b1, b2, db), cb in other.terms.items():
                key = (a1 + b1, a2 + b2, da + db)
                prod = ca * cb
                if key in out:
                    out[key] += prod
                else:
                    out[key] = prod
            if len(out) > self.term_cap:
                raise TermBudgetExceeded(
                    f"product exceeded the {self.term_cap}-term cap"
                )
        return UmbralSeries(out, self.mode, self.term_cap)

    def pow(self, exponent: int) -> "UmbralSeries":
        if exponent < 0:
            raise DomainError("umbral pow needs an integer exponent >= 0")
        out = UmbralSeries.scalar(
            Fraction(1) if self.mode == "exact" else 1.0, self.mode
        )
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def to_float(self) -> "UmbralSeries":
        if self.mode == "float":
            return self
        return UmbralSeries(
            {k: float(c) for k, c in self.terms.items()}, "float", self.term_cap
        )

    # -- reduction ---------------------------------------------------------

    def _weight(self, e1: Fraction, e2: Fraction) -> Coeff:
        if self.mode == "exact":
            if e1.denominator != 1 or e2.denominator != 1:
                raise ExactnessViolation(
                    f"exact reduction needs integer exponents, got ({e1}, {e2})"
                )
            return rgamma_exact(int(e1) + 1) * rgamma_exact(int(e2) + 1)
        return rgamma(e1 + 1) * rgamma(e2 + 1)

    def reduce(self) -> Coeff:
        """Vacuum-reduce a series with no x-dependence to a scalar."""
        total = _zero(self.mode)
        for (e1, e2, d), coeff in self.terms.items():
            if d != 0:
                raise DomainError(
                    "series carries x-degree terms; use reduce_poly()"
                )
            total += coeff * self._weight(e1, e2)
        return total

    def reduce_poly(self) -> dict[int, Coeff]:
        """Vacuum-reduce, keeping x-degrees: returns {degree: coefficient}."""
        out: dict[int, Coeff] = {}
        for (e1, e2, d), coeff in self.terms.items():
            w = coeff * self._weight(e1, e2)
            if d in out:
                out[d] += w
            else:
                out[d] = w
        return {d: c for d, c in sorted(out.items()) if c != 0}

    def dilate(self, sigma) -> "UmbralSeries":
        """Apply c^(sigma * x d/dx): shift each c1-exponent by sigma * x-degree.

        Meaningful only for series whose x-dependence is carried as degree
        metadata; a series with no metadata at all (built purely from scalars
        and bare symbols that were never tagged) is rejected.
        """
        s = _as_exponent(sigma)
        if self.terms and all(d == 0 for (_, _, d) in self.terms):
            raise MissingDegreeMetadata(
                "dilation needs x-degree metadata on at least one term"
            )
        out: dict[Key, Coeff] = {}
        for (e1, e2, d), coeff in self.terms.items():
            key = (e1 + s * d, e2, d)
            out[key] = out.get(key, _zero(self.mode)) + coeff
        return UmbralSeries(out, self.mode, self.term_cap)


def _zero(mode: str) -> Coeff:
    return Fraction(0) if mode == "exact" else 0.0


def umb_exp(
    argument: UmbralSeries,
    order: int,
    term_cap: int = DEFAULT_TERM_CAP,
) -> UmbralSeries:
    """sum_{k<=order} argument^k / k!; argument must have no pure-scalar term."""
    if order < 0:
        raise DomainError("order must be >= 0")
    if (Fraction(0), Fraction(0), 0) in argument.terms:
        raise DomainError("umb_exp needs the pure-scalar term split off first")
    one: Coeff = Fraction(1) if argument.mode == "exact" else 1.0
    acc = UmbralSeries.scalar(one, argument.mode)
    power = acc
    kfact = 1
    for k in range(1, order + 1):
        power = power * argument
        kfact *= k
        inv = Fraction(1, kfact)
        acc = acc + power.scale(inv if argument.mode == "exact" else float(inv))
        if len(acc.terms) > term_cap:
            raise TermBudgetExceeded("umb_exp exceeded its term cap")
    return acc
