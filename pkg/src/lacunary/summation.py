"""Controlled summation of numeric series.

The stop rule is sign-agnostic: a run of `consecutive_small` terms each
satisfying |term| <= rel_tol * |partial sum| ends the sum, so alternating
series with interior zero terms (odd/even lacunary patterns) terminate only
once they are genuinely done.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import NonConvergence, NumericError


@dataclass(frozen=True)
class SumControl:
    max_terms: int = 400
    rel_tol: float = 1e-14
    consecutive_small: int = 3

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError("rel_tol must lie in (0, 1)")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be positive")


def _term_magnitude(term: complex | float) -> float:
    mag = abs(term)
    if not math.isfinite(mag):
        raise NumericError(f"non-finite series term: {term!r}")
    return mag


def sum_series(
    terms: Iterable[complex | float],
    control: SumControl | None = None,
) -> tuple[complex | float, float]:
    """Sum `terms` under `control`; return (value, tail_estimate).

    The tail estimate is the magnitude of the last consumed term.  Raises
    NonConvergence when max_terms is exhausted while the stop rule is unmet.
    """
    ctrl = control or SumControl()
    total: complex | float = 0.0
    last_mag = 0.0
    small_run = 0
    consumed = 0
    for term in terms:
        if consumed >= ctrl.max_terms:
            break
        consumed += 1
        last_mag = _term_magnitude(term)
        total = total + term
        if last_mag <= ctrl.rel_tol * abs(total):
            small_run += 1
            if small_run >= ctrl.consecutive_small:
                return total, last_mag
        else:
            small_run = 0
    else:
        # Generator exhausted before the budget: a finite sum is converged.
        return total, 0.0
    if last_mag > ctrl.rel_tol * abs(total):
        raise NonConvergence(
            f"no convergence after {ctrl.max_terms} terms "
            f"(last |term| = {last_mag:.3e}, |sum| = {abs(total):.3e})"
        )
    return total, last_mag


def sum_shells(
    shell_total: Callable[[int], complex | float],
    control: SumControl | None = None,
) -> tuple[complex | float, float]:
    """Sum shell_total(0) + shell_total(1) + ... under the same stop rule.

    Used for multi-index series grouped by total index order.
    """
    ctrl = control or SumControl()

    def shells() -> Iterator[complex | float]:
        n = 0
        while True:
            yield shell_total(n)
            n += 1

    return sum_series(shells(), ctrl)
