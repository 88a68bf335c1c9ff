"""Bundled exact suites for the operator and pseudo-Gaussian families.

These group the checks that belong to one operator story rather than one
generating function: the lowering derivative with its exponential flow, and
the pseudo-Gaussian with its dilation, transform, and arctangent relatives.
Each suite condenses to a single report so a harness can gate on it.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import QuadratureFailure
from . import exact, pointwise
from .report import VerificationReport

QUAD_TOL = 1e-8
MAX_NOTED_FAILURES = 5

# 13 rational nodes: enough to pin the y-dependence, whose degree stays
# below 11 for every polynomial the lowering check touches.
_Y_NODES = tuple(Fraction(k, 3) for k in range(-6, 7))


def _tally(stream, count: int, bad: list) -> int:
    for label, lhs, rhs in stream:
        count += 1
        if lhs != rhs:
            bad.append(label)
    return count


def laguerre_derivative_suite() -> VerificationReport:
    """Lowering action, its exponential on e^{-x}, and the fixed kernel.

    All three statements are coefficient identities, so the suite passes
    only on literal rational equality everywhere.
    """
    count = 0
    bad: list = []
    count = _tally(exact.eq3_12_lowering(10, _Y_NODES), count, bad)
    count = _tally(exact.eq3_14(12), count, bad)
    count = _tally(exact.eq3_15(20), count, bad)
    notes = []
    if bad:
        notes.append(
            f"{len(bad)} mismatches (first: {', '.join(bad[:MAX_NOTED_FAILURES])})"
        )
    return VerificationReport(
        case_id="EQ3.12-3.15",
        paper_ref="Eqs. 3.12-3.15",
        mode="exact",
        grid_size=count,
        truncation=20,
        max_abs_err=0.0 if not bad else float("nan"),
        max_rel_err=0.0 if not bad else float("nan"),
        passed=not bad,
        notes=notes,
    )


def pseudo_gaussian_suite() -> VerificationReport:
    """Pseudo-Gaussian reductions plus the transform quadrature check."""
    count = 0
    bad: list = []
    count = _tally(exact.eq3_17(20), count, bad)
    count = _tally(exact.eq3_18_exact(20), count, bad)
    count = _tally(exact.eq3_20(20), count, bad)
    count = _tally(exact.eq3_21(20), count, bad)
    max_abs = 0.0
    max_rel = 0.0
    notes: list = []
    try:
        for o in pointwise.borel_points(QUAD_TOL):
            count += 1
            err = abs(o.lhs - o.rhs)
            rel = err / max(1.0, abs(o.lhs), abs(o.rhs))
            max_abs = max(max_abs, err)
            max_rel = max(max_rel, rel)
            if rel > QUAD_TOL:
                bad.append(f"{o.label} rel={rel:.3e}")
    except QuadratureFailure as exc:
        bad.append(str(exc))
    if bad:
        notes.append(
            f"{len(bad)} failures (first: {'; '.join(bad[:MAX_NOTED_FAILURES])})"
        )
    return VerificationReport(
        case_id="EQ3.17-3.21",
        paper_ref="Eqs. 3.17-3.21",
        mode="exact+quadrature",
        grid_size=count,
        truncation=20,
        max_abs_err=max_abs,
        max_rel_err=max_rel,
        passed=not bad,
        notes=notes,
    )
