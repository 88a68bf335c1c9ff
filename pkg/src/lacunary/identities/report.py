"""Result records produced by the verification engines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of checking one identity in one mode.

    max_abs_err and max_rel_err are exact zeros for coefficient checks that
    passed; pointwise checks store the worst errors seen over the grid.
    """

    case_id: str
    paper_ref: str
    mode: str
    grid_size: int
    truncation: int
    max_abs_err: float
    max_rel_err: float
    passed: bool
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        """Field order here is the serialization order."""
        return {
            "id": self.case_id,
            "paper_ref": self.paper_ref,
            "mode": self.mode,
            "grid_size": self.grid_size,
            "truncation": self.truncation,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "pass": self.passed,
            "notes": list(self.notes),
        }

    def summary_line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (
            f"{self.case_id:8s} {self.mode:10s} {status}  "
            f"grid={self.grid_size} N={self.truncation} "
            f"abs={self.max_abs_err:.3e} rel={self.max_rel_err:.3e}"
        )


def worst(reports: list[VerificationReport]) -> tuple[float, float]:
    """(max abs, max rel) across a batch."""
    if not reports:
        return 0.0, 0.0
    return (
        max(r.max_abs_err for r in reports),
        max(r.max_rel_err for r in reports),
    )
