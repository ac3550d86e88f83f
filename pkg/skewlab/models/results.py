from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import TYPE_CHECKING, Any, ClassVar

from skewlab.exc import NumericalInconsistency
from skewlab.utils import format_float

if TYPE_CHECKING:
    from skewlab.settings import Tolerances
    from skewlab.types import ComputationPath


@dataclass(frozen=True)
class QuantityResult:
    """The value of one quantity, as computed along one path."""

    # Quantity name, e.g. "i" or "corr"
    name: str
    # The raw complex value; the imaginary part is kept for diagnostics
    value: complex
    # How the value was computed
    path: ComputationPath
    # |Im(value)| for quantities that are real by construction, else 0
    imag_residual: float
    # The reported scalar: Re(value), clamped at 0 for nonnegative quantities
    real: float


@dataclass(frozen=True)
class PathComparison:
    """Both evaluations of one quantity and whether they agree."""

    name: str
    trace: QuantityResult
    spectral: QuantityResult
    # |trace - spectral| on the raw complex values
    difference: float
    agrees: bool


@dataclass(frozen=True)
class CheckResult:
    """
    One evaluated inequality.

    ``lhs`` is always the side that must be the larger one, so the relation
    holds when ``slack = lhs - rhs >= -tol``.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    tol: float
    inputs_digest: str

    @classmethod
    def evaluate(
        cls,
        name: str,
        lhs: float,
        rhs: float,
        tolerances: Tolerances,
        inputs_digest: str,
    ) -> CheckResult:
        """
        Compare ``lhs`` against ``rhs`` and record the verdict.

        Args:
            name: Relation identifier
            lhs: The side that must be the larger one
            rhs: The other side
            tolerances: Slack tolerances
            inputs_digest: Fingerprint of the evaluated inputs

        Raises:
            NumericalInconsistency: either side is not finite

        Returns:
            The check result

        """
        lhs = float(lhs)
        rhs = float(rhs)
        if not (math.isfinite(lhs) and math.isfinite(rhs)):
            raise NumericalInconsistency(name, lhs, rhs, "non-finite side")
        slack = lhs - rhs
        tol = tolerances.slack_tolerance(lhs, rhs)
        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            slack=slack,
            holds=slack >= -tol,
            tol=tol,
            inputs_digest=inputs_digest,
        )

    def to_json(self) -> dict[str, Any]:
        """Return a JSON-serializable dictionary of this result."""
        return asdict(self)


@dataclass(frozen=True)
class SweepRow:
    """One evaluated point of a state-family sweep or grid."""

    #: CSV header, in column order
    HEADER: ClassVar[tuple[str, ...]] = (
        "family",
        "param",
        "alpha",
        "beta",
        "lhs14",
        "rhs14",
        "gap14",
        "lhs17",
        "rhs17",
        "gap17",
    )

    family: str
    param: float
    alpha: float
    beta: float
    # None outside the admissible simplex or outside a relation's domain
    lhs14: float | None = None
    rhs14: float | None = None
    gap14: float | None = None
    lhs17: float | None = None
    rhs17: float | None = None
    gap17: float | None = None

    def to_csv_row(self) -> list[str]:
        """
        Format this row for :class:`csv.writer`.

        Missing values (outside the simplex or a theorem's domain) become
        empty fields.

        Returns:
            The formatted fields, in :attr:`HEADER` order

        """
        return [
            self.family,
            format_float(self.param),
            *(
                format_float(getattr(self, column))
                for column in self.HEADER[2:]
            ),
        ]
