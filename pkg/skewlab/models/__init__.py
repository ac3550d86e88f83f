"""Domain value objects for skewlab."""

from skewlab.models.density import DensityOperator
from skewlab.models.operator import HSOperator
from skewlab.models.params import FamilyParam, SkewParams
from skewlab.models.results import (
    CheckResult,
    PathComparison,
    QuantityResult,
    SweepRow,
)

__all__ = [
    "CheckResult",
    "DensityOperator",
    "FamilyParam",
    "HSOperator",
    "PathComparison",
    "QuantityResult",
    "SkewParams",
    "SweepRow",
]
