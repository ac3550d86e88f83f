from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

from skewlab.exc import InvalidParams, ParamOutOfRange
from skewlab.types import Family

if TYPE_CHECKING:
    from .density import DensityOperator

#: Slack allowed on the simplex boundary, so that e.g. (0.55, 0.45) is accepted
SIMPLEX_EPS: Final[float] = 1e-12

#: Largest separable parameter value of each state family
SEPARABLE_UP_TO: Final[dict[Family, float]] = {
    Family.WERNER: 1 / 3,
    Family.ISOTROPIC: 1 / 2,
}


@dataclass(frozen=True)
class SkewParams:
    """
    The exponent pair ``(alpha, beta)``.

    Admissible pairs satisfy ``alpha, beta >= 0`` and ``alpha + beta <= 1``.
    """

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise InvalidParams(self.alpha, self.beta)
        if (
            self.alpha < -SIMPLEX_EPS
            or self.beta < -SIMPLEX_EPS
            or self.alpha + self.beta > 1 + SIMPLEX_EPS
        ):
            raise InvalidParams(self.alpha, self.beta)
        # rho ** t needs t in [0, 1] exactly
        object.__setattr__(self, "alpha", min(1.0, max(0.0, float(self.alpha))))
        object.__setattr__(self, "beta", min(1.0, max(0.0, float(self.beta))))

    @property
    def total(self) -> float:
        """``alpha + beta``."""
        return self.alpha + self.beta

    @property
    def context(self) -> float:
        """The exponent ``1 - alpha - beta`` of the trailing factor of rho."""
        return max(0.0, 1.0 - self.alpha - self.beta)

    def swapped(self) -> SkewParams:
        """Return ``(beta, alpha)``."""
        return SkewParams(self.beta, self.alpha)


@dataclass(frozen=True)
class FamilyParam:
    """A point of a one-parameter state family."""

    family: Family
    value: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if not (math.isfinite(self.value) and 0.0 <= self.value <= 1.0):
            raise ParamOutOfRange(str(self.family), self.value)

    @property
    def is_separable(self) -> bool:
        """
        Whether the state is separable.

        Werner states are separable for ``p <= 1/3``, isotropic states for
        ``F <= 1/2``.
        """
        return self.value <= SEPARABLE_UP_TO[self.family]

    def state(self) -> DensityOperator:
        """
        Build the two-qubit density operator at this point.

        Returns:
            The validated state

        """
        from skewlab.factory import family_state  # noqa: PLC0415

        return family_state(self.family, self.value)
