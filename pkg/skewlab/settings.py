"""Service for reading numerical settings."""

import json
import logging
import os
from dataclasses import dataclass, fields
from functools import cache
from typing import Any, Final

from skewlab.mixins import ConfigFoldersMixin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tolerances:
    """Every numerical tolerance used by the kernels."""

    # max|rho - rho^dagger| accepted on input
    hermitian: float = 1e-10
    # eigenvalues in [-this, 0) are clamped to 0
    negative_eigenvalue: float = 1e-10
    # |Tr(rho) - 1| accepted on input
    trace: float = 1e-10
    # relative imaginary residual accepted for real quantities
    imag_residual: float = 1e-9
    # provably nonnegative quantities in [-this, 0) are clamped to 0
    negative_clamp: float = 1e-10
    # relative agreement between the trace and spectral paths
    path_relative: float = 1e-9
    # absolute floor for the path agreement
    path_absolute: float = 1e-12
    # relative agreement of the two U expressions
    u_consistency: float = 1e-8
    # agreement of the K decomposition identity
    k_decomposition: float = 1e-9
    # relative slack tolerance of inequality checks
    slack_relative: float = 1e-9
    # absolute floor of the slack tolerance
    slack_absolute: float = 1e-12

    def slack_tolerance(self, lhs: float, rhs: float) -> float:
        """
        Tolerance for ``lhs - rhs`` at the scale of the two sides.

        Args:
            lhs: Left-hand side
            rhs: Right-hand side

        Returns:
            ``max(slack_absolute, slack_relative * max(|lhs|, |rhs|))``

        """
        return max(
            self.slack_absolute, self.slack_relative * max(abs(lhs), abs(rhs))
        )

    def agree(self, first: complex, second: complex) -> bool:
        """
        Whether two evaluations of one quantity agree within path tolerances.

        Args:
            first: The first value
            second: The second value

        Returns:
            True if they agree

        """
        scale = max(abs(first), abs(second))
        return abs(first - second) <= max(
            self.path_absolute, self.path_relative * scale
        )


class SettingsService(ConfigFoldersMixin):
    """
    Service for reading numerical settings.

    This handles this JSON file:

    - settings.json: tolerances and the default thread count.

    """

    #: Environment variable overriding the thread count in the settings file
    THREADS_ENV: Final[str] = "SKEWLAB_THREADS"

    @property
    def settings(self) -> dict[str, Any]:
        """
        Read settings from the JSON file.

        Returns:
            Settings dictionary, or an empty one if the file is missing or
            unreadable

        """
        if not self.SETTINGS_PATH.exists():
            return {}
        try:
            with self.SETTINGS_PATH.open("r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(
                f"Could not read {self.SETTINGS_PATH!s}, using defaults: {e}"
            )
            return {}
        if not isinstance(data, dict):
            logger.warning(f"{self.SETTINGS_PATH!s} is not a JSON object, ignoring")
            return {}
        return data

    def tolerances(self) -> Tolerances:
        """
        Build :class:`Tolerances` from the settings file.

        Unknown keys are ignored; keys that are not numbers fall back to the
        compiled default with a warning.

        Returns:
            The configured tolerances

        """
        raw = self.settings.get("tolerances", {})
        if not isinstance(raw, dict):
            logger.warning("'tolerances' in settings is not an object, ignoring")
            return Tolerances()
        values: dict[str, float] = {}
        for field in fields(Tolerances):
            if field.name not in raw:
                continue
            value = raw[field.name]
            if isinstance(value, bool) or not isinstance(value, int | float):
                logger.warning(
                    f"Tolerance {field.name}={value!r} is not a number, ignoring"
                )
                continue
            values[field.name] = float(value)
        return Tolerances(**values)

    def threads(self, override: int | None = None) -> int:
        """
        Resolve the worker thread bound.

        Precedence is ``override`` (the ``--threads`` flag), then the
        ``SKEWLAB_THREADS`` environment variable, then the settings file, then 1.

        Keyword Args:
            override: Explicit thread count, if given

        Returns:
            A positive thread count

        """
        if override is not None and override >= 1:
            return override
        env = os.environ.get(self.THREADS_ENV)
        if env is not None:
            try:
                value = int(env)
            except ValueError:
                value = 0
            if value >= 1:
                return value
            logger.warning(f"Ignoring {self.THREADS_ENV}={env!r}: not a positive int")
        configured = self.settings.get("threads", 1)
        if isinstance(configured, int) and not isinstance(configured, bool):
            return max(1, configured)
        return 1


@cache
def get_tolerances() -> Tolerances:
    """
    Return the process-wide configured tolerances.

    Returns:
        The tolerances read from ``settings.json``, loaded once

    """
    return SettingsService().tolerances()
