"""
Density operator validation, fractional powers, commutators and centering.

Every quantity in :mod:`skewlab.quantities` is assembled from these kernels.
All functions are pure: they never modify their inputs.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Final

import numpy as np

from skewlab.exc import DimensionMismatch
from skewlab.models import DensityOperator, HSOperator

if TYPE_CHECKING:
    import numpy.typing as npt

    from skewlab.settings import Tolerances
    from skewlab.types import ComplexMatrix

#: Slack allowed on the [0, 1] exponent range of :func:`matrix_power`
EXPONENT_EPS: Final[float] = 1e-12


def validate_density(
    raw: npt.ArrayLike | DensityOperator, tolerances: Tolerances | None = None
) -> DensityOperator:
    """
    Validate a candidate density matrix.

    See :meth:`DensityOperator.create` for the checks and normalization
    performed.  An existing :class:`DensityOperator` is returned unchanged.

    Args:
        raw: A square complex matrix, or an already validated state
        tolerances: Validation tolerances; the configured ones if None

    Returns:
        The validated density operator

    """
    if isinstance(raw, DensityOperator):
        return raw
    return DensityOperator.create(raw, tolerances)


def matrix_power(rho: DensityOperator, t: float) -> ComplexMatrix:
    """
    Return ``rho ** t`` for ``0 <= t <= 1``, with ``0 ** 0 == 1``.

    ``rho ** 0`` is therefore the identity on the whole space, not the
    projector onto the support of ``rho``.

    Args:
        rho: The state
        t: The exponent

    Raises:
        ValueError: ``t`` is outside ``[0, 1]``

    Returns:
        The Hermitian positive semidefinite matrix ``rho ** t``

    """
    if not (-EXPONENT_EPS <= t <= 1 + EXPONENT_EPS):
        msg = f"Exponent {t!r} is outside [0, 1]"
        raise ValueError(msg)
    return rho.power(min(max(t, 0.0), 1.0))


def check_dimension(rho: DensityOperator, operator: HSOperator) -> None:
    """
    Ensure ``operator`` acts on the same space as ``rho``.

    Args:
        rho: The state
        operator: The operator

    Raises:
        DimensionMismatch: the dimensions differ

    """
    if operator.dim != rho.dim:
        raise DimensionMismatch(rho.dim, operator.dim)


def center(
    rho: DensityOperator, operator: HSOperator | npt.ArrayLike
) -> HSOperator:
    """
    Return ``A_0 = A - Tr(rho A) I``.

    Args:
        rho: The state
        operator: The operator ``A``

    Raises:
        DimensionMismatch: ``A`` and ``rho`` have different dimensions

    Returns:
        The centered operator; ``Tr(rho A_0) == 0`` up to round-off

    """
    op = HSOperator.coerce(operator)
    check_dimension(rho, op)
    shift = rho.expectation(op.matrix)
    return HSOperator.create(op.matrix - shift * np.eye(op.dim))


def _as_pair(
    x: HSOperator | npt.ArrayLike, y: HSOperator | npt.ArrayLike
) -> tuple[ComplexMatrix, ComplexMatrix]:
    first = x.matrix if isinstance(x, HSOperator) else np.asarray(x, np.complex128)
    second = y.matrix if isinstance(y, HSOperator) else np.asarray(y, np.complex128)
    if first.shape != second.shape:
        raise DimensionMismatch(first.shape[0], second.shape[0], what="right operand")
    return first, second


def commutator(
    x: HSOperator | npt.ArrayLike, y: HSOperator | npt.ArrayLike
) -> ComplexMatrix:
    """
    Return ``[X, Y] = XY - YX``.

    Raises:
        DimensionMismatch: the operands have different shapes

    """
    first, second = _as_pair(x, y)
    return first @ second - second @ first


def anticommutator(
    x: HSOperator | npt.ArrayLike, y: HSOperator | npt.ArrayLike
) -> ComplexMatrix:
    """
    Return ``{X, Y} = XY + YX``.

    Raises:
        DimensionMismatch: the operands have different shapes

    """
    first, second = _as_pair(x, y)
    return first @ second + second @ first


def eigenbasis_elements(
    rho: DensityOperator, operator: HSOperator
) -> ComplexMatrix:
    """
    Return the matrix elements ``a_mn = <psi_m|A|psi_n>`` in rho's eigenbasis.

    Args:
        rho: The state
        operator: The operator ``A``

    Raises:
        DimensionMismatch: ``A`` and ``rho`` have different dimensions

    Returns:
        The ``d x d`` matrix of elements

    """
    check_dimension(rho, operator)
    return rho.to_eigenbasis(operator.matrix)
