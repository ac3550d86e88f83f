"""
Skew information quantities and their companions.

Every quantity can be evaluated along two independent paths:

- :attr:`ComputationPath.TRACE_FORMULA` multiplies the matrices of the
  definition and takes the trace.  This is the default.
- :attr:`ComputationPath.SPECTRAL_SUM` rotates the operators into the
  eigenbasis of ``rho`` and evaluates explicit double sums over eigenvalues
  and matrix elements.

:func:`compare_paths` evaluates both and reports whether they agree.

Conventions: ``a_mn = <psi_m|A_0|psi_n>`` where ``A_0 = A - Tr(rho A) I`` and
``c = 1 - alpha - beta``.  J, K and L are defined on ``A_0``; I, Corr and C
take the operator as given.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import TYPE_CHECKING, Any, Final

import numpy as np

from skewlab.exc import NumericalInconsistency
from skewlab.models import (
    DensityOperator,
    HSOperator,
    PathComparison,
    QuantityResult,
    SkewParams,
)
from skewlab.settings import Tolerances, get_tolerances
from skewlab.spectral import (
    anticommutator,
    center,
    check_dimension,
    commutator,
    eigenbasis_elements,
    matrix_power,
    validate_density,
)
from skewlab.types import ComputationPath

if TYPE_CHECKING:
    from collections.abc import Callable

    import numpy.typing as npt

    from skewlab.types import ComplexMatrix, QuantityName, RealVector

    StateLike = DensityOperator | npt.ArrayLike
    OperatorLike = HSOperator | npt.ArrayLike

logger = logging.getLogger(__name__)

TRACE: Final[ComputationPath] = ComputationPath.TRACE_FORMULA
SPECTRAL: Final[ComputationPath] = ComputationPath.SPECTRAL_SUM


# ---------------------------------------------------------------------------
# Plumbing
# ---------------------------------------------------------------------------


def _prepare(
    rho: StateLike, *operators: OperatorLike
) -> tuple[DensityOperator, list[HSOperator]]:
    state = validate_density(rho)
    ops = [HSOperator.coerce(op) for op in operators]
    for op in ops:
        check_dimension(state, op)
    return state, ops


def _tr(matrix: ComplexMatrix) -> complex:
    return complex(np.trace(matrix))


def _require_finite(name: str, value: complex) -> complex:
    value = complex(value)
    if not cmath.isfinite(value):
        raise NumericalInconsistency(name, value, value, "non-finite value")
    return value


def _real_result(
    name: str,
    value: complex,
    path: ComputationPath,
    tolerances: Tolerances,
) -> QuantityResult:
    """
    Wrap a quantity that is real and nonnegative by construction.

    Args:
        name: Quantity name
        value: The raw complex value
        path: How it was computed
        tolerances: Residual and clamping tolerances

    Raises:
        NumericalInconsistency: the value is not finite, the imaginary
            residual is too large, or the value is negative beyond the
            clamping tolerance

    Returns:
        The result, reporting the (clamped) real part

    """
    value = _require_finite(name, value)
    residual = abs(value.imag)
    real = value.real
    if residual > tolerances.imag_residual * max(1.0, abs(real)):
        raise NumericalInconsistency(
            name, value, real, f"imaginary residual {residual:.3e}"
        )
    if real < 0:
        if real < -tolerances.negative_clamp:
            raise NumericalInconsistency(
                name, value, 0.0, "negative beyond the clamping tolerance"
            )
        real = 0.0
    # no -0.0 in reports
    real += 0.0
    return QuantityResult(
        name=name, value=value, path=path, imag_residual=residual, real=real
    )


def _complex_result(
    name: str, value: complex, path: ComputationPath
) -> QuantityResult:
    value = _require_finite(name, value)
    return QuantityResult(
        name=name, value=value, path=path, imag_residual=0.0, real=value.real
    )


def _check_agreement(
    name: str, values: list[complex], tolerances: Tolerances, detail: str
) -> None:
    first = values[0]
    for other in values[1:]:
        if not tolerances.agree(first, other):
            raise NumericalInconsistency(name, first, other, detail)


class _Spectrum:
    """Eigenvalue powers of one state at one exponent pair."""

    def __init__(self, rho: DensityOperator, params: SkewParams):
        self.la = rho.eigenvalue_powers(params.alpha)
        self.lb = rho.eigenvalue_powers(params.beta)
        self.lc = rho.eigenvalue_powers(params.context)
        self.lab = rho.eigenvalue_powers(params.total)

    @staticmethod
    def diff(powers: RealVector) -> np.ndarray:
        """``powers[m] - powers[n]`` as a matrix indexed ``[m, n]``."""
        return powers[:, None] - powers[None, :]

    @staticmethod
    def plus(powers: RealVector) -> np.ndarray:
        """``powers[m] + powers[n]`` as a matrix indexed ``[m, n]``."""
        return powers[:, None] + powers[None, :]

    def bracket(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """
        ``lambda_m^c left[m, n] + lambda_n^c right[m, n]``.

        ``left`` carries the ``conj(a_nm) b_nm`` factor and ``right`` the
        ``a_mn conj(b_mn)`` factor.
        """
        return self.lc[:, None] * left + self.lc[None, :] * right


def _pair_factors(
    a: ComplexMatrix, b: ComplexMatrix
) -> tuple[np.ndarray, np.ndarray]:
    """
    The two element products of the spectral sums, indexed ``[m, n]``.

    Returns:
        ``conj(a_nm) b_nm`` and ``a_mn conj(b_mn)``

    """
    return (a.conj() * b).T, a * b.conj()


# ---------------------------------------------------------------------------
# Trace formula terms
# ---------------------------------------------------------------------------


def _trace_terms(
    rho: DensityOperator, a: HSOperator, b: HSOperator, params: SkewParams
) -> tuple[complex, complex, complex, complex]:
    """
    The four traces every two-operator quantity is built from.

    Returns:
        ``Tr(rho A^+ B)``, ``Tr(rho^(alpha+beta) A rho^c B^+)``,
        ``Tr(rho^(1-beta) A^+ rho^beta B)`` and
        ``Tr(rho^alpha A rho^(1-alpha) B^+)``

    """
    alpha, beta = params.alpha, params.beta
    am, bm = a.matrix, b.matrix
    ad, bd = am.conj().T, bm.conj().T
    t1 = _tr(rho.matrix @ ad @ bm)
    t2 = _tr(
        matrix_power(rho, params.total) @ am @ matrix_power(rho, params.context) @ bd
    )
    t3 = _tr(matrix_power(rho, 1 - beta) @ ad @ matrix_power(rho, beta) @ bm)
    t4 = _tr(matrix_power(rho, alpha) @ am @ matrix_power(rho, 1 - alpha) @ bd)
    return t1, t2, t3, t4


def _commutator_form(
    rho: DensityOperator,
    left: ComplexMatrix,
    right: ComplexMatrix,
    operator: HSOperator,
    params: SkewParams,
) -> complex:
    """``Tr([left, A^+][right, A] rho^c)``."""
    adjoint = operator.matrix.conj().T
    return _tr(
        commutator(left, adjoint)
        @ commutator(right, operator.matrix)
        @ matrix_power(rho, params.context)
    )


def _anticommutator_form(
    rho: DensityOperator,
    left: ComplexMatrix,
    right: ComplexMatrix,
    operator: HSOperator,
    params: SkewParams,
) -> complex:
    """``Tr({left, A^+}{right, A} rho^c)``."""
    adjoint = operator.matrix.conj().T
    return _tr(
        anticommutator(left, adjoint)
        @ anticommutator(right, operator.matrix)
        @ matrix_power(rho, params.context)
    )


def _weighted_mean(rho: DensityOperator, params: SkewParams) -> ComplexMatrix:
    """``(rho^alpha + rho^beta) / 2``."""
    return (matrix_power(rho, params.alpha) + matrix_power(rho, params.beta)) / 2


# ---------------------------------------------------------------------------
# Two-operator quantities
# ---------------------------------------------------------------------------


def _covariance_value(
    rho: DensityOperator,
    a: HSOperator,
    b: HSOperator,
    params: SkewParams,
    path: ComputationPath,
) -> complex:
    if path == TRACE:
        t1, t2, _, _ = _trace_terms(rho, a, b, params)
        ea, eb = rho.expectation(a.matrix), rho.expectation(b.matrix)
        return 0.5 * (t1 + t2) - 0.5 * (eb * ea.conjugate() + ea * eb.conjugate())
    sp = _Spectrum(rho, params)
    x, y = _pair_factors(
        eigenbasis_elements(rho, center(rho, a)),
        eigenbasis_elements(rho, center(rho, b)),
    )
    return complex(0.5 * np.sum(sp.lab[:, None] * sp.bracket(x, y)))


def covariance(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,  # noqa: ARG001
) -> QuantityResult:
    """
    The generalized covariance ``Cov(A, B)``.

    ``(1/2)[Tr(rho A^+ B) + Tr(rho^(alpha+beta) A rho^c B^+)]
    - (1/2)[Tr(rho B) Tr(rho A^+) + Tr(rho A) Tr(rho B^+)]``.  Complex in
    general.

    Args:
        rho: The state
        a: The operator ``A``
        b: The operator ``B``
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Accepted for a uniform signature; unused

    Raises:
        DimensionMismatch: the operators do not match the state

    Returns:
        The covariance

    """
    state, (op_a, op_b) = _prepare(rho, a, b)
    return _complex_result(
        "cov", _covariance_value(state, op_a, op_b, params, path), path
    )


def variance(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    The generalized variance ``Var(A) = Cov(A, A)``, real and nonnegative.

    Args:
        rho: The state
        a: The operator ``A``
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Residual and clamping tolerances

    Returns:
        The variance

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    value = _covariance_value(state, op, op, params, path)
    return _real_result("var", value, path, tol)


def _correlation_value(
    rho: DensityOperator,
    a: HSOperator,
    b: HSOperator,
    params: SkewParams,
    path: ComputationPath,
) -> complex:
    if path == TRACE:
        t1, t2, t3, t4 = _trace_terms(rho, a, b, params)
        return 0.5 * (t1 + t2 - t3 - t4)
    sp = _Spectrum(rho, params)
    x, y = _pair_factors(
        eigenbasis_elements(rho, center(rho, a)),
        eigenbasis_elements(rho, center(rho, b)),
    )
    weight = sp.la[:, None] * sp.diff(sp.lb)
    return complex(0.5 * np.sum(weight * sp.bracket(x, y)))


def correlation(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,  # noqa: ARG001
) -> QuantityResult:
    """
    The generalized correlation ``Corr(A, B)``.

    ``(1/2)[Tr(rho A^+ B) + Tr(rho^(alpha+beta) A rho^c B^+)
    - Tr(rho^(1-beta) A^+ rho^beta B) - Tr(rho^alpha A rho^(1-alpha) B^+)]``.
    Complex in general; ``Corr(A, A)`` equals the skew information ``I(A)``.

    Args:
        rho: The state
        a: The operator ``A``
        b: The operator ``B``
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Accepted for a uniform signature; unused

    Returns:
        The correlation

    """
    state, (op_a, op_b) = _prepare(rho, a, b)
    return _complex_result(
        "corr", _correlation_value(state, op_a, op_b, params, path), path
    )


def _c_value(
    rho: DensityOperator,
    a: HSOperator,
    b: HSOperator,
    params: SkewParams,
    path: ComputationPath,
) -> complex:
    if path == TRACE:
        _, _, t3, t4 = _trace_terms(rho, a, b, params)
        return 0.5 * (t3 + t4)
    x, y = _pair_factors(eigenbasis_elements(rho, a), eigenbasis_elements(rho, b))
    alpha, beta = params.alpha, params.beta
    lower = rho.eigenvalue_powers(1 - beta)[:, None] * rho.eigenvalue_powers(beta)
    upper = rho.eigenvalue_powers(alpha)[:, None] * rho.eigenvalue_powers(1 - alpha)
    return complex(0.5 * np.sum(lower * x + upper * y))


def c_quantity(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,  # noqa: ARG001
) -> QuantityResult:
    """
    ``C(A, B) = (1/2)[Tr(rho^(1-beta) A^+ rho^beta B)
    + Tr(rho^alpha A rho^(1-alpha) B^+)]``, on the operators as given.

    Args:
        rho: The state
        a: The operator ``A``
        b: The operator ``B``
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Accepted for a uniform signature; unused

    Returns:
        The value of ``C(A, B)``

    """
    state, (op_a, op_b) = _prepare(rho, a, b)
    return _complex_result("c", _c_value(state, op_a, op_b, params, path), path)


def c_self(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """``C(A) = C(A, A)``, real and nonnegative."""
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    return _real_result("c_self", _c_value(state, op, op, params, path), path, tol)


# ---------------------------------------------------------------------------
# Skew informations
# ---------------------------------------------------------------------------


def _i_value(
    rho: DensityOperator,
    a: HSOperator,
    params: SkewParams,
    path: ComputationPath,
    tolerances: Tolerances,
) -> complex:
    if path == TRACE:
        return -0.5 * _commutator_form(
            rho,
            matrix_power(rho, params.alpha),
            matrix_power(rho, params.beta),
            a,
            params,
        )
    sp = _Spectrum(rho, params)
    s = np.abs(eigenbasis_elements(rho, center(rho, a))) ** 2
    diff_a, diff_b = sp.diff(sp.la), sp.diff(sp.lb)
    rowwise = 0.5 * np.sum(sp.la[:, None] * diff_b * sp.bracket(s.T, s))
    columnwise = 0.5 * np.sum(diff_a * diff_b * sp.lc[None, :] * s)
    upper = np.triu(np.ones_like(s, dtype=bool), k=1)
    pairwise = 0.5 * np.sum((diff_a * diff_b * sp.bracket(s.T, s))[upper])
    # I is symmetric in alpha and beta
    ex = _Spectrum(rho, params.swapped())
    exchanged = 0.5 * np.sum(ex.la[:, None] * ex.diff(ex.lb) * ex.bracket(s.T, s))
    forms = [
        complex(rowwise),
        complex(columnwise),
        complex(pairwise),
        complex(exchanged),
    ]
    _check_agreement("i", forms, tolerances, "spectral sum forms disagree")
    return forms[1]


def mgwyd_i(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    The generalized skew information
    ``I(A) = -(1/2) Tr([rho^alpha, A^+][rho^beta, A] rho^c)``.

    The spectral path evaluates four equivalent double sums (full sum
    weighted by ``lambda_m^alpha``, the same sum with the exponents
    exchanged, full symmetric sum, and the sum over ``m < n``) and requires
    them to agree.

    Args:
        rho: The state
        a: The operator ``A``, centered or not
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Residual, clamping and agreement tolerances

    Raises:
        DimensionMismatch: ``A`` does not match the state
        NumericalInconsistency: the spectral forms disagree, the result has
            a large imaginary part, or is negative beyond round-off

    Returns:
        The skew information

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    return _real_result("i", _i_value(state, op, params, path, tol), path, tol)


def _j_value(
    rho: DensityOperator,
    a: HSOperator,
    params: SkewParams,
    path: ComputationPath,
    tolerances: Tolerances,
) -> complex:
    centered = center(rho, a)
    if path == TRACE:
        return 0.5 * _anticommutator_form(
            rho,
            matrix_power(rho, params.alpha),
            matrix_power(rho, params.beta),
            centered,
            params,
        )
    sp = _Spectrum(rho, params)
    s = np.abs(eigenbasis_elements(rho, centered)) ** 2
    rowwise = 0.5 * np.sum(sp.la[:, None] * sp.plus(sp.lb) * sp.bracket(s.T, s))
    columnwise = 0.5 * np.sum(sp.plus(sp.la) * sp.plus(sp.lb) * sp.lc[None, :] * s)
    ex = _Spectrum(rho, params.swapped())
    exchanged = 0.5 * np.sum(ex.la[:, None] * ex.plus(ex.lb) * ex.bracket(s.T, s))
    forms = [complex(rowwise), complex(columnwise), complex(exchanged)]
    _check_agreement("j", forms, tolerances, "spectral sum forms disagree")
    return forms[1]


def companion_j(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    The companion ``J(A) = (1/2) Tr({rho^alpha, A_0^+}{rho^beta, A_0} rho^c)``.

    Args:
        rho: The state
        a: The operator ``A``; it is centered internally
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Residual, clamping and agreement tolerances

    Returns:
        The companion quantity

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    return _real_result("j", _j_value(state, op, params, path, tol), path, tol)


def u_quantity(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    ``U(A) = sqrt(Var^2 - (Var - I)^2) = sqrt(I J)``.

    Both expressions are evaluated; their squares must agree within the
    ``u_consistency`` relative tolerance.

    Args:
        rho: The state
        a: The operator ``A``
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use for I, J and Var
        tolerances: Residual, clamping and agreement tolerances

    Raises:
        NumericalInconsistency: the two expressions disagree, or the radicand
            is negative beyond round-off

    Returns:
        The value of ``U(A)``

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    i = mgwyd_i(state, op, params, path=path, tolerances=tol).real
    j = companion_j(state, op, params, path=path, tolerances=tol).real
    var = variance(state, op, params, path=path, tolerances=tol).real
    by_variance = var**2 - (var - i) ** 2
    by_product = i * j
    scale = max(abs(by_variance), abs(by_product))
    if abs(by_variance - by_product) > max(
        tol.path_absolute, tol.u_consistency * scale
    ):
        raise NumericalInconsistency(
            "u", by_variance, by_product, "Var^2 - (Var - I)^2 differs from I J"
        )
    if by_product < -tol.negative_clamp:
        raise NumericalInconsistency(
            "u", by_product, 0.0, "negative radicand beyond the clamping tolerance"
        )
    value = math.sqrt(max(0.0, by_product))
    return QuantityResult(
        name="u", value=complex(value), path=path, imag_residual=0.0, real=value
    )


def _k_value(
    rho: DensityOperator,
    a: HSOperator,
    params: SkewParams,
    path: ComputationPath,
    tolerances: Tolerances,
) -> complex:
    centered = center(rho, a)
    if path == TRACE:
        mean = _weighted_mean(rho, params)
        value = -0.5 * _commutator_form(rho, mean, mean, centered, params)
        _check_k_decomposition(rho, centered, params, value, tolerances)
        return value
    sp = _Spectrum(rho, params)
    s = np.abs(eigenbasis_elements(rho, centered)) ** 2
    mean = (sp.la + sp.lb) / 2
    return complex(0.5 * np.sum(sp.diff(mean) ** 2 * sp.lc[None, :] * s))


def _check_k_decomposition(
    rho: DensityOperator,
    centered: HSOperator,
    params: SkewParams,
    value: complex,
    tolerances: Tolerances,
) -> None:
    """
    Verify ``K = -(1/8)[T(alpha) + T(beta)] + (1/2) I`` with
    ``T(t) = Tr([rho^t, A_0^+][rho^t, A_0] rho^c)``.

    Raises:
        NumericalInconsistency: the identity fails beyond tolerance

    """
    power_a = matrix_power(rho, params.alpha)
    power_b = matrix_power(rho, params.beta)
    t_alpha = _commutator_form(rho, power_a, power_a, centered, params)
    t_beta = _commutator_form(rho, power_b, power_b, centered, params)
    skew = -0.5 * _commutator_form(rho, power_a, power_b, centered, params)
    expected = -(t_alpha + t_beta) / 8 + 0.5 * skew
    if abs(value - expected) > tolerances.k_decomposition * max(1.0, abs(value)):
        raise NumericalInconsistency(
            "k", value, expected, "weighted decomposition identity fails"
        )


def mwgwyd_k(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    The weighted skew information
    ``K(A) = -(1/2) Tr([M, A_0^+][M, A_0] rho^c)`` with
    ``M = (rho^alpha + rho^beta) / 2``.

    The trace path also checks the decomposition of K into the two
    single-exponent commutator traces plus ``I / 2``.

    Args:
        rho: The state
        a: The operator ``A``; it is centered internally
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Residual, clamping and identity tolerances

    Raises:
        NumericalInconsistency: the decomposition identity fails

    Returns:
        The weighted skew information

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    return _real_result("k", _k_value(state, op, params, path, tol), path, tol)


def _l_value(
    rho: DensityOperator,
    a: HSOperator,
    params: SkewParams,
    path: ComputationPath,
) -> complex:
    centered = center(rho, a)
    if path == TRACE:
        mean = _weighted_mean(rho, params)
        return 0.5 * _anticommutator_form(rho, mean, mean, centered, params)
    sp = _Spectrum(rho, params)
    s = np.abs(eigenbasis_elements(rho, centered)) ** 2
    mean = (sp.la + sp.lb) / 2
    return complex(0.5 * np.sum(sp.plus(mean) ** 2 * sp.lc[None, :] * s))


def companion_l(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    The weighted companion ``L(A) = (1/2) Tr({M, A_0^+}{M, A_0} rho^c)``.

    Args:
        rho: The state
        a: The operator ``A``; it is centered internally
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Residual and clamping tolerances

    Returns:
        The weighted companion quantity

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    return _real_result("l", _l_value(state, op, params, path), path, tol)


def w_quantity(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    ``W(A) = sqrt(K L)``.

    Raises:
        NumericalInconsistency: K or L is negative beyond round-off

    """
    tol = tolerances or get_tolerances()
    state, (op,) = _prepare(rho, a)
    k = mwgwyd_k(state, op, params, path=path, tolerances=tol).real
    l_value = companion_l(state, op, params, path=path, tolerances=tol).real
    value = math.sqrt(k * l_value)
    return QuantityResult(
        name="w", value=complex(value), path=path, imag_residual=0.0, real=value
    )


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

#: Quantities of a single operator
SINGLE: Final[dict[str, Callable[..., QuantityResult]]] = {
    "var": variance,
    "c_self": c_self,
    "i": mgwyd_i,
    "j": companion_j,
    "u": u_quantity,
    "k": mwgwyd_k,
    "l": companion_l,
    "w": w_quantity,
}

#: Quantities of an operator pair
PAIR: Final[dict[str, Callable[..., QuantityResult]]] = {
    "cov": covariance,
    "corr": correlation,
    "c": c_quantity,
}


def evaluate(
    name: QuantityName | str,
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike | None,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> QuantityResult:
    """
    Evaluate a quantity by name.

    Args:
        name: One of the keys of :data:`SINGLE` or :data:`PAIR`
        rho: The state
        a: The operator ``A``
        b: The operator ``B``; required for pair quantities, else ignored
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Kernel tolerances

    Raises:
        KeyError: ``name`` is not a known quantity
        ValueError: a pair quantity was requested without ``B``

    Returns:
        The quantity

    """
    if name in PAIR:
        if b is None:
            msg = f"Quantity {name!r} needs a second operator"
            raise ValueError(msg)
        return PAIR[name](rho, a, b, params, path=path, tolerances=tolerances)
    if name not in SINGLE:
        msg = f"Unknown quantity {name!r}"
        raise KeyError(msg)
    return SINGLE[name](rho, a, params, path=path, tolerances=tolerances)


def compare_paths(
    name: QuantityName | str,
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike | None,
    params: SkewParams,
    *,
    tolerances: Tolerances | None = None,
) -> PathComparison:
    """
    Evaluate a quantity along both paths and compare the raw values.

    Args:
        name: Quantity name, as for :func:`evaluate`
        rho: The state
        a: The operator ``A``
        b: The operator ``B`` for pair quantities, else None
        params: The exponent pair

    Keyword Args:
        tolerances: Agreement tolerances

    Returns:
        The comparison

    """
    tol = tolerances or get_tolerances()
    state, _ = _prepare(rho, a)
    trace = evaluate(name, state, a, b, params, path=TRACE, tolerances=tol)
    spectral = evaluate(name, state, a, b, params, path=SPECTRAL, tolerances=tol)
    difference = abs(trace.value - spectral.value)
    agrees = tol.agree(trace.value, spectral.value)
    if not agrees:
        logger.warning(
            f"{name}: trace path {trace.value!r} and spectral path "
            f"{spectral.value!r} differ by {difference:.3e}"
        )
    return PathComparison(
        name=str(name),
        trace=trace,
        spectral=spectral,
        difference=difference,
        agrees=agrees,
    )


def evaluate_all(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike | None,
    params: SkewParams,
    *,
    path: ComputationPath = TRACE,
    tolerances: Tolerances | None = None,
) -> dict[str, Any]:
    """
    Evaluate every quantity for ``A`` (and ``B`` and the pair, if given).

    Complex quantities are reported as ``{"re": ..., "im": ...}``.

    Args:
        rho: The state
        a: The operator ``A``
        b: The operator ``B``, or None
        params: The exponent pair

    Keyword Args:
        path: Which computation path to use
        tolerances: Kernel tolerances

    Returns:
        A JSON-serializable dictionary keyed by quantity name

    """
    tol = tolerances or get_tolerances()
    state = validate_density(rho, tol)
    operators = {"A": a} if b is None else {"A": a, "B": b}
    report: dict[str, Any] = {}
    for label, op in operators.items():
        report[label] = {
            name: function(state, op, params, path=path, tolerances=tol).real
            for name, function in SINGLE.items()
        }
    if b is not None:
        for name, function in PAIR.items():
            value = function(state, a, b, params, path=path, tolerances=tol).value
            report[name] = {"re": value.real, "im": value.imag}
    return report
