"""
Uncertainty relations and scalar inequalities as checkable predicates.

Every check returns a :class:`~skewlab.models.CheckResult` whose ``lhs`` is the
side that must be the larger one, so ``slack = lhs - rhs >= -tol`` means the
relation holds.  For the scalar lemmas this puts the bounding expression on
the left.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Final

from skewlab.exc import (
    NumericalInconsistency,
    ParamsOutsideLemmaDomain,
    ParamsOutsideTheoremDomain,
)
from skewlab.models import CheckResult, DensityOperator, HSOperator, SkewParams
from skewlab.quantities import (
    SPECTRAL,
    TRACE,
    companion_j,
    companion_l,
    correlation,
    mgwyd_i,
    mwgwyd_k,
    u_quantity,
    variance,
    w_quantity,
)
from skewlab.settings import Tolerances, get_tolerances
from skewlab.spectral import validate_density
from skewlab.types import BoundComparison
from skewlab.utils import digest_inputs

if TYPE_CHECKING:
    import numpy.typing as npt

    from skewlab.types import RelationName

    StateLike = DensityOperator | npt.ArrayLike
    OperatorLike = HSOperator | npt.ArrayLike

logger = logging.getLogger(__name__)

#: Slack allowed on domain boundaries
DOMAIN_EPS: Final[float] = 1e-12

#: Human readable hypotheses of the two uncertainty relations
THEOREM1_CONDITION: Final[str] = "0 <= beta <= min(alpha, 1 - alpha)"
THEOREM2_CONDITION: Final[str] = "0 <= beta <= min(4 alpha, 1 - alpha)"


# ---------------------------------------------------------------------------
# Domains
# ---------------------------------------------------------------------------


def in_theorem1_domain(params: SkewParams) -> bool:
    """Whether ``0 <= beta <= min(alpha, 1 - alpha)``."""
    return params.beta <= min(params.alpha, 1 - params.alpha) + DOMAIN_EPS


def in_theorem2_domain(params: SkewParams) -> bool:
    """Whether ``0 <= beta <= min(4 alpha, 1 - alpha)``."""
    return params.beta <= min(4 * params.alpha, 1 - params.alpha) + DOMAIN_EPS


def compare_bounds(params: SkewParams) -> BoundComparison:
    """
    Which lower bound on ``U(A) U(B)`` is tighter at ``(alpha, beta)``.

    Both bounds multiply ``|Corr(A, B)|^2``, by ``4 alpha beta`` and by
    ``1/4`` respectively, so the larger coefficient gives the tighter bound.
    The comparison is only meaningful where both hypotheses hold; the first
    domain lies inside the second, so everywhere else at most one relation
    applies and the result is :attr:`BoundComparison.DOMAINS_DISJOINT`.

    Args:
        params: The exponent pair

    Returns:
        The comparison

    """
    if not (in_theorem1_domain(params) and in_theorem2_domain(params)):
        return BoundComparison.DOMAINS_DISJOINT
    coefficient = 4 * params.alpha * params.beta
    if abs(coefficient - 0.25) <= DOMAIN_EPS:
        return BoundComparison.EQUAL
    if coefficient > 0.25:  # noqa: PLR2004
        return BoundComparison.THEOREM1_TIGHTER
    return BoundComparison.THEOREM2_TIGHTER


# ---------------------------------------------------------------------------
# Scalar lemmas
# ---------------------------------------------------------------------------


def _check_scalars(lemma: str, x: float, y: float) -> None:
    if x < 0 or y < 0:
        raise ParamsOutsideLemmaDomain(lemma, f"x={x!r}, y={y!r} must be >= 0")


def _scalar_result(
    name: RelationName,
    x: float,
    y: float,
    params: SkewParams,
    bound: float,
    bounded: float,
) -> CheckResult:
    return CheckResult.evaluate(
        name,
        bound,
        bounded,
        get_tolerances(),
        digest_inputs(name, x, y, params.alpha, params.beta),
    )


def check_lemma1_product(x: float, y: float, params: SkewParams) -> CheckResult:
    """
    ``(x^alpha + y^alpha) |x^beta - y^beta| <= |x - y|``.

    Holds for all ``x, y >= 0`` when ``alpha + beta = 1`` and ``beta <= alpha``;
    with ``alpha + beta < 1`` it can fail near the origin, which the result
    reports as ``holds = False``.

    Args:
        x: First nonnegative scalar
        y: Second nonnegative scalar
        params: Exponents with ``0 <= beta <= min(alpha, 1 - alpha)``

    Raises:
        ParamsOutsideLemmaDomain: negative scalars or exponents outside the
            domain

    Returns:
        The check, with ``lhs = |x - y|``

    """
    _check_scalars("lemma1_product", x, y)
    if not in_theorem1_domain(params):
        raise ParamsOutsideLemmaDomain("lemma1_product", THEOREM1_CONDITION)
    alpha, beta = params.alpha, params.beta
    bounded = (x**alpha + y**alpha) * abs(x**beta - y**beta)
    return _scalar_result("lemma1_product", x, y, params, abs(x - y), bounded)


def check_lemma1_quadratic(x: float, y: float, params: SkewParams) -> CheckResult:
    """
    ``4 alpha beta (x - y)^2 <= (x^(2 alpha) - y^(2 alpha))(x^(2 beta) - y^(2 beta))``.

    Holds on ``x, y in [0, 1]``; far outside the unit square it can fail.

    Args:
        x: First nonnegative scalar
        y: Second nonnegative scalar
        params: Exponents with ``0 <= beta <= min(alpha, 1 - alpha)``

    Raises:
        ParamsOutsideLemmaDomain: negative scalars or exponents outside the
            domain

    Returns:
        The check, with the product of differences as ``lhs``

    """
    _check_scalars("lemma1_quadratic", x, y)
    if not in_theorem1_domain(params):
        raise ParamsOutsideLemmaDomain("lemma1_quadratic", THEOREM1_CONDITION)
    alpha, beta = params.alpha, params.beta
    bound = (x ** (2 * alpha) - y ** (2 * alpha)) * (x ** (2 * beta) - y ** (2 * beta))
    bounded = 4 * alpha * beta * (x - y) ** 2
    return _scalar_result("lemma1_quadratic", x, y, params, bound, bounded)


def check_lemma2(x: float, y: float, params: SkewParams) -> CheckResult:
    """
    ``(x^(alpha+beta) - x^alpha y^beta)^2 <=
    (x^(2 alpha) - y^(2 alpha))(x^(2 beta) - y^(2 beta))``.

    Holds for all ``x, y >= 0`` when ``beta <= min(2 alpha, 1 - alpha)``; for
    ``2 alpha < beta <= 4 alpha`` it can fail, reported as ``holds = False``.

    Args:
        x: First nonnegative scalar
        y: Second nonnegative scalar
        params: Exponents with ``0 <= beta <= min(4 alpha, 1 - alpha)``

    Raises:
        ParamsOutsideLemmaDomain: negative scalars or exponents outside the
            domain

    Returns:
        The check, with the product of differences as ``lhs``

    """
    _check_scalars("lemma2", x, y)
    if not in_theorem2_domain(params):
        raise ParamsOutsideLemmaDomain("lemma2", THEOREM2_CONDITION)
    alpha, beta = params.alpha, params.beta
    bound = (x ** (2 * alpha) - y ** (2 * alpha)) * (x ** (2 * beta) - y ** (2 * beta))
    bounded = (x ** (alpha + beta) - x**alpha * y**beta) ** 2
    return _scalar_result("lemma2", x, y, params, bound, bounded)


# ---------------------------------------------------------------------------
# Uncertainty relations
# ---------------------------------------------------------------------------


class _Relation:
    """The quantities entering one uncertainty relation for a fixed input."""

    def __init__(
        self,
        rho: StateLike,
        a: OperatorLike,
        b: OperatorLike,
        params: SkewParams,
        tolerances: Tolerances,
    ):
        self.rho = validate_density(rho, tolerances)
        self.a = HSOperator.coerce(a)
        self.b = HSOperator.coerce(b)
        self.params = params
        self.tolerances = tolerances
        self.digest = digest_inputs(
            self.rho.matrix,
            self.a.matrix,
            self.b.matrix,
            params.alpha,
            params.beta,
        )

    def corr_squared(self) -> float:
        value = correlation(self.rho, self.a, self.b, self.params).value
        return abs(value) ** 2

    def u_product(self) -> float:
        tol = self.tolerances
        u_a = u_quantity(self.rho, self.a, self.params, tolerances=tol).real
        u_b = u_quantity(self.rho, self.b, self.params, tolerances=tol).real
        return u_a * u_b

    def w_product(self) -> float:
        tol = self.tolerances
        w_a = w_quantity(self.rho, self.a, self.params, tolerances=tol).real
        w_b = w_quantity(self.rho, self.b, self.params, tolerances=tol).real
        return w_a * w_b

    def cross_product(self) -> float:
        """``min(I(A) J(B), I(B) J(A))``."""
        tol = self.tolerances
        i_a, j_a, i_b, j_b = (
            function(self.rho, op, self.params, tolerances=tol).real
            for op in (self.a, self.b)
            for function in (mgwyd_i, companion_j)
        )
        return min(i_a * j_b, i_b * j_a)

    def audit(self, *, weighted: bool = False) -> None:
        """
        Recompute the ingredients along the spectral path and compare.

        U and W are square roots of products, so the audit compares the
        factors under the roots and the correlation.

        Raises:
            NumericalInconsistency: the two paths disagree

        """
        tol = self.tolerances
        functions = [mgwyd_i, companion_j]
        if weighted:
            functions += [mwgwyd_k, companion_l]
        for function in functions:
            for op in (self.a, self.b):
                trace = function(self.rho, op, self.params, path=TRACE, tolerances=tol)
                spectral = function(
                    self.rho, op, self.params, path=SPECTRAL, tolerances=tol
                )
                if not tol.agree(trace.value, spectral.value):
                    raise NumericalInconsistency(
                        trace.name, trace.value, spectral.value, "audit"
                    )
        trace_corr = correlation(self.rho, self.a, self.b, self.params, path=TRACE)
        spectral_corr = correlation(
            self.rho, self.a, self.b, self.params, path=SPECTRAL
        )
        if not tol.agree(trace_corr.value, spectral_corr.value):
            raise NumericalInconsistency(
                "corr", trace_corr.value, spectral_corr.value, "audit"
            )


def _require_domain(name: RelationName, params: SkewParams) -> None:
    if name.startswith(("theorem1", "corollary1")):
        if not in_theorem1_domain(params):
            raise ParamsOutsideTheoremDomain(
                name, params.alpha, params.beta, THEOREM1_CONDITION
            )
    elif not in_theorem2_domain(params):
        raise ParamsOutsideTheoremDomain(
            name, params.alpha, params.beta, THEOREM2_CONDITION
        )


def _coefficient(name: RelationName, params: SkewParams) -> float:
    if name.startswith(("theorem1", "corollary1")):
        return 4 * params.alpha * params.beta
    return 0.25


def _check_relation(
    name: RelationName,
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    audit: bool,
    tolerances: Tolerances | None,
) -> CheckResult:
    _require_domain(name, params)
    tol = tolerances or get_tolerances()
    relation = _Relation(rho, a, b, params, tol)
    weighted = name.startswith("corollary")
    if audit:
        relation.audit(weighted=weighted)
    rhs = _coefficient(name, params) * relation.corr_squared()
    u_product = relation.u_product()
    if not weighted:
        return CheckResult.evaluate(name, u_product, rhs, tol, relation.digest)
    w_product = relation.w_product()
    dominance = CheckResult.evaluate(
        "w_product_ge_u_product", w_product, u_product, tol, relation.digest
    )
    if not dominance.holds:
        raise NumericalInconsistency(
            name, w_product, u_product, "W(A) W(B) is below U(A) U(B)"
        )
    return CheckResult.evaluate(name, w_product, rhs, tol, relation.digest)


def check_theorem1(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    audit: bool = False,
    tolerances: Tolerances | None = None,
) -> CheckResult:
    """
    ``U(A) U(B) >= 4 alpha beta |Corr(A, B)|^2``.

    Args:
        rho: The state
        a: The operator ``A``
        b: The operator ``B``
        params: Exponents with ``0 <= beta <= min(alpha, 1 - alpha)``

    Keyword Args:
        audit: Also recompute I, J and Corr along the spectral path
        tolerances: Kernel and slack tolerances

    Raises:
        ParamsOutsideTheoremDomain: the exponents are outside the domain
        NumericalInconsistency: the audit found the paths disagreeing

    Returns:
        The check, with ``lhs = U(A) U(B)``

    """
    return _check_relation(
        "theorem1", rho, a, b, params, audit=audit, tolerances=tolerances
    )


def check_theorem2(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    audit: bool = False,
    tolerances: Tolerances | None = None,
) -> CheckResult:
    """
    ``U(A) U(B) >= (1/4) |Corr(A, B)|^2``.

    Args:
        rho: The state
        a: The operator ``A``
        b: The operator ``B``
        params: Exponents with ``0 <= beta <= min(4 alpha, 1 - alpha)``

    Keyword Args:
        audit: Also recompute I, J and Corr along the spectral path
        tolerances: Kernel and slack tolerances

    Raises:
        ParamsOutsideTheoremDomain: the exponents are outside the domain

    Returns:
        The check, with ``lhs = U(A) U(B)``

    """
    return _check_relation(
        "theorem2", rho, a, b, params, audit=audit, tolerances=tolerances
    )


def check_corollary1(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    audit: bool = False,
    tolerances: Tolerances | None = None,
) -> CheckResult:
    """
    ``W(A) W(B) >= 4 alpha beta |Corr(A, B)|^2``.

    Raises:
        ParamsOutsideTheoremDomain: the exponents are outside the domain
        NumericalInconsistency: ``W(A) W(B) < U(A) U(B)`` beyond tolerance

    """
    return _check_relation(
        "corollary1", rho, a, b, params, audit=audit, tolerances=tolerances
    )


def check_corollary2(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    audit: bool = False,
    tolerances: Tolerances | None = None,
) -> CheckResult:
    """``W(A) W(B) >= (1/4) |Corr(A, B)|^2``."""
    return _check_relation(
        "corollary2", rho, a, b, params, audit=audit, tolerances=tolerances
    )


def check_theorem1_cross(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    tolerances: Tolerances | None = None,
) -> CheckResult:
    """
    ``min(I(A) J(B), I(B) J(A)) >= 4 alpha beta |Corr(A, B)|^2``.

    This is the intermediate bound the first uncertainty relation follows
    from, since ``U(A) U(B)`` is the geometric mean of the two products.

    Raises:
        ParamsOutsideTheoremDomain: the exponents are outside the domain

    """
    _require_domain("theorem1_cross", params)
    tol = tolerances or get_tolerances()
    relation = _Relation(rho, a, b, params, tol)
    rhs = _coefficient("theorem1", params) * relation.corr_squared()
    return CheckResult.evaluate(
        "theorem1_cross", relation.cross_product(), rhs, tol, relation.digest
    )


def check_theorem2_cross(
    rho: StateLike,
    a: OperatorLike,
    b: OperatorLike,
    params: SkewParams,
    *,
    tolerances: Tolerances | None = None,
) -> CheckResult:
    """
    ``4 min(I(A) J(B), I(B) J(A)) >= |Corr(A, B)|^2``, reported with both
    sides divided by 4.

    Raises:
        ParamsOutsideTheoremDomain: the exponents are outside the domain

    """
    _require_domain("theorem2_cross", params)
    tol = tolerances or get_tolerances()
    relation = _Relation(rho, a, b, params, tol)
    rhs = _coefficient("theorem2", params) * relation.corr_squared()
    return CheckResult.evaluate(
        "theorem2_cross", relation.cross_product(), rhs, tol, relation.digest
    )


def check_ordering(
    rho: StateLike,
    a: OperatorLike,
    params: SkewParams,
    *,
    tolerances: Tolerances | None = None,
) -> list[CheckResult]:
    """
    The ordering relations of a single operator.

    ``0 <= I <= U <= Var``, ``K >= I``, ``L >= J`` and ``W >= U``.

    Args:
        rho: The state
        a: The operator ``A``
        params: The exponent pair

    Keyword Args:
        tolerances: Kernel and slack tolerances

    Returns:
        One check per relation, in the order listed above

    """
    tol = tolerances or get_tolerances()
    state = validate_density(rho, tol)
    op = HSOperator.coerce(a)
    digest = digest_inputs(state.matrix, op.matrix, params.alpha, params.beta)
    i_result = mgwyd_i(state, op, params, tolerances=tol)
    i = i_result.real
    j = companion_j(state, op, params, tolerances=tol).real
    u = u_quantity(state, op, params, tolerances=tol).real
    var = variance(state, op, params, tolerances=tol).real
    k = mwgwyd_k(state, op, params, tolerances=tol).real
    l_value = companion_l(state, op, params, tolerances=tol).real
    w = w_quantity(state, op, params, tolerances=tol).real
    pairs: list[tuple[RelationName, float, float]] = [
        ("i_nonnegative", i_result.value.real, 0.0),
        ("u_ge_i", u, i),
        ("var_ge_u", var, u),
        ("k_ge_i", k, i),
        ("l_ge_j", l_value, j),
        ("w_ge_u", w, u),
    ]
    return [CheckResult.evaluate(name, lhs, rhs, tol, digest) for name, lhs, rhs in pairs]
