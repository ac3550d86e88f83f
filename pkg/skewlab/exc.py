from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pathlib import Path


class SkewlabError(Exception):
    """Base class for every error raised by skewlab."""


class InvalidDensity(SkewlabError):  # noqa: N818
    """Exception raised when a matrix is not a valid density operator."""


class NotHermitian(InvalidDensity):  # noqa: N818
    """Exception raised when a candidate density matrix is not Hermitian."""

    def __init__(self, asymmetry: float, tolerance: float):
        self.asymmetry = asymmetry
        self.tolerance = tolerance
        super().__init__(
            f"Matrix is not Hermitian: max|rho - rho^dagger| = {asymmetry:.3e} "
            f"exceeds {tolerance:.1e}"
        )


class NotPositive(InvalidDensity):  # noqa: N818
    """Exception raised when a candidate density matrix has a negative eigenvalue."""

    def __init__(self, eigenvalue: float, tolerance: float):
        self.eigenvalue = eigenvalue
        self.tolerance = tolerance
        super().__init__(
            f"Matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e} "
            f"is below -{tolerance:.1e}"
        )


class BadTrace(InvalidDensity):  # noqa: N818
    """Exception raised when a candidate density matrix does not have unit trace."""

    def __init__(self, trace: complex, tolerance: float):
        self.trace = trace
        self.tolerance = tolerance
        super().__init__(
            f"Matrix trace {trace.real:.12g} differs from 1 by more than "
            f"{tolerance:.1e}"
        )


class DimensionTooSmall(InvalidDensity):  # noqa: N818
    """Exception raised when a density matrix is smaller than 2x2."""

    def __init__(self, dim: int):
        self.dim = dim
        super().__init__(f"Dimension {dim} is too small: d >= 2 is required")


class MatrixFormatError(SkewlabError):  # noqa: N818
    """Exception raised when matrix data is malformed."""

    def __init__(self, reason: str, source: Path | str | None = None):
        self.reason = reason
        self.source = source
        prefix = f"{source!s}: " if source is not None else ""
        super().__init__(f"{prefix}{reason}")


class DimensionMismatch(SkewlabError):  # noqa: N818
    """Exception raised when operands have incompatible dimensions."""

    def __init__(self, expected: int, actual: int, what: str = "operator"):
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(
            f"Dimension mismatch: {what} has dimension {actual}, expected {expected}"
        )


class InvalidParams(SkewlabError):  # noqa: N818
    """Exception raised when (alpha, beta) leave the admissible simplex."""

    def __init__(self, alpha: float, beta: float):
        self.alpha = alpha
        self.beta = beta
        super().__init__(
            f"Invalid exponents alpha={alpha!r}, beta={beta!r}: "
            "require alpha >= 0, beta >= 0, alpha + beta <= 1"
        )


class NumericalInconsistency(SkewlabError):  # noqa: N818
    """Exception raised when two evaluations of the same quantity disagree."""

    def __init__(self, quantity: str, first: complex, second: complex, detail: str):
        self.quantity = quantity
        self.first = first
        self.second = second
        self.detail = detail
        super().__init__(
            f"Numerical inconsistency in {quantity}: {first!r} vs {second!r} ({detail})"
        )


class ParamsOutsideLemmaDomain(SkewlabError):  # noqa: N818
    """Exception raised when a scalar lemma is evaluated outside its hypothesis."""

    def __init__(self, lemma: str, reason: str):
        self.lemma = lemma
        self.reason = reason
        super().__init__(f"{lemma}: {reason}")


class ParamsOutsideTheoremDomain(SkewlabError):  # noqa: N818
    """Exception raised when an uncertainty relation is evaluated outside its hypothesis."""

    def __init__(self, theorem: str, alpha: float, beta: float, condition: str):
        self.theorem = theorem
        self.alpha = alpha
        self.beta = beta
        self.condition = condition
        super().__init__(
            f"{theorem} requires {condition}; got alpha={alpha!r}, beta={beta!r}"
        )


class ParamOutOfRange(SkewlabError):  # noqa: N818
    """Exception raised when a state-family parameter leaves [0, 1]."""

    def __init__(self, family: str, value: float):
        self.family = family
        self.value = value
        super().__init__(f"{family} parameter {value!r} is outside [0, 1]")


class BadRank(SkewlabError):  # noqa: N818
    """Exception raised when a requested random state rank is not in [1, dim]."""

    def __init__(self, rank: int, dim: int):
        self.rank = rank
        self.dim = dim
        super().__init__(f"Rank {rank} is not in [1, {dim}]")
