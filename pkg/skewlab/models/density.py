from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

import numpy as np
from scipy import linalg

from skewlab.exc import (
    BadTrace,
    DimensionTooSmall,
    MatrixFormatError,
    NotHermitian,
    NotPositive,
)
from skewlab.settings import get_tolerances

if TYPE_CHECKING:
    import numpy.typing as npt

    from skewlab.settings import Tolerances
    from skewlab.types import ComplexMatrix, RealVector

logger = logging.getLogger(__name__)

#: Components below this magnitude are skipped when fixing eigenvector phases
PHASE_CUTOFF: Final[float] = 1e-12


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """
    A validated density operator with its cached spectral decomposition.

    Instances are immutable: the arrays are read-only, so a single state can be
    shared between worker threads.  Build them with :meth:`create`.
    """

    # The symmetrized, unit-trace matrix
    matrix: ComplexMatrix
    # Eigenvalues in descending order, clamped to be nonnegative, summing to 1
    eigenvalues: RealVector
    # Unitary whose columns are the eigenvectors, in the order of eigenvalues
    eigenvectors: ComplexMatrix

    @classmethod
    def create(
        cls,
        raw: npt.ArrayLike,
        tolerances: Tolerances | None = None,
    ) -> DensityOperator:
        """
        Validate ``raw`` and build a density operator from it.

        The matrix is symmetrized as ``(rho + rho^dagger) / 2``, eigenvalues in
        ``[-tol, 0)`` are clamped to zero and the spectrum is renormalized to
        sum to exactly 1.  Eigenvalues are sorted in descending order and each
        eigenvector is rotated so that its first non-negligible component is
        real and nonnegative.

        Args:
            raw: A square complex matrix
            tolerances: Validation tolerances; the configured ones if None

        Raises:
            MatrixFormatError: ``raw`` is not a finite square matrix
            DimensionTooSmall: the matrix is smaller than 2x2
            NotHermitian: ``max|rho - rho^dagger|`` exceeds the tolerance
            BadTrace: ``|Tr(rho) - 1|`` exceeds the tolerance
            NotPositive: an eigenvalue is below ``-tol``

        Returns:
            The validated density operator

        """
        tol = tolerances or get_tolerances()
        try:
            matrix = np.array(raw, dtype=np.complex128)
        except (TypeError, ValueError) as e:
            msg = f"not a numeric matrix: {e}"
            raise MatrixFormatError(msg) from e
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:  # noqa: PLR2004
            msg = f"expected a square matrix, got shape {matrix.shape}"
            raise MatrixFormatError(msg)
        dim = matrix.shape[0]
        if dim < 2:  # noqa: PLR2004
            raise DimensionTooSmall(dim)
        if not np.all(np.isfinite(matrix)):
            msg = "matrix has non-finite entries"
            raise MatrixFormatError(msg)

        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T)))
        if asymmetry > tol.hermitian:
            raise NotHermitian(asymmetry, tol.hermitian)
        matrix = (matrix + matrix.conj().T) / 2

        trace = complex(np.trace(matrix))
        if abs(trace - 1) > tol.trace:
            raise BadTrace(trace, tol.trace)

        eigenvalues, eigenvectors = linalg.eigh(matrix)
        eigenvalues = np.ascontiguousarray(eigenvalues[::-1])
        eigenvectors = np.ascontiguousarray(eigenvectors[:, ::-1])

        smallest = float(eigenvalues[-1])
        if smallest < -tol.negative_eigenvalue:
            raise NotPositive(smallest, tol.negative_eigenvalue)
        if smallest < 0:
            logger.debug(
                f"Clamping {int(np.sum(eigenvalues < 0))} eigenvalue(s) "
                f"down to {smallest:.3e} to zero"
            )
            eigenvalues = np.where(eigenvalues < 0, 0.0, eigenvalues)
        total = float(np.sum(eigenvalues))
        if total != 1.0:
            logger.debug(f"Renormalizing spectrum with sum {total!r}")
        eigenvalues = eigenvalues / total
        matrix = matrix / trace.real

        for column in range(dim):
            vector = eigenvectors[:, column]
            leading = np.flatnonzero(np.abs(vector) > PHASE_CUTOFF)
            if leading.size:
                pivot = vector[leading[0]]
                eigenvectors[:, column] = vector * (abs(pivot) / pivot)

        return cls(
            matrix=_readonly(matrix),
            eigenvalues=_readonly(eigenvalues),
            eigenvectors=_readonly(eigenvectors),
        )

    @property
    def dim(self) -> int:
        """The Hilbert space dimension."""
        return int(self.matrix.shape[0])

    @property
    def rank(self) -> int:
        """The number of strictly positive eigenvalues."""
        return int(np.count_nonzero(self.eigenvalues > 0))

    def eigenvalue_powers(self, t: float) -> RealVector:
        """
        Return ``lambda_m ** t`` for every eigenvalue, with ``0 ** 0 == 1``.

        Args:
            t: The exponent

        Returns:
            The powers, in eigenvalue order

        """
        return np.power(self.eigenvalues, t)

    def power(self, t: float) -> ComplexMatrix:
        """
        Return the matrix power ``rho ** t`` from the spectral decomposition.

        Args:
            t: The exponent

        Returns:
            ``sum_m lambda_m**t |psi_m><psi_m|``; ``rho ** 0`` is the identity

        """
        result = (self.eigenvectors * self.eigenvalue_powers(t)) @ (
            self.eigenvectors.conj().T
        )
        return (result + result.conj().T) / 2

    def expectation(self, operator: ComplexMatrix) -> complex:
        """
        Return ``Tr(rho X)``.

        Args:
            operator: The matrix ``X``

        Returns:
            The expectation value

        """
        return complex(np.einsum("ij,ji->", self.matrix, operator))

    def to_eigenbasis(self, operator: ComplexMatrix) -> ComplexMatrix:
        """
        Rotate ``X`` into the eigenbasis: ``x_mn = <psi_m|X|psi_n>``.

        Args:
            operator: The matrix ``X``

        Returns:
            The matrix elements ``x_mn``

        """
        return self.eigenvectors.conj().T @ operator @ self.eigenvectors

    def from_eigenbasis(self, elements: ComplexMatrix) -> ComplexMatrix:
        """
        Inverse of :meth:`to_eigenbasis`.

        Args:
            elements: Matrix elements in the eigenbasis

        Returns:
            The operator in the computational basis

        """
        return self.eigenvectors @ elements @ self.eigenvectors.conj().T
