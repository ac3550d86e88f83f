from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from skewlab.exc import MatrixFormatError

if TYPE_CHECKING:
    import numpy.typing as npt

    from skewlab.types import ComplexMatrix


@dataclass(frozen=True, eq=False)
class HSOperator:
    """
    An arbitrary square complex matrix, not necessarily Hermitian.

    In finite dimension every operator is Hilbert-Schmidt, so the only checks
    are shape and finiteness.
    """

    matrix: ComplexMatrix

    @classmethod
    def create(cls, raw: npt.ArrayLike) -> HSOperator:
        """
        Build an operator from anything numpy can turn into a square matrix.

        Args:
            raw: The matrix entries

        Raises:
            MatrixFormatError: ``raw`` is not a finite square matrix

        Returns:
            A new operator holding a read-only copy of the entries

        """
        try:
            matrix = np.array(raw, dtype=np.complex128)
        except (TypeError, ValueError) as e:
            msg = f"not a numeric matrix: {e}"
            raise MatrixFormatError(msg) from e
        square = matrix.ndim == 2 and matrix.shape[0] == matrix.shape[1]  # noqa: PLR2004
        if not square or not matrix.size:
            msg = f"expected a non-empty square matrix, got shape {matrix.shape}"
            raise MatrixFormatError(msg)
        if not np.all(np.isfinite(matrix)):
            msg = "matrix has non-finite entries"
            raise MatrixFormatError(msg)
        matrix.setflags(write=False)
        return cls(matrix=matrix)

    @classmethod
    def coerce(cls, value: HSOperator | npt.ArrayLike) -> HSOperator:
        """
        Return ``value`` unchanged if it already is an operator, else wrap it.

        Args:
            value: An operator or raw matrix entries

        Returns:
            An operator

        """
        if isinstance(value, HSOperator):
            return value
        return cls.create(value)

    @property
    def dim(self) -> int:
        """The Hilbert space dimension."""
        return int(self.matrix.shape[0])

    def adjoint(self) -> HSOperator:
        """The conjugate transpose ``A^dagger``."""
        return HSOperator.create(self.matrix.conj().T)

    def is_hermitian(self, tolerance: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T)) <= tolerance)
