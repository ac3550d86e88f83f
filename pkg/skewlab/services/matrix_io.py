"""Matrix JSON import/export for states and operators."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from skewlab.exc import MatrixFormatError
from skewlab.models import DensityOperator, HSOperator
from skewlab.spectral import validate_density

if TYPE_CHECKING:
    from skewlab.settings import Tolerances
    from skewlab.types import ComplexMatrix


class MatrixExporter:
    """
    Serializes matrices to the Matrix JSON format.

    The format is an object with an integer ``"dim"`` and two ``dim x dim``
    row-major arrays ``"re"`` and ``"im"`` holding the real and imaginary
    parts.
    """

    @staticmethod
    def to_json(matrix: DensityOperator | HSOperator | ComplexMatrix) -> dict[str, Any]:
        """
        Build the Matrix JSON object for ``matrix``.

        Args:
            matrix: A state, an operator or a square array

        Returns:
            The JSON-serializable object

        """
        if isinstance(matrix, DensityOperator | HSOperator):
            matrix = matrix.matrix
        values = np.asarray(matrix, dtype=np.complex128)
        return {
            "dim": int(values.shape[0]),
            "re": values.real.tolist(),
            "im": values.imag.tolist(),
        }

    def export(
        self, matrix: DensityOperator | HSOperator | ComplexMatrix, filename: Path | str
    ) -> Path:
        """
        Write ``matrix`` as Matrix JSON to ``filename``.

        Args:
            matrix: A state, an operator or a square array
            filename: Where to write

        Raises:
            OSError: the file could not be written

        Returns:
            The path written

        """
        path = Path(filename)
        with path.open("w", encoding="utf-8") as f:
            json.dump(self.to_json(matrix), f, indent=2)
            f.write("\n")
        return path


class MatrixImporter:
    """Parses Matrix JSON into states and operators."""

    def __init__(self, tolerances: Tolerances | None = None) -> None:
        """
        Initialize importer.

        Args:
            tolerances: Density validation tolerances; the configured ones if
                None

        """
        self.tolerances = tolerances

    @staticmethod
    def _part(data: dict[str, Any], key: str, dim: int, source: str | None) -> list:
        rows = data.get(key)
        if not isinstance(rows, list) or len(rows) != dim:
            msg = f'"{key}" must be a list of {dim} rows'
            raise MatrixFormatError(msg, source)
        for index, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != dim:
                msg = f'"{key}" row {index} must have {dim} entries'
                raise MatrixFormatError(msg, source)
            for value in row:
                if isinstance(value, bool) or not isinstance(value, int | float):
                    msg = f'"{key}" row {index} has non-numeric entry {value!r}'
                    raise MatrixFormatError(msg, source)
        return rows

    def from_json(self, data: Any, source: str | None = None) -> ComplexMatrix:
        """
        Convert a parsed Matrix JSON object into a complex array.

        Args:
            data: The parsed JSON value
            source: Where the data came from, for error messages

        Raises:
            MatrixFormatError: missing fields, ragged arrays, non-numeric
                entries or a ``dim`` that does not match the arrays

        Returns:
            The ``dim x dim`` complex matrix

        """
        if not isinstance(data, dict):
            msg = "top-level value must be an object"
            raise MatrixFormatError(msg, source)
        dim = data.get("dim")
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            msg = '"dim" must be a positive integer'
            raise MatrixFormatError(msg, source)
        real = self._part(data, "re", dim, source)
        imag = self._part(data, "im", dim, source)
        return np.asarray(real, dtype=np.float64) + 1j * np.asarray(
            imag, dtype=np.float64
        )

    def read(self, filename: Path | str) -> ComplexMatrix:
        """
        Read a Matrix JSON file.

        Args:
            filename: The file to read

        Raises:
            OSError: the file could not be read
            MatrixFormatError: the file is not valid Matrix JSON

        Returns:
            The complex matrix

        """
        path = Path(filename)
        with path.open(encoding="utf-8") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                msg = f"invalid JSON: {e.msg} at line {e.lineno}"
                raise MatrixFormatError(msg, str(path)) from e
        return self.from_json(data, str(path))

    def read_state(self, filename: Path | str) -> DensityOperator:
        """
        Read and validate a density operator.

        Raises:
            MatrixFormatError: the file is not valid Matrix JSON
            InvalidDensity: the matrix is not a density operator

        """
        return validate_density(self.read(filename), self.tolerances)

    def read_operator(self, filename: Path | str) -> HSOperator:
        """Read an arbitrary operator."""
        return HSOperator.create(self.read(filename))
