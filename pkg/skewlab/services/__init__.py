"""Services package initialization."""

from skewlab.services.matrix_io import MatrixExporter, MatrixImporter
from skewlab.services.sweeps import SweepService
from skewlab.services.verification import VerificationService

__all__ = [
    "MatrixExporter",
    "MatrixImporter",
    "SweepService",
    "VerificationService",
]
