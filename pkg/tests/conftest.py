"""Shared pytest fixtures and test helpers for skewlab tests."""

from functools import cache

import numpy as np
import pytest

from skewlab.factory import (
    example_operators,
    random_density,
    random_operator,
    random_params,
    stream_generator,
)
from skewlab.models import DensityOperator, HSOperator, SkewParams

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Seed of the shared random corpus
CORPUS_SEED = 20240601


@pytest.fixture
def sigma_x():
    """The Pauli X matrix."""
    return HSOperator.create(SIGMA_X)


@pytest.fixture
def qubit_mixed():
    """The maximally mixed qubit state I/2."""
    return DensityOperator.create(np.eye(2) / 2)


@pytest.fixture
def qubit_zero():
    """The pure state |0><0|."""
    return DensityOperator.create(np.diag([1.0, 0.0]))


@pytest.fixture
def qubit_biased():
    """The diagonal state diag(3/4, 1/4)."""
    return DensityOperator.create(np.diag([0.75, 0.25]))


@pytest.fixture
def two_qubit_mixed():
    """The maximally mixed two-qubit state I/4."""
    return DensityOperator.create(np.eye(4) / 4)


@pytest.fixture
def operators():
    """The fixed non-Hermitian 4x4 operator pair."""
    return example_operators()


# Test helper functions (not fixtures, but available for import)


@cache
def random_corpus(dim, count, seed=CORPUS_SEED):
    """
    Helper to build a reproducible corpus of random inputs.

    Args:
        dim: Hilbert space dimension
        count: Number of samples
        seed: Run seed; sample ``i`` uses the stream ``(seed, dim, i)``

    Returns:
        Tuple of ``(rho, a, b, params)`` with params on the full simplex
    """
    corpus = []
    for index in range(count):
        generator = stream_generator(seed, dim, index)
        rank = int(generator.integers(1, dim + 1))
        corpus.append(
            (
                random_density(dim, rank, generator),
                random_operator(dim, generator),
                random_operator(dim, generator),
                random_params("simplex", generator),
            )
        )
    return tuple(corpus)


def reference_power(matrix, t):
    """
    Helper computing ``rho ** t`` with numpy's own eigensolver.

    Args:
        matrix: A Hermitian positive semidefinite matrix
        t: The exponent; ``0 ** 0`` is taken as 1

    Returns:
        The matrix power
    """
    values, vectors = np.linalg.eigh(np.asarray(matrix, dtype=complex))
    values = np.clip(values, 0.0, None)
    return (vectors * np.power(values, t)) @ vectors.conj().T


def wy_skew(rho, a):
    """Helper for the Wigner-Yanase skew information -Tr([rho^1/2, A]^2)/2."""
    root = reference_power(rho, 0.5)
    comm = root @ a - a @ root
    return float(np.real(-0.5 * np.trace(comm @ comm)))


def wyd_skew(rho, a, alpha):
    """Helper for the Wigner-Yanase-Dyson skew information at exponent alpha."""
    left = reference_power(rho, alpha)
    right = reference_power(rho, 1 - alpha)
    return float(np.real(-0.5 * np.trace((left @ a - a @ left) @ (right @ a - a @ right))))


def weighted_wyd_skew(rho, a, alpha):
    """
    Helper for the modified weighted Wigner-Yanase-Dyson skew information.

    ``-(1/2) Tr([M, A_0^+][M, A_0])`` with ``M = (rho^alpha + rho^(1-alpha))/2``.
    """
    rho = np.asarray(rho, dtype=complex)
    centered = a - np.trace(rho @ a) * np.eye(len(a))
    mean = (reference_power(rho, alpha) + reference_power(rho, 1 - alpha)) / 2
    adjoint = centered.conj().T
    return float(
        np.real(
            -0.5
            * np.trace((mean @ adjoint - adjoint @ mean) @ (mean @ centered - centered @ mean))
        )
    )


def random_hermitian(dim, generator):
    """Helper drawing a random Hermitian matrix."""
    raw = generator.standard_normal((dim, dim)) + 1j * generator.standard_normal((dim, dim))
    return (raw + raw.conj().T) / 2


def params_on_line(alpha):
    """Helper returning the exponent pair ``(alpha, 1 - alpha)``."""
    return SkewParams(alpha, 1.0 - alpha)
