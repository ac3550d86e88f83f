"""
Example states and operators, and seeded random instance generators.

Random streams use numpy's PCG64 bit generator seeded from
``SeedSequence([seed, *key])``, so every ``(seed, key)`` pair names an
independent, reproducible stream regardless of how work is scheduled.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING, Final, Literal

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

from skewlab.exc import BadRank
from skewlab.models import DensityOperator, FamilyParam, HSOperator, SkewParams
from skewlab.types import Family

if TYPE_CHECKING:
    from skewlab.types import ComplexMatrix

#: Parameter domains random exponent pairs can be drawn from
ParamDomain = Literal["simplex", "theorem1", "theorem2"]

#: Non-Hermitian 4x4 test operators, rows in the |00>, |01>, |10>, |11> basis
OPERATOR_A: Final[tuple[tuple[complex, ...], ...]] = (
    (0, 1, 0, -1j),
    (1, 0, 1j, 0),
    (1, 0, 1, 0),
    (0, -1, 0, 1),
)
OPERATOR_B: Final[tuple[tuple[complex, ...], ...]] = (
    (1, 0, 1, 0),
    (0, 1, 0, -1),
    (0, 1, 0, -1j),
    (1, 0, 1j, 0),
)

SeedLike = int | Sequence[int] | Generator | None


def stream_generator(seed: int, *key: int) -> Generator:
    """
    Return the PCG64 generator for stream ``key`` of ``seed``.

    Args:
        seed: The run seed
        *key: Stream identifiers, e.g. ``(dim, sample_index)``

    Returns:
        A fresh generator

    """
    return Generator(PCG64(SeedSequence([seed, *key])))


def _get_generator(seed: SeedLike) -> Generator:
    """
    Obtain a random generator from a seed or generator.

    A generator is returned as is; an int or a sequence of ints seeds a
    :func:`stream_generator`; None gives an unseeded generator.
    """
    if isinstance(seed, Generator):
        return seed
    if seed is None:
        return Generator(PCG64())
    if isinstance(seed, int):
        return stream_generator(seed)
    return stream_generator(*seed)


def _randnz(shape: tuple[int, ...], generator: Generator) -> ComplexMatrix:
    """Standard complex normal variates with unit variance per entry."""
    real = generator.standard_normal(shape)
    imag = generator.standard_normal(shape)
    return (real + 1j * imag) * np.sqrt(0.5)


def werner(p: float) -> DensityOperator:
    """
    The two-qubit Werner state with parameter ``p``.

    Its eigenvalues are ``p/3`` (three times) and ``1 - p``; it is
    separable for ``p <= 1/3`` and equals ``I/4`` at ``p = 3/4``.

    Args:
        p: The family parameter

    Raises:
        ParamOutOfRange: ``p`` is outside ``[0, 1]``

    Returns:
        The state

    """
    FamilyParam(Family.WERNER, p)
    outer = p / 3
    diagonal = (3 - 2 * p) / 6
    coherence = (4 * p - 3) / 6
    return DensityOperator.create(
        [
            [outer, 0, 0, 0],
            [0, diagonal, coherence, 0],
            [0, coherence, diagonal, 0],
            [0, 0, 0, outer],
        ]
    )


def isotropic(fidelity: float) -> DensityOperator:
    """
    The two-qubit isotropic state with fidelity ``F``.

    Its eigenvalues are ``(1 - F)/3`` (three times) and ``F``; it is
    separable for ``F <= 1/2`` and equals ``I/4`` at ``F = 1/4``.

    Args:
        fidelity: The family parameter ``F``

    Raises:
        ParamOutOfRange: ``F`` is outside ``[0, 1]``

    Returns:
        The state

    """
    FamilyParam(Family.ISOTROPIC, fidelity)
    corner = (2 * fidelity + 1) / 6
    coherence = (4 * fidelity - 1) / 6
    middle = (1 - fidelity) / 3
    return DensityOperator.create(
        [
            [corner, 0, 0, coherence],
            [0, middle, 0, 0],
            [0, 0, middle, 0],
            [coherence, 0, 0, corner],
        ]
    )


def family_state(family: Family | str, value: float) -> DensityOperator:
    """
    Build a member of a state family by name.

    Args:
        family: ``"werner"`` or ``"isotropic"``
        value: The family parameter

    Raises:
        ValueError: unknown family

    Returns:
        The state

    """
    match Family(family):
        case Family.WERNER:
            return werner(value)
        case Family.ISOTROPIC:
            return isotropic(value)


def example_operators() -> tuple[HSOperator, HSOperator]:
    """
    The fixed non-Hermitian 4x4 operators used with the state families.

    Returns:
        The operators ``(A, B)``

    """
    return HSOperator.create(OPERATOR_A), HSOperator.create(OPERATOR_B)


def random_density(
    dim: int, rank: int | None = None, seed: SeedLike = None
) -> DensityOperator:
    """
    A random density operator ``G G^+ / Tr(G G^+)`` with ``G`` a complex
    Gaussian ``dim x rank`` matrix.

    Args:
        dim: The dimension
        rank: The rank of the state; ``dim`` if None
        seed: Seed, stream key or generator

    Raises:
        BadRank: ``rank`` is not in ``[1, dim]``

    Returns:
        The state

    """
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise BadRank(rank, dim)
    ginibre = _randnz((dim, rank), _get_generator(seed))
    gram = ginibre @ ginibre.conj().T
    gram = (gram + gram.conj().T) / 2
    return DensityOperator.create(gram / np.trace(gram).real)


def random_operator(dim: int, seed: SeedLike = None) -> HSOperator:
    """
    A random operator with complex Gaussian entries and unit Frobenius norm.

    Args:
        dim: The dimension
        seed: Seed, stream key or generator

    Returns:
        The operator

    """
    matrix = _randnz((dim, dim), _get_generator(seed))
    return HSOperator.create(matrix / np.linalg.norm(matrix))


def random_params(domain: ParamDomain = "simplex", seed: SeedLike = None) -> SkewParams:
    """
    Draw an exponent pair uniformly in ``alpha`` and then in ``beta``.

    - ``simplex``: ``beta <= 1 - alpha``
    - ``theorem1``: ``beta <= min(alpha, 1 - alpha)``
    - ``theorem2``: ``beta <= min(4 alpha, 1 - alpha)``

    Args:
        domain: Which domain to draw from
        seed: Seed, stream key or generator

    Raises:
        ValueError: unknown domain

    Returns:
        The exponent pair

    """
    generator = _get_generator(seed)
    alpha = float(generator.uniform(0.0, 1.0))
    match domain:
        case "simplex":
            ceiling = 1.0 - alpha
        case "theorem1":
            ceiling = min(alpha, 1.0 - alpha)
        case "theorem2":
            ceiling = min(4 * alpha, 1.0 - alpha)
        case _:
            msg = f"Unknown parameter domain {domain!r}"
            raise ValueError(msg)
    beta = float(generator.uniform(0.0, 1.0)) * ceiling
    return SkewParams(alpha, beta)
