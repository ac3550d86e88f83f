from enum import StrEnum
from typing import Literal

import numpy as np
import numpy.typing as npt

#: A dense complex matrix.
ComplexMatrix = npt.NDArray[np.complex128]
#: A dense real vector.
RealVector = npt.NDArray[np.float64]

#: Names of the quantities that :mod:`skewlab.quantities` can evaluate.
QuantityName = Literal["cov", "var", "corr", "c", "i", "j", "u", "k", "l", "w"]

#: Names of the relations recorded in a verification report.
RelationName = Literal[
    "lemma1_product",
    "lemma1_quadratic",
    "lemma2",
    "theorem1",
    "theorem2",
    "corollary1",
    "corollary2",
    "theorem1_cross",
    "theorem2_cross",
    "i_nonnegative",
    "u_ge_i",
    "var_ge_u",
    "k_ge_i",
    "l_ge_j",
    "w_ge_u",
]


class ComputationPath(StrEnum):
    """The two independent ways every quantity can be evaluated."""

    #: Direct matrix products and traces
    TRACE_FORMULA = "trace"
    #: Double sums over eigenvalues and eigenbasis matrix elements
    SPECTRAL_SUM = "spectral"


class Family(StrEnum):
    """One-parameter families of two-qubit states."""

    WERNER = "werner"
    ISOTROPIC = "isotropic"


class BoundComparison(StrEnum):
    """Which of the two uncertainty lower bounds is tighter at an (alpha, beta)."""

    THEOREM1_TIGHTER = "Theorem1Tighter"
    THEOREM2_TIGHTER = "Theorem2Tighter"
    EQUAL = "Equal"
    DOMAINS_DISJOINT = "DomainsDisjoint"
