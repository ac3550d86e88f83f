"""Unit tests for custom exceptions."""

import pytest

from skewlab.exc import (
    BadRank,
    BadTrace,
    DimensionMismatch,
    DimensionTooSmall,
    InvalidDensity,
    InvalidParams,
    MatrixFormatError,
    NotHermitian,
    NotPositive,
    NumericalInconsistency,
    ParamOutOfRange,
    ParamsOutsideLemmaDomain,
    ParamsOutsideTheoremDomain,
    SkewlabError,
)


class TestInvalidDensity:
    """Test cases for the InvalidDensity hierarchy."""

    @pytest.mark.parametrize(
        "exc",
        [
            NotHermitian(1e-3, 1e-10),
            NotPositive(-0.2, 1e-10),
            BadTrace(0.9 + 0j, 1e-10),
            DimensionTooSmall(1),
        ],
    )
    def test_subclasses_are_invalid_density(self, exc):
        """Test every validation failure is an InvalidDensity and a SkewlabError."""
        assert isinstance(exc, InvalidDensity)
        assert isinstance(exc, SkewlabError)

    def test_not_hermitian_attributes(self):
        """Test NotHermitian keeps the asymmetry and tolerance."""
        exc = NotHermitian(1e-3, 1e-10)
        assert exc.asymmetry == 1e-3
        assert exc.tolerance == 1e-10
        assert "not Hermitian" in str(exc)

    def test_not_positive_attributes(self):
        """Test NotPositive keeps the offending eigenvalue."""
        exc = NotPositive(-0.2, 1e-10)
        assert exc.eigenvalue == -0.2
        assert "positive semidefinite" in str(exc)

    def test_bad_trace_message(self):
        """Test BadTrace names the trace."""
        exc = BadTrace(0.9 + 0j, 1e-10)
        assert exc.trace == 0.9
        assert "0.9" in str(exc)

    def test_dimension_too_small(self):
        """Test DimensionTooSmall keeps the dimension."""
        exc = DimensionTooSmall(1)
        assert exc.dim == 1
        assert "d >= 2" in str(exc)


class TestMatrixFormatError:
    """Test cases for MatrixFormatError."""

    def test_message_includes_source(self):
        """Test the source prefixes the message."""
        exc = MatrixFormatError("ragged rows", "state.json")
        assert exc.reason == "ragged rows"
        assert exc.source == "state.json"
        assert str(exc) == "state.json: ragged rows"

    def test_message_without_source(self):
        """Test the message is the bare reason without a source."""
        assert str(MatrixFormatError("ragged rows")) == "ragged rows"


class TestOtherErrors:
    """Test cases for the remaining SkewlabError subclasses."""

    def test_dimension_mismatch(self):
        """Test DimensionMismatch keeps both dimensions."""
        exc = DimensionMismatch(4, 2)
        assert (exc.expected, exc.actual, exc.what) == (4, 2, "operator")
        assert "expected 4" in str(exc)

    def test_invalid_params(self):
        """Test InvalidParams keeps the exponents."""
        exc = InvalidParams(0.7, 0.6)
        assert (exc.alpha, exc.beta) == (0.7, 0.6)
        assert "alpha + beta <= 1" in str(exc)

    def test_numerical_inconsistency(self):
        """Test NumericalInconsistency keeps both values and the detail."""
        exc = NumericalInconsistency("i", 1.0, 2.0, "forms disagree")
        assert exc.quantity == "i"
        assert exc.first == 1.0
        assert exc.second == 2.0
        assert "forms disagree" in str(exc)

    def test_lemma_domain(self):
        """Test ParamsOutsideLemmaDomain names the lemma."""
        exc = ParamsOutsideLemmaDomain("lemma2", "x must be >= 0")
        assert exc.lemma == "lemma2"
        assert str(exc) == "lemma2: x must be >= 0"

    def test_theorem_domain(self):
        """Test ParamsOutsideTheoremDomain names the violated condition."""
        exc = ParamsOutsideTheoremDomain("theorem1", 0.2, 0.5, "beta <= alpha")
        assert exc.condition == "beta <= alpha"
        assert "theorem1 requires beta <= alpha" in str(exc)

    def test_param_out_of_range(self):
        """Test ParamOutOfRange names the family."""
        exc = ParamOutOfRange("werner", 1.5)
        assert exc.family == "werner"
        assert "outside [0, 1]" in str(exc)

    def test_bad_rank(self):
        """Test BadRank keeps the rank and dimension."""
        exc = BadRank(5, 4)
        assert (exc.rank, exc.dim) == (5, 4)
        assert isinstance(exc, SkewlabError)
