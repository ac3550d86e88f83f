"""Unit tests for utility functions."""

from datetime import datetime

import numpy as np
import pytest

from skewlab.utils import digest_inputs, format_float, parse_int_list, utc_now_iso


class TestUtcNowIso:
    """Test cases for utc_now_iso()."""

    def test_returns_utc_iso_string(self):
        """Test the timestamp parses and carries a UTC offset."""
        result = utc_now_iso()
        assert result.endswith("+00:00")
        assert isinstance(datetime.fromisoformat(result), datetime)


class TestFormatFloat:
    """Test cases for format_float()."""

    def test_uses_seventeen_significant_digits(self):
        """Test floats round-trip exactly."""
        assert format_float(0.1) == "0.10000000000000001"
        assert float(format_float(1 / 3)) == 1 / 3

    def test_integral_values(self):
        """Test integral floats carry no decimal point."""
        assert format_float(0.0) == "0"
        assert format_float(1.0) == "1"

    def test_none_is_empty(self):
        """Test None becomes an empty field."""
        assert format_float(None) == ""

    def test_numpy_scalars(self):
        """Test numpy scalars format like floats."""
        assert format_float(np.float64(0.25)) == "0.25"


class TestDigestInputs:
    """Test cases for digest_inputs()."""

    def test_is_deterministic(self):
        """Test equal inputs give equal digests."""
        matrix = np.eye(2, dtype=complex)
        assert digest_inputs(matrix, 0.5) == digest_inputs(matrix.copy(), 0.5)
        assert len(digest_inputs(matrix)) == 16

    def test_distinguishes_values(self):
        """Test different scalars or arrays change the digest."""
        matrix = np.eye(2, dtype=complex)
        assert digest_inputs(matrix, 0.5) != digest_inputs(matrix, 0.25)
        assert digest_inputs(matrix) != digest_inputs(2 * matrix)

    def test_distinguishes_shapes(self):
        """Test arrays with equal bytes but different shapes differ."""
        flat = np.zeros(4)
        assert digest_inputs(flat) != digest_inputs(flat.reshape(2, 2))

    def test_separates_parts(self):
        """Test the part boundaries contribute to the digest."""
        assert digest_inputs("ab", "c") != digest_inputs("a", "bc")


class TestParseIntList:
    """Test cases for parse_int_list()."""

    def test_parses_list(self):
        """Test a comma separated list is parsed in order."""
        assert parse_int_list("2,3,4") == [2, 3, 4]

    def test_ignores_whitespace_and_trailing_comma(self):
        """Test spaces and empty items are skipped."""
        assert parse_int_list(" 2, 5 ,") == [2, 5]

    def test_rejects_empty(self):
        """Test an empty list raises ValueError."""
        with pytest.raises(ValueError, match="Empty integer list"):
            parse_int_list(" , ")

    def test_rejects_non_integers(self):
        """Test a non-integer item raises ValueError."""
        with pytest.raises(ValueError):  # noqa: PT011
            parse_int_list("2,x")
