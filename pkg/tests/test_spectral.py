"""Unit tests for the spectral kernels."""

import numpy as np
import pytest

from skewlab.exc import DimensionMismatch
from skewlab.factory import example_operators, random_density, werner
from skewlab.models import DensityOperator, HSOperator
from skewlab.spectral import (
    anticommutator,
    center,
    check_dimension,
    commutator,
    eigenbasis_elements,
    matrix_power,
    validate_density,
)
from tests.conftest import SIGMA_X, SIGMA_Y, SIGMA_Z, random_corpus, reference_power


class TestValidateDensity:
    """Test cases for validate_density()."""

    def test_passes_states_through(self, qubit_mixed):
        """Test an existing state is returned unchanged."""
        assert validate_density(qubit_mixed) is qubit_mixed

    def test_builds_from_array(self):
        """Test a raw array is validated into a state."""
        rho = validate_density(np.diag([0.25, 0.75]))
        assert isinstance(rho, DensityOperator)
        np.testing.assert_allclose(rho.eigenvalues, [0.75, 0.25])


class TestMatrixPower:
    """Test cases for matrix_power()."""

    def test_square_root(self):
        """Test the square root of a diagonal state."""
        rho = DensityOperator.create(np.diag([0.25, 0.75]))
        np.testing.assert_allclose(
            matrix_power(rho, 0.5), np.diag([0.5, np.sqrt(3) / 2]), atol=1e-15
        )

    def test_first_power(self):
        """Test rho ** 1 is rho itself."""
        for rho, _, _, _ in random_corpus(4, 20):
            np.testing.assert_allclose(matrix_power(rho, 1.0), rho.matrix, atol=1e-14)

    def test_zero_power_of_pure_state(self, qubit_zero):
        """Test rho ** 0 is the identity, not the support projector."""
        np.testing.assert_allclose(matrix_power(qubit_zero, 0.0), np.eye(2))

    def test_matches_reference(self):
        """Test powers of full rank states agree with numpy's eigensolver."""
        for index in range(30):
            rho = random_density(5, seed=index)
            t = 0.05 + 0.9 * index / 29
            np.testing.assert_allclose(
                matrix_power(rho, t),
                reference_power(rho.matrix, t),
                atol=1e-9,
            )

    def test_exponents_add(self):
        """Test rho^s rho^t == rho^(s+t) for a full rank state."""
        rho = random_density(4, seed=7)
        product = matrix_power(rho, 0.3) @ matrix_power(rho, 0.45)
        np.testing.assert_allclose(product, matrix_power(rho, 0.75), atol=1e-12)

    def test_is_hermitian(self):
        """Test the result is exactly Hermitian."""
        rho = random_density(3, seed=11)
        power = matrix_power(rho, 0.37)
        np.testing.assert_array_equal(power, power.conj().T)

    @pytest.mark.parametrize("t", [-0.1, 1.5])
    def test_out_of_range(self, qubit_mixed, t):
        """Test exponents outside [0, 1] are rejected."""
        with pytest.raises(ValueError, match="outside"):
            matrix_power(qubit_mixed, t)

    def test_round_off_at_the_ends(self, qubit_biased):
        """Test exponents a hair outside [0, 1] are clamped."""
        np.testing.assert_allclose(
            matrix_power(qubit_biased, 1 + 1e-13), qubit_biased.matrix, atol=1e-15
        )


class TestCenter:
    """Test cases for center()."""

    def test_identity_centers_to_zero(self):
        """Test the identity has no fluctuation."""
        for rho, _, _, _ in random_corpus(3, 10):
            np.testing.assert_allclose(center(rho, np.eye(3)).matrix, 0, atol=1e-14)

    def test_zero_expectation(self):
        """Test Tr(rho A_0) vanishes."""
        for rho, a, _, _ in random_corpus(4, 20):
            assert abs(rho.expectation(center(rho, a).matrix)) < 1e-14

    def test_idempotent(self):
        """Test centering twice is centering once."""
        for rho, a, _, _ in random_corpus(3, 10):
            once = center(rho, a)
            np.testing.assert_allclose(center(rho, once).matrix, once.matrix, atol=1e-14)

    @pytest.mark.parametrize("p", [0.0, 0.3, 0.75, 0.9, 1.0])
    def test_werner_shift(self, p):
        """Test the fixed operator is shifted by 1/2 + i(4p - 3)/6 on a Werner state."""
        a, _ = example_operators()
        shift = 0.5 + 1j * (4 * p - 3) / 6
        np.testing.assert_allclose(
            center(werner(p), a).matrix, a.matrix - shift * np.eye(4), atol=1e-14
        )

    def test_accepts_arrays(self, qubit_biased):
        """Test a raw array is accepted."""
        centered = center(qubit_biased, SIGMA_Z)
        np.testing.assert_allclose(centered.matrix, SIGMA_Z - 0.5 * np.eye(2), atol=1e-15)

    def test_dimension_mismatch(self, qubit_mixed):
        """Test an operator of the wrong size is rejected."""
        with pytest.raises(DimensionMismatch):
            center(qubit_mixed, np.eye(3))


class TestCommutators:
    """Test cases for commutator() and anticommutator()."""

    def test_pauli_commutator(self):
        """Test [X, Y] = 2iZ."""
        np.testing.assert_allclose(commutator(SIGMA_X, SIGMA_Y), 2j * SIGMA_Z)

    def test_pauli_anticommutator(self):
        """Test distinct Pauli matrices anticommute and each squares to I."""
        np.testing.assert_allclose(anticommutator(SIGMA_X, SIGMA_Y), 0)
        np.testing.assert_allclose(anticommutator(SIGMA_X, SIGMA_X), 2 * np.eye(2))

    def test_accepts_operators(self, sigma_x):
        """Test HSOperator operands are unwrapped."""
        np.testing.assert_allclose(commutator(sigma_x, sigma_x), 0)

    def test_dimension_mismatch(self):
        """Test operands of different shapes are rejected."""
        with pytest.raises(DimensionMismatch):
            commutator(SIGMA_X, np.eye(3))
        with pytest.raises(DimensionMismatch):
            anticommutator(np.eye(3), SIGMA_X)


class TestEigenbasisElements:
    """Test cases for eigenbasis_elements() and check_dimension()."""

    def test_diagonal_state(self, qubit_biased, sigma_x):
        """Test a diagonal state leaves the operator unchanged."""
        np.testing.assert_allclose(
            eigenbasis_elements(qubit_biased, sigma_x), SIGMA_X, atol=1e-15
        )

    def test_preserves_norm(self):
        """Test the rotation is unitary."""
        for rho, a, _, _ in random_corpus(5, 10):
            elements = eigenbasis_elements(rho, a)
            assert np.linalg.norm(elements) == pytest.approx(1.0)

    def test_dimension_mismatch(self, qubit_mixed):
        """Test the operator must act on the state's space."""
        with pytest.raises(DimensionMismatch):
            check_dimension(qubit_mixed, HSOperator.create(np.eye(4)))
