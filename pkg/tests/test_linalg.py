import numpy as np
import pytest
import scipy.linalg

from kaonbraid.errors import DimensionError, NormalityError
from kaonbraid.linalg import (
    dagger,
    is_hermitian,
    is_unitary,
    matrix_exponential_normal,
    tensor_product,
)

RNG = np.random.default_rng(42)


def random_complex(dim):
    return RNG.normal(size=(dim, dim)) + 1j * RNG.normal(size=(dim, dim))


def random_anti_hermitian(dim):
    m = random_complex(dim)
    return (m - m.conj().T) / 2.0


class TestTensorProduct:
    def test_identity(self):
        assert np.array_equal(tensor_product(np.eye(2), np.eye(2)), np.eye(4))

    def test_diagonal(self):
        d = np.diag([1.0, -1.0])
        expected = np.diag([1.0, -1.0, -1.0, 1.0])
        assert np.array_equal(tensor_product(d, d), expected)

    def test_mixed_product_property(self):
        for _ in range(20):
            a, b, c, d = (random_complex(2) for _ in range(4))
            lhs = tensor_product(a, b) @ tensor_product(c, d)
            rhs = tensor_product(a @ c, b @ d)
            assert np.linalg.norm(lhs - rhs) < 1e-12

    def test_acts_on_product_vectors(self):
        for _ in range(10):
            a, b = random_complex(2), random_complex(2)
            u = RNG.normal(size=2) + 1j * RNG.normal(size=2)
            v = RNG.normal(size=2) + 1j * RNG.normal(size=2)
            lhs = tensor_product(a, b) @ np.kron(u, v)
            rhs = np.kron(a @ u, b @ v)
            assert np.linalg.norm(lhs - rhs) < 1e-12

    def test_bilinear(self):
        a, b, c = random_complex(2), random_complex(2), random_complex(2)
        lhs = tensor_product(a + 2.0 * b, c)
        rhs = tensor_product(a, c) + 2.0 * tensor_product(b, c)
        assert np.linalg.norm(lhs - rhs) < 1e-12

    def test_unsupported_product_dim(self):
        with pytest.raises(DimensionError):
            tensor_product(np.eye(4), np.eye(4))
        with pytest.raises(DimensionError):
            tensor_product(np.eye(8), np.eye(2))


class TestMatrixExponential:
    def test_exp_zero(self):
        assert np.allclose(matrix_exponential_normal(np.zeros((4, 4))), np.eye(4))

    def test_exp_scalar(self):
        result = matrix_exponential_normal(1j * np.pi * np.eye(4))
        assert np.linalg.norm(result + np.eye(4)) < 1e-12

    def test_spectrum_mapping(self):
        # Hermitian with spectrum {+1/2, -1/2}: exp(-i theta H) has eigenvalues
        # e^{-+ i theta / 2}
        h = np.array([[0, 0.5], [0.5, 0]], dtype=complex)
        theta = 0.83
        result = matrix_exponential_normal(-1j * theta * h)
        ev = np.sort(np.angle(np.linalg.eigvals(result)))
        expected = np.sort([-theta / 2, theta / 2])
        assert np.max(np.abs(ev - expected)) < 1e-12

    def test_anti_hermitian_gives_unitary(self):
        for dim in (2, 4, 8):
            m = random_anti_hermitian(dim)
            ok, res = is_unitary(matrix_exponential_normal(m), 1e-12)
            assert ok, res

    def test_inverse_pairing(self):
        for _ in range(10):
            m = random_anti_hermitian(4)
            prod = matrix_exponential_normal(m) @ matrix_exponential_normal(-m)
            assert np.linalg.norm(prod - np.eye(4)) < 1e-10

    def test_against_scipy_expm(self):
        # independent oracle: Pade scaling-and-squaring
        for dim in (2, 4, 8):
            m = random_anti_hermitian(dim)
            diff = matrix_exponential_normal(m) - scipy.linalg.expm(m)
            assert np.linalg.norm(diff) < 1e-12

    def test_rejects_non_normal(self):
        m = np.array([[0, 1], [0, 0]], dtype=complex)
        with pytest.raises(NormalityError):
            matrix_exponential_normal(m)


class TestPredicates:
    def test_identity_unitary(self):
        ok, res = is_unitary(np.eye(4), 1e-12)
        assert ok and res == 0.0

    def test_scaled_identity_not_unitary(self):
        ok, res = is_unitary(2.0 * np.eye(4), 1e-12)
        assert not ok
        assert res == pytest.approx(6.0)  # ||4I - I||_F = 3 * 2

    def test_identity_hermitian(self):
        ok, _ = is_hermitian(np.eye(4), 1e-12)
        assert ok

    def test_anti_hermitian_not_hermitian(self):
        ok, res = is_hermitian(1j * np.eye(4), 1e-12)
        assert not ok
        assert res == pytest.approx(4.0)  # ||2i I||_F

    def test_rejects_nonfinite(self):
        m = np.eye(4, dtype=complex)
        m[0, 0] = np.nan
        with pytest.raises(DimensionError):
            is_unitary(m)


def test_adjoint_involution_and_antihomomorphism():
    for _ in range(10):
        a, b = random_complex(4), random_complex(4)
        assert np.array_equal(dagger(dagger(a)), a)
        assert np.linalg.norm(dagger(a @ b) - dagger(b) @ dagger(a)) < 1e-12
