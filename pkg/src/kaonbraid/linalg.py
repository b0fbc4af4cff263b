"""Small-dimension complex linear algebra: tensor products, adjoints,
eigendecomposition-based matrix exponentials and norm-based predicates.

Everything here works on plain numpy arrays of shape (d, d) or (d,) with
d in {2, 4, 8}.  All functions are pure; nothing mutates its inputs.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import DimensionError, NormalityError

ALLOWED_DIMS = (2, 4, 8)

#: Tolerance for the normality precondition of matrix_exponential_normal.
NORMALITY_TOL = 1e-10


def as_matrix(m, dim: int | None = None) -> np.ndarray:
    """Validate and return m as a complex square matrix of an allowed dimension."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in ALLOWED_DIMS:
        raise DimensionError(f"unsupported dimension {a.shape[0]}; allowed: {ALLOWED_DIMS}")
    if dim is not None and a.shape[0] != dim:
        raise DimensionError(f"expected dimension {dim}, got {a.shape[0]}")
    if not np.isfinite(a).all():
        raise DimensionError("matrix contains non-finite entries")
    return a


def as_vector(v, dim: int | None = None) -> np.ndarray:
    """Validate and return v as a complex vector of an allowed dimension."""
    a = np.asarray(v, dtype=complex).reshape(-1)
    if a.shape[0] not in ALLOWED_DIMS:
        raise DimensionError(f"unsupported vector dimension {a.shape[0]}")
    if dim is not None and a.shape[0] != dim:
        raise DimensionError(f"expected dimension {dim}, got {a.shape[0]}")
    if not np.isfinite(a).all():
        raise DimensionError("vector contains non-finite entries")
    return a


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def frobenius(m) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(m, dtype=complex)))


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two matrices; the product dimension must be 4 or 8."""
    a = as_matrix(a)
    b = as_matrix(b)
    out_dim = a.shape[0] * b.shape[0]
    if out_dim not in (4, 8):
        raise DimensionError(
            f"tensor product of dims {a.shape[0]} and {b.shape[0]} gives "
            f"unsupported dimension {out_dim}"
        )
    return np.kron(a, b)


def matrix_exponential_normal(m) -> np.ndarray:
    """exp(m) for a normal matrix, via complex Schur decomposition.

    For normal m the Schur form is diagonal, so m = Q diag(w) Q† and
    exp(m) = Q diag(e^w) Q†.  The unitary conjugation keeps anti-Hermitian
    generators mapping to unitaries at full precision, and degenerate
    eigenspaces come out orthonormal automatically.

    Raises NormalityError when ||m m† - m† m||_F exceeds the tolerance
    (relative to the squared norm of m).
    """
    m = as_matrix(m)
    md = m.conj().T
    scale = max(frobenius(m) ** 2, 1.0)
    if frobenius(m @ md - md @ m) > NORMALITY_TOL * scale:
        raise NormalityError("matrix exponential requires a normal matrix")
    t, q = scipy.linalg.schur(m, output="complex")
    return q @ np.diag(np.exp(np.diag(t))) @ q.conj().T


def unitarity_residual(m) -> float:
    """||m m† - I||_F."""
    m = as_matrix(m)
    return frobenius(m @ m.conj().T - np.eye(m.shape[0]))


def is_unitary(m, tol: float = 1e-12) -> tuple[bool, float]:
    """Predicate plus residual: (||m m† - I||_F <= tol, residual)."""
    r = unitarity_residual(m)
    return r <= tol, r


def hermiticity_residual(m) -> float:
    """||m - m†||_F."""
    m = as_matrix(m)
    return frobenius(m - m.conj().T)


def is_hermitian(m, tol: float = 1e-12) -> tuple[bool, float]:
    """Predicate plus residual: (||m - m†||_F <= tol, residual)."""
    r = hermiticity_residual(m)
    return r <= tol, r
