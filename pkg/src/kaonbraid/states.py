"""Two-kaon states, Bell structure, entanglement and symmetry operators.

Canonical basis order everywhere: (|KK⟩, |KK̄⟩, |K̄K⟩, |K̄K̄⟩).  Amplitude
vectors (a0, a1, a2, a3) refer to this order; conventions that label the
middle components the other way round are translated at the boundary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .braid import BraidSpec, unitary_braid
from .errors import ValidationError
from .linalg import as_matrix, frobenius, hermiticity_residual, tensor_product

BASIS_LABELS = ("KK", "KKbar", "KbarK", "KbarKbar")

NORM_TOL = 1e-9

_SQ2 = math.sqrt(2.0)


@dataclass(frozen=True)
class TwoKaonState:
    """Unit vector of four complex amplitudes over the canonical basis."""

    amplitudes: tuple

    def __init__(self, amplitudes):
        a = np.asarray(amplitudes, dtype=complex).reshape(-1)
        if a.shape != (4,):
            raise ValidationError("a two-kaon state needs exactly 4 amplitudes")
        if not np.isfinite(a).all():
            raise ValidationError("amplitudes must be finite")
        if abs(np.linalg.norm(a) - 1.0) > NORM_TOL:
            raise ValidationError(
                f"state is not normalized: ||a|| = {np.linalg.norm(a):.12g}"
            )
        object.__setattr__(self, "amplitudes", tuple(a))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    def overlap(self, other: "TwoKaonState") -> complex:
        """⟨self|other⟩."""
        return complex(np.vdot(self.vector, other.vector))

    def amplitude_matrix(self) -> np.ndarray:
        """2x2 matrix [[a0, a1], [a2, a3]]: first-kaon index = row."""
        return self.vector.reshape(2, 2)


def canonical_basis() -> list[TwoKaonState]:
    """The four coordinate states in canonical order."""
    return [TwoKaonState(np.eye(4)[i]) for i in range(4)]


def strangeness_op() -> np.ndarray:
    """Single-kaon strangeness: Ŝ|K⟩ = +|K⟩, Ŝ|K̄⟩ = -|K̄⟩."""
    return np.diag([1.0 + 0j, -1.0 + 0j])


def cp_op() -> np.ndarray:
    """Single-kaon CP: (CP)|K⟩ = -|K̄⟩, (CP)|K̄⟩ = -|K⟩."""
    return np.array([[0, -1], [-1, 0]], dtype=complex)


def lift_two_kaon(op) -> np.ndarray:
    """Lift a single-kaon operator to the pair as op ⊗ op."""
    return tensor_product(as_matrix(op, 2), as_matrix(op, 2))


def rbar_matrix(coeffs) -> np.ndarray:
    """Assemble the coefficient-permutation matrix

        [[a0, 0, 0, 0], [0, 0, a3, 0], [0, a2, 0, 0], [0, 0, 0, a1]]

    and validate that it is unitary (each coefficient of unit modulus).
    """
    a0, a1, a2, a3 = (complex(c) for c in np.asarray(coeffs, dtype=complex))
    m = np.array(
        [[a0, 0, 0, 0], [0, 0, a3, 0], [0, a2, 0, 0], [0, 0, 0, a1]], dtype=complex
    )
    if frobenius(m @ m.conj().T - np.eye(4)) > 1e-9:
        raise ValidationError(
            "rbar coefficients must each have unit modulus for a unitary map"
        )
    return m


def apply_rbar(coeffs, state: TwoKaonState) -> TwoKaonState:
    """Apply the assembled rbar matrix to the amplitude vector."""
    return TwoKaonState(rbar_matrix(coeffs) @ state.vector)


def concurrence(state: TwoKaonState) -> float:
    """C = 2|a0·a3 - a1·a2| in canonical order; 0 iff decomposable, 1 for Bell states."""
    a0, a1, a2, a3 = state.amplitudes
    return min(1.0, 2.0 * abs(a0 * a3 - a1 * a2))


def is_separable(state: TwoKaonState, tol: float = 1e-9) -> bool:
    """True iff the concurrence is at most tol."""
    return concurrence(state) <= tol


def schmidt_coefficients(state: TwoKaonState) -> np.ndarray:
    """Singular values of the 2x2 amplitude matrix (independent separability oracle)."""
    return np.linalg.svd(state.amplitude_matrix(), compute_uv=False)


def bell_quartet() -> list[TwoKaonState]:
    """Φ₁..Φ₄: (|KK⟩ ± |K̄K̄⟩)/√2 and (|K̄K⟩ ± |KK̄⟩)/√2."""
    return [
        TwoKaonState([1 / _SQ2, 0, 0, 1 / _SQ2]),
        TwoKaonState([1 / _SQ2, 0, 0, -1 / _SQ2]),
        TwoKaonState([0, 1 / _SQ2, 1 / _SQ2, 0]),
        TwoKaonState([0, -1 / _SQ2, 1 / _SQ2, 0]),
    ]


def deformed_bell(phi: float) -> TwoKaonState:
    """(|KK⟩ + e^{iφ}|K̄K̄⟩)/√2: the φ-deformed first Bell state."""
    return TwoKaonState([1 / _SQ2, 0, 0, cmath.exp(1j * phi) / _SQ2])


def braid_action_images(spec: BraidSpec) -> list[TwoKaonState]:
    """Images of the canonical basis under the unitary braid action, read in
    the row convention: image i has amplitudes b̃[i, :].

    At φ = 0 the images are (up to order and sign) the four Bell states; at
    φ ≠ 0 images 1 and 4 carry the phases e^{±iφ}.
    """
    bt = unitary_braid(spec)
    return [TwoKaonState(bt[i, :]) for i in range(4)]


def cp_s_eigentable() -> list[tuple[str, float, float]]:
    """Simultaneous Ŝ⊗Ŝ and CP⊗CP eigenvalues of the Bell quartet.

    Verifies each Φᵢ really is an eigenvector of both lifted operators and
    returns [(label, s_eigenvalue, cp_eigenvalue)] for Φ₁..Φ₄.
    """
    s2 = lift_two_kaon(strangeness_op())
    cp2 = lift_two_kaon(cp_op())
    table = []
    for i, phi_i in enumerate(bell_quartet(), start=1):
        v = phi_i.vector
        row = [f"Phi{i}"]
        for op in (s2, cp2):
            image = op @ v
            lam = complex(np.vdot(v, image))
            if np.linalg.norm(image - lam * v) > 1e-12:
                raise ValidationError(f"Phi{i} is not an eigenvector; internal error")
            # eigenvalues are exactly +-1; snap off the fp dust from vdot
            snapped = float(round(lam.real))
            if abs(lam - snapped) > 1e-12:
                raise ValidationError(f"unexpected eigenvalue {lam} for Phi{i}")
            row.append(snapped)
        table.append(tuple(row))
    return table


def correlation(state: TwoKaonState, op_a, op_b) -> float:
    """⟨Ψ| A⊗B |Ψ⟩ for Hermitian single-kaon operators A, B."""
    op_a = as_matrix(op_a, 2)
    op_b = as_matrix(op_b, 2)
    if hermiticity_residual(op_a) > 1e-12 or hermiticity_residual(op_b) > 1e-12:
        raise ValidationError("correlation requires Hermitian operators")
    v = state.vector
    value = complex(np.vdot(v, tensor_product(op_a, op_b) @ v))
    return float(value.real)
