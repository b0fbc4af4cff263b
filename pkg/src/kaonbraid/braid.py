"""Eight-vertex braid matrices, Yang-Baxterization and their verification.

The two-parameter family b±(φ) (with q = e^{iφ} on the unit circle) generates

  * R±(x) = b + 2x b⁻¹          (spectral-parameter family, R(0) = b),
  * b̃± = b/√2                   (unitary normalization, b̃⁴ = -I),
  * R̃±(θ, φ) = cosθ·b̃ + sinθ·b̃⁻¹  with θ = arctan x (unitary for all θ, φ).

The printed source of the matrix family carries a stray entry at position
(3, 4); the corrected matrix (entry 0) is the one that actually satisfies the
braid relation and has eigenvalues 1±i.  The uncorrected variant is kept
behind a flag purely as a diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ValidationError
from .linalg import frobenius, tensor_product

SIGNS = ("plus", "minus")

_I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class BraidSpec:
    """Sign variant (plus/minus) and deformation phase φ, canonicalized to [0, 2π)."""

    sign: str
    phi: float = 0.0

    def __post_init__(self):
        if self.sign not in SIGNS:
            raise ValidationError(f"sign must be one of {SIGNS}, got {self.sign!r}")
        if not math.isfinite(self.phi):
            raise ValidationError("phi must be finite")
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * math.pi))

    @property
    def q(self) -> complex:
        return complex(math.cos(self.phi), math.sin(self.phi))

    @property
    def sigma(self) -> int:
        return 1 if self.sign == "plus" else -1


@dataclass(frozen=True)
class SpectralPoint:
    """Spectral parameter x >= 0 with derived angle θ = arctan x and phase φ."""

    x: float
    phi: float = 0.0
    theta: float = field(init=False)

    def __post_init__(self):
        if not math.isfinite(self.x) or self.x < 0:
            raise DomainError("spectral parameter x must be finite and >= 0")
        object.__setattr__(self, "theta", math.atan(self.x))
        object.__setattr__(self, "phi", float(self.phi) % (2.0 * math.pi))


def braid_matrix(spec: BraidSpec, corrected: bool = True) -> np.ndarray:
    """The unnormalized 4x4 braid matrix b±(φ); satisfies b b† = 2I.

    corrected=False reproduces the misprinted variant with a stray 1 at
    (3, 4), which fails the braid relation (diagnostic use only).
    """
    q, s = spec.q, spec.sigma
    return np.array(
        [
            [1, 0, 0, q],
            [0, 1, s, 0],
            [0, -s, 1, 0 if corrected else 1],
            [-1 / q, 0, 0, 1],
        ],
        dtype=complex,
    )


def unitary_braid(spec: BraidSpec) -> np.ndarray:
    """b̃± = b±/√2: unitary, eigenvalues e^{±iπ/4}, b̃⁴ = -I."""
    return braid_matrix(spec) / math.sqrt(2.0)


def braid_relation_residual(b: np.ndarray) -> float:
    """||b₁b₂b₁ - b₂b₁b₂||_F on the 8-dimensional embedding b₁ = b⊗I, b₂ = I⊗b."""
    b1 = tensor_product(b, _I2)
    b2 = tensor_product(_I2, b)
    return frobenius(b1 @ b2 @ b1 - b2 @ b1 @ b2)


def check_braid_relation(spec: BraidSpec, corrected: bool = True) -> float:
    """Braid-relation residual for b±(φ)."""
    return braid_relation_residual(braid_matrix(spec, corrected=corrected))


def yang_baxterize(spec: BraidSpec, x: float) -> np.ndarray:
    """R±(x) = b + x·λ₁λ₂·b⁻¹ with λ₁λ₂ = (1+i)(1-i) = 2; R(0) = b exactly.

    Since b b† = 2I we have 2 b⁻¹ = b†, so R(x) = b + x b†.
    """
    if not math.isfinite(x) or x < 0:
        raise DomainError("spectral parameter x must be finite and >= 0")
    b = braid_matrix(spec)
    return b + x * b.conj().T


def check_qybe(spec: BraidSpec, x: float, y: float) -> float:
    """Residual of R₁(x)R₂(xy)R₁(y) = R₂(y)R₁(xy)R₂(x) on (C²)⊗³."""
    if x < 0 or y < 0:
        raise DomainError("spectral parameters must be >= 0")

    def r1(z):
        return tensor_product(yang_baxterize(spec, z), _I2)

    def r2(z):
        return tensor_product(_I2, yang_baxterize(spec, z))

    lhs = r1(x) @ r2(x * y) @ r1(y)
    rhs = r2(y) @ r1(x * y) @ r2(x)
    return frobenius(lhs - rhs)


def unitary_r(point: SpectralPoint, sign: str = "plus") -> np.ndarray:
    """R̃±(θ, φ) = cosθ·b̃ + sinθ·b̃⁻¹, built from the unitary b̃ (b̃⁻¹ = b̃†).

    Unitary for all (θ, φ); equals b̃ at θ = 0.
    """
    bt = unitary_braid(BraidSpec(sign, point.phi))
    return math.cos(point.theta) * bt + math.sin(point.theta) * bt.conj().T


def rho_check(spec: BraidSpec, t: float) -> tuple[bool, complex, float]:
    """Inversion relation ϱ = R(t)·R(1/t) from the unnormalized R.

    Returns (is_scalar, scalar, residual) where scalar is the mean diagonal
    entry and residual = ||ϱ - scalar·I||_F.  The closed form is
    ϱ = 2(t + 1/t)·I, independent of φ.
    """
    if t <= 0:
        raise DomainError("rho_check requires t > 0")
    rho = yang_baxterize(spec, t) @ yang_baxterize(spec, 1.0 / t)
    scalar = complex(np.trace(rho)) / 4.0
    residual = frobenius(rho - scalar * np.eye(4))
    off = frobenius(rho - np.diag(np.diag(rho)))
    spread = float(np.max(np.abs(np.diag(rho) - scalar)))
    return (off < 1e-12 and spread < 1e-12), scalar, residual


def rho_printed_formula(spec: BraidSpec, t: float) -> complex:
    """The scalar q² + q⁻² - t - 1/t as printed in the source; kept for the
    side-by-side discrepancy report (direct computation gives 2(t + 1/t))."""
    if t <= 0:
        raise DomainError("requires t > 0")
    q = spec.q
    return q**2 + q**-2 - t - 1.0 / t
