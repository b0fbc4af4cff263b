"""Aggregated verification suite.

Every check returns a CheckResult with the worst observed metric, the
tolerance it is held to, and a short detail string.  run_suite() composes
the full battery used by `kaonbraid verify`; the acceptance tests call the
individual check functions directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import braid, dynamics, oscillation, states
from .braid import BraidSpec, SpectralPoint
from .linalg import frobenius, hermiticity_residual, unitarity_residual

PHI_SET = (0.0, math.pi / 7, math.pi / 3, 1.0, math.pi / 2, 2.5)
QYBE_PHI_SET = (0.0, 1.1, math.pi / 2)
CONSISTENCY_T = (0.1, 0.5, 1.0, 2.0, 10.0)
CONSISTENCY_PHI = (0.0, 1.0, math.pi / 2)


@dataclass(frozen=True)
class CheckResult:
    name: str
    metric: float
    tol: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.metric <= self.tol


def _specs(phis=PHI_SET):
    return [BraidSpec(sign, phi) for sign in braid.SIGNS for phi in phis]


def check_braid_relation(uncorrected: bool = False) -> CheckResult:
    worst = max(
        braid.check_braid_relation(s, corrected=not uncorrected) for s in _specs()
    )
    label = "uncorrected (3,4)=1 matrix" if uncorrected else "corrected matrix"
    return CheckResult("braid_relation", worst, 1e-12, label)


def check_uncorrected_diagnostic() -> CheckResult:
    """The misprinted matrix must clearly fail the braid relation."""
    least = min(braid.check_braid_relation(s, corrected=False) for s in _specs())
    # pass iff the minimum residual exceeds 0.1
    metric = 0.0 if least > 0.1 else 1.0
    return CheckResult(
        "uncorrected_braid_fails", metric, 0.0, f"min residual {least:.3g} > 0.1"
    )


def check_eigenvalues() -> CheckResult:
    expected = np.array([1 - 1j, 1 - 1j, 1 + 1j, 1 + 1j])
    worst = 0.0
    for spec in _specs():
        ev = np.linalg.eigvals(braid.braid_matrix(spec))
        ev = ev[np.argsort(ev.imag)]
        worst = max(worst, float(np.max(np.abs(ev - expected))))
    return CheckResult("braid_eigenvalues", worst, 1e-10, "multiset {1+i, 1-i} twice")


def check_qybe(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    draws = rng.uniform(0.0, 10.0, size=(100, 2))
    draws[draws == 0.0] = 10.0  # open interval (0, 10]
    worst = 0.0
    for sign in braid.SIGNS:
        for phi in QYBE_PHI_SET:
            spec = BraidSpec(sign, phi)
            for x, y in draws:
                worst = max(worst, braid.check_qybe(spec, x, y))
    return CheckResult("qybe", worst, 1e-10, "100 seeded (x,y) per sign and phi")


def check_asymptotic() -> CheckResult:
    worst = 0.0
    for spec in _specs():
        diff = braid.yang_baxterize(spec, 0.0) - braid.braid_matrix(spec)
        worst = max(worst, float(np.max(np.abs(diff))))
    return CheckResult("asymptotic_r0_equals_b", worst, 0.0, "exact entrywise")


def check_unitarity_grid() -> CheckResult:
    thetas = np.linspace(0.0, math.pi / 2, 20, endpoint=False)
    phis = np.linspace(0.0, 2 * math.pi, 20, endpoint=False)
    worst = 0.0
    for sign in braid.SIGNS:
        for th in thetas:
            x = math.tan(th)
            for ph in phis:
                r = braid.unitary_r(SpectralPoint(x, ph), sign)
                worst = max(worst, unitarity_residual(r))
    return CheckResult("unitary_r_grid", worst, 1e-12, "20x20 (theta, phi) grid")


def check_hamiltonian_hermitian() -> CheckResult:
    worst = 0.0
    for spec in _specs():
        for t in (0.0, 0.5, -0.5, 1.0, -1.0, 10.0, -10.0):
            worst = max(worst, hermiticity_residual(dynamics.hamiltonian_at(spec, t)))
    return CheckResult("hamiltonian_hermitian", worst, 1e-12)


def check_hamiltonian_even() -> CheckResult:
    worst = 0.0
    for spec in _specs():
        for t in (0.5, 1.0, 10.0):
            diff = dynamics.hamiltonian_at(spec, t) - dynamics.hamiltonian_at(spec, -t)
            worst = max(worst, float(np.max(np.abs(diff))))
    return CheckResult("hamiltonian_even_in_t", worst, 0.0, "H(t) = H(-t) exactly")


def check_hamiltonian_t1_printed() -> CheckResult:
    """H(t=1) against the printed closed-form matrix (i/2)·[[0,0,0,-q],...]."""
    worst = 0.0
    for spec in _specs():
        q, s = spec.q, spec.sigma
        printed = (1j / 2) * np.array(
            [[0, 0, 0, -q], [0, 0, -s, 0], [0, s, 0, 0], [1 / q, 0, 0, 0]],
            dtype=complex,
        )
        worst = max(worst, float(np.max(np.abs(dynamics.hamiltonian_at(spec, 1.0) - printed))))
    return CheckResult("hamiltonian_t1_printed_form", worst, 1e-14)


def random_states(rng, n: int) -> list[states.TwoKaonState]:
    out = []
    for _ in range(n):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        out.append(states.TwoKaonState(v / np.linalg.norm(v)))
    return out


def check_schrodinger(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    spec_set = [BraidSpec("plus", 0.0), BraidSpec("minus", 1.0)]
    for psi in random_states(rng, 10):
        for t in (0.2, 0.5, 1.0, 2.0, 5.0):
            for spec in spec_set:
                worst = max(worst, dynamics.schrodinger_residual(psi, spec, t, dt=1e-5))
    return CheckResult("schrodinger_residual", worst, 1e-6, "dt = 1e-5, 10 states x 5 times")


def check_r_hamiltonian_consistency() -> CheckResult:
    worst = 0.0
    for sign in braid.SIGNS:
        for phi in CONSISTENCY_PHI:
            spec = BraidSpec(sign, phi)
            for t in CONSISTENCY_T:
                worst = max(worst, dynamics.r_vs_hamiltonian_consistency(spec, t))
    return CheckResult("r_vs_hamiltonian", worst, 1e-11)


def check_bell_structure() -> CheckResult:
    worst = 0.0
    quartet = states.bell_quartet()
    gram = np.array([[a.overlap(b) for b in quartet] for a in quartet])
    worst = max(worst, frobenius(gram - np.eye(4)))
    worst = max(worst, max(abs(states.concurrence(s) - 1.0) for s in quartet))
    for sign in braid.SIGNS:
        images = states.braid_action_images(BraidSpec(sign, 0.0))
        g = np.array([[a.overlap(b) for b in images] for a in images])
        worst = max(worst, frobenius(g - np.eye(4)))
        for img in images:
            worst = max(worst, abs(states.concurrence(img) - 1.0))
            # each phi=0 image must coincide with a Bell state up to phase
            best = max(abs(img.overlap(b)) for b in quartet)
            worst = max(worst, abs(best - 1.0))
    return CheckResult("bell_structure", worst, 1e-12)


def check_eigentable() -> CheckResult:
    expected = [
        ("Phi1", 1.0, 1.0),
        ("Phi2", 1.0, -1.0),
        ("Phi3", -1.0, 1.0),
        ("Phi4", -1.0, -1.0),
    ]
    table = states.cp_s_eigentable()
    metric = 0.0 if table == expected else 1.0
    return CheckResult(
        "cp_strangeness_table", metric, 0.0, "printed S*Phi_{3,4} line corrected to -Phi_{3,4}"
    )


def check_separability(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    tol = 1e-8
    disagreements = 0
    for i in range(1000):
        if i % 2 == 0:
            u = rng.normal(size=2) + 1j * rng.normal(size=2)
            v = rng.normal(size=2) + 1j * rng.normal(size=2)
            amp = np.outer(u / np.linalg.norm(u), v / np.linalg.norm(v)).reshape(4)
        else:
            amp = rng.normal(size=4) + 1j * rng.normal(size=4)
            amp /= np.linalg.norm(amp)
        psi = states.TwoKaonState(amp)
        by_concurrence = states.is_separable(psi, tol)
        by_schmidt = states.schmidt_coefficients(psi)[1] <= tol
        disagreements += by_concurrence != by_schmidt
    eq4 = states.TwoKaonState([0.5, 0.5, 0.5, 0.5])
    metric = float(disagreements) + (0.0 if states.concurrence(eq4) < 1e-12 else 1.0)
    return CheckResult("separability_oracle", metric, 0.0, "1000 seeded states vs Schmidt rank")


def check_deformation_sweep(grid: int = 41) -> CheckResult:
    worst = 0.0
    s_op, cp = states.strangeness_op(), states.cp_op()
    for phi in np.linspace(0.0, 2 * math.pi, grid):
        psi = states.deformed_bell(phi)
        worst = max(worst, abs(states.correlation(psi, cp, cp) - math.cos(phi)))
        worst = max(worst, abs(states.correlation(psi, s_op, s_op) - 1.0))
        worst = max(worst, abs(states.concurrence(psi) - 1.0))
    return CheckResult(
        "deformation_sweep",
        worst,
        1e-12,
        "<CPxCP> = cos(phi), <SxS> = 1, concurrence = 1 for all phi",
    )


def check_rho() -> CheckResult:
    worst = 0.0
    notes = []
    for spec in _specs((0.0, 1.0, math.pi / 2)):
        for t in (0.5, 1.0, 2.0, 5.0):
            ok, scalar, residual = braid.rho_check(spec, t)
            worst = max(worst, residual, abs(scalar - 2.0 * (t + 1.0 / t)))
            if not ok:
                worst = max(worst, 1.0)
    printed = braid.rho_printed_formula(BraidSpec("plus", 0.0), 1.0)
    notes.append(f"computed 2(t+1/t); printed formula gives {printed.real:g} at t=1, phi=0")
    return CheckResult("rho_inversion", worst, 1e-12, "; ".join(notes))


def check_oscillation(seed: int) -> CheckResult:
    worst = 0.0
    # pure-oscillation limit
    pure = oscillation.KaonParams(gamma_s=0.0, gamma_l=0.0, m_s=0.0, m_l=0.474)
    for t, _, p_flip, _ in oscillation.oscillation_curve(pure, 12.0, 500):
        worst = max(worst, abs(p_flip - math.sin(pure.delta_m * t / 2.0) ** 2))
    # decaying defaults
    params = oscillation.KaonParams()
    for t, p_same, p_flip, _ in oscillation.oscillation_curve(params, 12.0, 200):
        if not (0.0 <= p_same <= 1.0 and 0.0 <= p_flip <= 1.0):
            worst = max(worst, 1.0)
        worst = max(worst, abs(p_same + p_flip - oscillation.survival_probability(params, t)))
        flip_back = oscillation.transition_probability(params, t, "Kbar", "K")
        if p_flip != flip_back:
            worst = max(worst, 1.0)
    # amplitude path vs closed form on random parameter draws
    rng = np.random.default_rng(seed)
    for _ in range(50):
        p = oscillation.KaonParams(*rng.uniform(0.0, 2.0, 2), *rng.uniform(-2.0, 2.0, 2))
        t = float(rng.uniform(0.0, 5.0))
        amps = oscillation.evolve_k(p, t)
        worst = max(worst, abs(abs(amps.c_k) ** 2 - oscillation.transition_probability(p, t, "K", "K")))
        worst = max(worst, abs(abs(amps.c_kbar) ** 2 - oscillation.transition_probability(p, t, "K", "Kbar")))
    return CheckResult("oscillation", worst, 1e-12)


def run_suite(seed: int = 0, uncorrected: bool = False) -> list[CheckResult]:
    """The full battery, in reporting order."""
    return [
        check_braid_relation(uncorrected=uncorrected),
        check_uncorrected_diagnostic(),
        check_eigenvalues(),
        check_qybe(seed),
        check_asymptotic(),
        check_unitarity_grid(),
        check_hamiltonian_hermitian(),
        check_hamiltonian_even(),
        check_hamiltonian_t1_printed(),
        check_schrodinger(seed),
        check_r_hamiltonian_consistency(),
        check_bell_structure(),
        check_eigentable(),
        check_separability(seed),
        check_deformation_sweep(),
        check_rho(),
        check_oscillation(seed),
    ]
