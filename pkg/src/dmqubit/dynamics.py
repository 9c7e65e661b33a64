"""Open-system decay of one qubit and blockade-gate dynamics of two molecules.

Single-qubit decay follows the amplitude-damping Lindblad equation

    drho/dt = Gamma * (sm rho sp - (sp sm rho + rho sp sm)/2),
    sp = |1><0|,  sm = |0><1|,

whose solution damps the excited population at Gamma and the coherence at
Gamma/2.

Two-molecule dynamics run on the 9-state product basis {|0>,|1>,|r>}^2 in
the fixed order 00, 01, 0r, 10, 11, 1r, r0, r1, rr.  Pulse phase
convention: a resonant pulse of area A on a level pair (|c>, |r>) applies
exp(-i*(A/2)*sigma_x), so a pi pulse maps |c> -> -i|r> and a 2*pi pulse
multiplies the pair subspace by -1.  This is what turns the pi-2pi-pi
blockade sequence into the controlled-phase truth table (+1, -1, -1, -1).

Gate evolutions are pure-state (no decay); lifetime effects are quantified
separately in :mod:`dmqubit.coherence`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import HBAR

BASIS_LABELS = ("00", "01", "0r", "10", "11", "1r", "r0", "r1", "rr")
QUBIT_LABELS = ("00", "01", "10", "11")

_SINGLE = {"0": 0, "1": 1, "r": 2}


def basis_index(label: str) -> int:
    """Index of a two-molecule basis label like ``"0r"`` in the fixed order."""
    try:
        return 3 * _SINGLE[label[0]] + _SINGLE[label[1]]
    except (KeyError, IndexError):
        raise ValueError(f"unknown basis label {label!r}") from None


def basis_state(label: str) -> np.ndarray:
    """Unit amplitude vector for one basis label."""
    psi = np.zeros(9, dtype=complex)
    psi[basis_index(label)] = 1.0
    return psi


def symmetric_single_excited() -> np.ndarray:
    """(|0r> + |r0>)/sqrt(2), the state the collective drive couples to."""
    psi = np.zeros(9, dtype=complex)
    psi[basis_index("0r")] = psi[basis_index("r0")] = 1.0 / np.sqrt(2.0)
    return psi


def antisymmetric_single_excited() -> np.ndarray:
    """(|0r> - |r0>)/sqrt(2), decoupled from the symmetric drive."""
    psi = np.zeros(9, dtype=complex)
    psi[basis_index("0r")] = 1.0 / np.sqrt(2.0)
    psi[basis_index("r0")] = -1.0 / np.sqrt(2.0)
    return psi


# ---------------------------------------------------------------------------
# single-qubit amplitude damping

_SP = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)  # |1><0|
_SM = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)  # |0><1|


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity of a 2x2 density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"density matrix must be 2x2, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
        raise ValueError("density matrix is not Hermitian within 1e-12")
    if abs(np.trace(rho) - 1.0) > 1e-10:
        raise ValueError("density matrix trace deviates from 1 beyond 1e-10")
    if min(rho[0, 0].real, rho[1, 1].real) < -1e-12:
        raise ValueError("density matrix has a negative diagonal entry")
    det = np.linalg.det(rho).real
    if det < -1e-10:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


def _lindblad_superoperator(gamma: float) -> np.ndarray:
    sp_sm = _SP @ _SM
    eye = np.eye(2, dtype=complex)
    # row-major vec: vec(A rho B) = (A kron B^T) vec(rho)
    return gamma * (
        np.kron(_SM, _SP.T)
        - 0.5 * (np.kron(sp_sm, eye) + np.kron(eye, sp_sm.T))
    )


def evolve_lindblad(
    rho0: np.ndarray,
    gamma: float,
    t: float,
    stepper: str = "exact",
    dt: float | None = None,
) -> np.ndarray:
    """Evolve a 2x2 density matrix under amplitude damping for time t.

    ``stepper="exact"`` applies the analytic solution; ``stepper="rk4"``
    integrates the superoperator with fixed step ``dt`` (rejected when
    dt*gamma > 0.1, where RK4 accuracy degrades).
    """
    rho0 = validate_density_matrix(rho0)
    if t < 0.0:
        raise ValueError(f"t must be >= 0, got {t}")
    if gamma < 0.0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")

    if stepper == "exact":
        decay = np.exp(-gamma * t)
        damp = np.exp(-0.5 * gamma * t)
        rho = np.empty((2, 2), dtype=complex)
        rho[0, 0] = rho0[0, 0] + rho0[1, 1] * (1.0 - decay)
        rho[1, 1] = rho0[1, 1] * decay
        rho[0, 1] = rho0[0, 1] * damp
        rho[1, 0] = rho0[1, 0] * damp
        return rho

    if stepper != "rk4":
        raise ValueError(f"unknown stepper {stepper!r}; use 'exact' or 'rk4'")
    if dt is None or not dt > 0.0:
        raise ValueError("rk4 stepper needs a positive dt")
    if dt * gamma > 0.1:
        raise ValueError(
            f"rk4 step too coarse: dt*gamma = {dt * gamma:g} > 0.1"
        )

    liouv = _lindblad_superoperator(gamma)
    y = rho0.reshape(4)
    remaining = t
    while remaining > 0.0:
        h = min(dt, remaining)
        k1 = liouv @ y
        k2 = liouv @ (y + 0.5 * h * k1)
        k3 = liouv @ (y + 0.5 * h * k2)
        k4 = liouv @ (y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        remaining -= h
    return y.reshape(2, 2)


# ---------------------------------------------------------------------------
# two-molecule pulses and gates


@dataclass(frozen=True)
class PulseSegment:
    """One resonant (or detuned) laser segment driving |coupled_state> <-> |r>
    on a single molecule."""

    target_molecule: int  # 1 or 2
    coupled_state: int    # 0 or 1
    area: float           # rad
    rabi: float           # rad/s
    detuning: float = 0.0  # rad/s

    def __post_init__(self) -> None:
        if self.target_molecule not in (1, 2):
            raise ValueError("target_molecule must be 1 or 2")
        if self.coupled_state not in (0, 1):
            raise ValueError("coupled_state must be 0 or 1")
        if not self.area > 0.0:
            raise ValueError("pulse area must be positive")
        if not self.rabi > 0.0:
            raise ValueError("rabi must be positive")

    @property
    def duration(self) -> float:
        return self.area / self.rabi


@dataclass(frozen=True)
class PulseSequence:
    segments: tuple[PulseSegment, ...] = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def total_duration(self) -> float:
        return sum(seg.duration for seg in self.segments)


def standard_cz_pulses(rabi: float) -> PulseSequence:
    """The pi (molecule 1) - 2*pi (molecule 2) - pi (molecule 1) sequence on
    the |1> <-> |r> transition that realizes the blockade phase gate."""
    if not rabi > 0.0:
        raise ValueError("rabi must be positive")
    return PulseSequence(
        (
            PulseSegment(1, 1, np.pi, rabi),
            PulseSegment(2, 1, 2.0 * np.pi, rabi),
            PulseSegment(1, 1, np.pi, rabi),
        )
    )


def _coupling_1mol(coupled_state: int) -> np.ndarray:
    m = np.zeros((3, 3), dtype=complex)
    m[coupled_state, 2] = m[2, coupled_state] = 1.0
    return m


def _embed(op: np.ndarray, molecule: int) -> np.ndarray:
    eye = np.eye(3, dtype=complex)
    return np.kron(op, eye) if molecule == 1 else np.kron(eye, op)


_P_R = np.zeros((3, 3), dtype=complex)
_P_R[2, 2] = 1.0
_RR_PROJECTOR = np.kron(_P_R, _P_R)


def _segment_hamiltonian(seg: PulseSegment, u_int: float) -> np.ndarray:
    ham = (HBAR * seg.rabi / 2.0) * _embed(
        _coupling_1mol(seg.coupled_state), seg.target_molecule
    )
    if seg.detuning:
        ham -= HBAR * seg.detuning * _embed(_P_R, seg.target_molecule)
    ham = ham + u_int * _RR_PROJECTOR
    return ham


def _propagate(ham: np.ndarray, psi: np.ndarray, t: float) -> np.ndarray:
    w, v = np.linalg.eigh(ham)
    return v @ (np.exp(-1j * w * t / HBAR) * (v.conj().T @ psi))


def _two_level_rotation(seg: PulseSegment) -> np.ndarray:
    # exp(-i H2 t / hbar) on (|c>, |r>) with H2/hbar = (rabi/2) sx - detuning |r><r|
    h2 = np.array(
        [[0.0, seg.rabi / 2.0], [seg.rabi / 2.0, -seg.detuning]], dtype=complex
    )
    w, v = np.linalg.eigh(h2)
    return v @ np.diag(np.exp(-1j * w * seg.duration)) @ v.conj().T


def _ideal_segment_unitary(seg: PulseSegment) -> np.ndarray:
    # Perfect blockade: components with the spectator molecule in |r> are
    # inert, so |rr> is never populated.
    u2 = _two_level_rotation(seg)
    u = np.eye(9, dtype=complex)
    c, r = seg.coupled_state, 2
    for spectator in (0, 1):
        if seg.target_molecule == 1:
            lo, hi = 3 * c + spectator, 3 * r + spectator
        else:
            lo, hi = 3 * spectator + c, 3 * spectator + r
        u[np.ix_([lo, hi], [lo, hi])] = u2
    return u


def collective_rabi(
    rabi: float, u_int: float, t: float, mode: str = "ideal_blockade"
) -> np.ndarray:
    """Drive both molecules on |0> <-> |r> for time t, starting from |00>.

    ``ideal_blockade`` evolves in the {|00>, (|0r>+|r0>)/sqrt(2)} subspace
    with the collective coupling sqrt(2)*rabi and |rr> pinned to zero, so
    t = pi/(sqrt(2)*rabi) prepares the symmetric entangled state exactly.
    ``finite_u`` integrates the full 9-level Schrodinger equation with the
    van der Waals shift ``u_int`` (J) on |rr>.
    """
    if not rabi > 0.0:
        raise ValueError("rabi must be positive")
    if t < 0.0:
        raise ValueError(f"t must be >= 0, got {t}")
    if mode == "ideal_blockade":
        half = np.sqrt(2.0) * rabi * t / 2.0
        psi = np.cos(half) * basis_state("00") + (
            -1j * np.sin(half)
        ) * symmetric_single_excited()
        return psi
    if mode != "finite_u":
        raise ValueError(f"unknown mode {mode!r}; use 'ideal_blockade' or 'finite_u'")
    ham = (HBAR * rabi / 2.0) * (
        _embed(_coupling_1mol(0), 1) + _embed(_coupling_1mol(0), 2)
    ) + u_int * _RR_PROJECTOR
    return _propagate(ham, basis_state("00"), t)


@dataclass(frozen=True)
class GateOutcome:
    """Final state for one computational-basis input, the amplitude retained
    on that input (its acquired phase) and the population that leaked out of
    the qubit subspace."""

    final_state: np.ndarray
    phase: complex
    leakage: float


def simulate_gate(
    seq: PulseSequence, u_int: float, mode: str = "ideal_blockade"
) -> dict[str, GateOutcome]:
    """Apply a pulse sequence to each computational-basis state.

    ``ideal_blockade`` composes exact two-level rotations with a blocked
    (spectator in |r>) drive rendered inert; ``finite_u`` integrates the
    9-level Schrodinger equation segment by segment with the interaction
    ``u_int`` (J) on |rr>.  Norm drift beyond 1e-8 in the finite-U path is
    rejected.
    """
    if mode not in ("ideal_blockade", "finite_u"):
        raise ValueError(f"unknown mode {mode!r}; use 'ideal_blockade' or 'finite_u'")
    qubit_idx = [basis_index(lbl) for lbl in QUBIT_LABELS]
    out: dict[str, GateOutcome] = {}
    for label in QUBIT_LABELS:
        psi = basis_state(label)
        for seg in seq:
            if mode == "ideal_blockade":
                psi = _ideal_segment_unitary(seg) @ psi
            else:
                psi = _propagate(_segment_hamiltonian(seg, u_int), psi, seg.duration)
        drift = abs(np.linalg.norm(psi) - 1.0)
        if drift > 1e-8:
            raise ValueError(
                f"state norm drifted by {drift:.3e} (> 1e-8) during the "
                f"{label!r} evolution"
            )
        kept = sum(abs(psi[i]) ** 2 for i in qubit_idx)
        out[label] = GateOutcome(
            final_state=psi,
            phase=complex(psi[basis_index(label)]),
            leakage=float(max(0.0, 1.0 - kept)),
        )
    return out


def truth_table_fidelity(
    outcomes: dict[str, GateOutcome],
    target_phases: tuple[complex, ...] = (1.0, -1.0, -1.0, -1.0),
) -> float:
    """Overlap fidelity |sum_i conj(t_i) a_i / 4|^2 of the measured
    diagonal phases against a target truth table."""
    acc = sum(
        np.conj(t) * outcomes[lbl].phase for t, lbl in zip(target_phases, QUBIT_LABELS)
    )
    return float(abs(acc / 4.0) ** 2)
