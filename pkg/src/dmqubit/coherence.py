"""Spontaneous-emission lifetime and thermal operating threshold.

The decay rate of the upper librational level follows Weisskopf-Wigner
theory with the harmonic-oscillator angular matrix element
|theta_eg|^2 = n*h / (8*pi^2*J*nu_eg):

    Gamma = 4 * (2*pi)^4 * nu_eg^3 * (e^2/(4*pi*eps0)) * l^2 * |theta_eg|^2
            / (3*h*c^3)

which collapses to Gamma = (8*pi^2/3) * n * nu_eg^2 * k_e*e^2 * l^2 / (J*c^3).
Note the e^2*l^2 factor uses the electron charge times the bond length, not
the molecular dipole moment; for HCl these differ by a factor ~6.  The
formula is kept in this form deliberately.

All functions broadcast over numpy arrays, so parameter sweeps can be run
vectorized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT, COULOMB_K, E_CHARGE, HBAR, H_PLANCK, K_B
from .spectrum import MoleculeSpec, anharmonicity, intrinsic_frequency


@dataclass(frozen=True)
class DecayInput:
    """Transition frequency (Hz), moment of inertia (kg*m^2), dipole length
    (m) and vibrational quantum number for one decay-rate evaluation.

    Fields may be numpy arrays of equal shape for vectorized sweeps.
    """

    nu_eg: float | np.ndarray
    moment_of_inertia: float | np.ndarray
    dipole_length: float | np.ndarray
    n_vib: int | np.ndarray = 1

    def __post_init__(self) -> None:
        if not np.all(np.asarray(self.nu_eg) > 0.0):
            raise ValueError("nu_eg must be positive")
        if not np.all(np.asarray(self.moment_of_inertia) > 0.0):
            raise ValueError("moment_of_inertia must be positive")
        if not np.all(np.asarray(self.dipole_length) > 0.0):
            raise ValueError("dipole_length must be positive")
        if not np.all(np.asarray(self.n_vib) >= 1):
            raise ValueError("n_vib must be >= 1")


@dataclass(frozen=True)
class QubitParams:
    """Operating-point summary for one molecule, field and temperature."""

    omega0: float
    lam: float
    nu_eg: float
    gamma: float
    tau: float
    threshold_field: float
    temperature: float
    noise_suppressed: bool


def harmonic_angle_element_squared(
    nu_eg: float | np.ndarray,
    moment_of_inertia: float | np.ndarray,
    n_vib: int | np.ndarray = 1,
) -> float | np.ndarray:
    """|theta_eg|^2 = n*h / (8*pi^2*J*nu_eg) for a harmonic level ladder."""
    return n_vib * H_PLANCK / (8.0 * np.pi**2 * moment_of_inertia * nu_eg)


def decay_rate(inp: DecayInput) -> float | np.ndarray:
    """Spontaneous-emission rate Gamma in 1/s, two-factor form."""
    theta_sq = harmonic_angle_element_squared(
        inp.nu_eg, inp.moment_of_inertia, inp.n_vib
    )
    return (
        4.0
        * (2.0 * np.pi) ** 4
        * inp.nu_eg**3
        * COULOMB_K
        * E_CHARGE**2
        * inp.dipole_length**2
        * theta_sq
        / (3.0 * H_PLANCK * C_LIGHT**3)
    )


def mean_lifetime(inp: DecayInput) -> float | np.ndarray:
    """Mean lifetime tau = 1/Gamma in seconds, closed form.

    tau = 3*J*c^3 / (2*(2*pi)^2 * nu_eg^2 * k_e*e^2 * l^2 * n); algebraically
    the exact inverse of :func:`decay_rate`.
    """
    return (
        3.0
        * inp.moment_of_inertia
        * C_LIGHT**3
        / (
            2.0
            * (2.0 * np.pi) ** 2
            * inp.nu_eg**2
            * COULOMB_K
            * E_CHARGE**2
            * inp.dipole_length**2
            * inp.n_vib
        )
    )


def thermal_threshold_field(temperature: float, mol: MoleculeSpec) -> float:
    """Field E* (V/m) at which k_B*T = hbar*omega0; above it thermal noise
    is suppressed."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    return (K_B * temperature) ** 2 * mol.moment_of_inertia / (
        HBAR**2 * mol.dipole_moment
    )


def qubit_summary(
    mol: MoleculeSpec,
    efield: float,
    temperature: float,
    n_vib: int = 1,
) -> QubitParams:
    """Aggregate spectrum, lifetime and threshold data at one operating point.

    The transition frequency here is derived from the field as omega0/(2*pi);
    use :func:`decay_rate` directly to reproduce lifetimes quoted for a fixed
    nu_eg instead.
    """
    if not efield > 0.0:
        raise ValueError("qubit_summary requires E > 0")
    omega0 = intrinsic_frequency(mol, efield)
    lam = anharmonicity(mol, efield)
    nu_eg = omega0 / (2.0 * np.pi)
    inp = DecayInput(nu_eg, mol.moment_of_inertia, mol.dipole_length, n_vib)
    gamma = decay_rate(inp)
    tau = mean_lifetime(inp)
    return QubitParams(
        omega0=float(omega0),
        lam=float(lam),
        nu_eg=float(nu_eg),
        gamma=float(gamma),
        tau=float(tau),
        threshold_field=thermal_threshold_field(temperature, mol),
        temperature=float(temperature),
        noise_suppressed=bool(K_B * temperature < HBAR * omega0),
    )
