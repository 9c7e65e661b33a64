"""Physical constants and the unit conversions used at I/O boundaries.

All internal computation is in SI: dipole moments in C*m, fields in V/m,
energies in J, and frequencies angular (rad/s).  Debye, V/um and Hz are
accepted only at the edges, through :func:`convert_units`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Constants:
    """Fundamental constants, SI units (CODATA 2018)."""

    # hbar is derived from the exact h so that h = 2*pi*hbar holds to
    # rounding; the usual 10-digit 1.054571817e-34 is 6e-10 off from that.
    hbar: float = 6.62607015e-34 / (2.0 * math.pi)  # J*s
    h: float = 6.62607015e-34           # J*s
    c: float = 299792458.0              # m/s
    e_charge: float = 1.602176634e-19   # C
    coulomb_k: float = 8.9875517923e9   # 1/(4*pi*eps0), N*m^2/C^2
    k_B: float = 1.380649e-23           # J/K
    debye: float = 3.33564e-30          # C*m per Debye

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0.0:
                raise ValueError(f"constant {f.name} must be positive")
        if abs(self.h - 2.0 * math.pi * self.hbar) > 1e-12 * self.h:
            raise ValueError("inconsistent constants: h != 2*pi*hbar")


CONSTANTS = Constants()

HBAR = CONSTANTS.hbar
H_PLANCK = CONSTANTS.h
C_LIGHT = CONSTANTS.c
E_CHARGE = CONSTANTS.e_charge
COULOMB_K = CONSTANTS.coulomb_k
K_B = CONSTANTS.k_B
DEBYE = CONSTANTS.debye

# unit tag -> (dimension class, factor to the SI representative of that class)
_UNITS = {
    "debye": ("dipole", DEBYE),
    "d": ("dipole", DEBYE),
    "c*m": ("dipole", 1.0),
    "v/um": ("field", 1.0e6),
    "v/m": ("field", 1.0),
    "hz": ("frequency", 2.0 * math.pi),
    "rad/s": ("frequency", 1.0),
}


def _lookup(tag: str) -> tuple[str, float]:
    key = tag.strip().lower().replace("µ", "u").replace("μ", "u")
    key = key.replace("·", "*").replace(" ", "")
    try:
        return _UNITS[key]
    except KeyError:
        raise ValueError(f"unknown unit tag {tag!r}") from None


def convert_units(value: float, from_unit: str, to_unit: str) -> float:
    """Convert ``value`` between two unit tags of the same dimension class.

    Supported classes: dipole (Debye, C*m), field (V/um, V/m) and
    frequency (Hz, rad/s; the Hz -> rad/s factor is 2*pi).  Conversion is
    purely multiplicative, so it is linear and round-trips exactly.
    """
    dim_from, f_from = _lookup(from_unit)
    dim_to, f_to = _lookup(to_unit)
    if dim_from != dim_to:
        raise ValueError(
            f"incompatible units: {from_unit!r} is {dim_from}, {to_unit!r} is {dim_to}"
        )
    return value * (f_from / f_to)
