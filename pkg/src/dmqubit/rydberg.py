"""Van der Waals interaction and blockade estimates for Rydberg-dressed pairs.

C6 = (d1*d2/(4*pi*eps0))^2 / (2*delta) with transition dipoles d1, d2 and
Foerster defect delta.  Since d ~ n^2 and delta ~ n^-3, C6 scales as n^11.
No baseline (d1, d2, delta) is shipped: callers supply either the dipoles
and defect or a reference C6 to rescale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import COULOMB_K, HBAR


@dataclass(frozen=True)
class RydbergParams:
    """Pair-interaction inputs: transition dipoles (C*m), Foerster defect
    (J), principal quantum number, Rabi frequency (rad/s) and van der Waals
    shift U (J)."""

    d1: float
    d2: float
    delta: float
    n_ryd: int
    rabi: float
    u_int: float

    def __post_init__(self) -> None:
        if not (self.d1 > 0.0 and self.d2 > 0.0):
            raise ValueError("transition dipoles must be positive")
        if not self.delta > 0.0:
            raise ValueError("Foerster defect must be positive")
        if self.n_ryd < 1:
            raise ValueError("n_ryd must be >= 1")
        if not self.rabi > 0.0:
            raise ValueError("rabi must be positive")


def c6_coefficient(
    d1: float | np.ndarray, d2: float | np.ndarray, delta: float | np.ndarray
) -> float | np.ndarray:
    """C6 = (d1*d2/(4*pi*eps0))^2 / (2*delta) in J*m^6."""
    if not np.all(np.asarray(d1) > 0.0) or not np.all(np.asarray(d2) > 0.0):
        raise ValueError("transition dipoles must be positive")
    if not np.all(np.asarray(delta) > 0.0):
        raise ValueError(
            "Foerster defect must be positive (the resonant delta = 0 case "
            "is out of scope)"
        )
    return (d1 * d2 * COULOMB_K) ** 2 / (2.0 * delta)


def c6_scaled(
    c6_ref: float | np.ndarray, n_ref: int, n_ryd: int | np.ndarray
) -> float | np.ndarray:
    """Rescale a reference C6 by the n^11 law (d ~ n^2 twice, squared, over
    delta ~ n^-3)."""
    if not np.all(np.asarray(c6_ref) > 0.0):
        raise ValueError("c6_ref must be positive")
    if n_ref < 1 or not np.all(np.asarray(n_ryd) >= 1):
        raise ValueError("principal quantum numbers must be >= 1")
    return c6_ref * (np.asarray(n_ryd) / n_ref) ** 11


def blockade_radius(
    c6: float | np.ndarray, rabi: float | np.ndarray
) -> float | np.ndarray:
    """Blockade radius (C6/(hbar*Omega))^(1/6) in meters."""
    if not np.all(np.asarray(c6) > 0.0):
        raise ValueError("c6 must be positive")
    if not np.all(np.asarray(rabi) > 0.0):
        raise ValueError("rabi must be positive")
    return (c6 / (HBAR * rabi)) ** (1.0 / 6.0)


def blockade_regime(u_int: float, rabi: float, margin: float = 10.0) -> bool:
    """True when U >= margin * hbar * Omega (boundary inclusive).

    The default margin of 10 is the concrete stand-in for "U much greater
    than hbar*Omega".
    """
    if margin < 1.0:
        raise ValueError(f"margin must be >= 1, got {margin}")
    return bool(u_int >= margin * HBAR * rabi)
