"""Librational spectrum of a polar molecule pendulum in a uniform field.

A dipole p with moment of inertia J in a field E oscillates about the field
axis with small-angle frequency omega0 = sqrt(p*E/J).  In the scaled
coordinate xi = theta / s, with s = sqrt(hbar/(J*omega0)), the Hamiltonian
in units of hbar*omega0 is

    H = 0.5 * (xi^2 - d^2/dxi^2) - (lam/24) * xi^4        (quartic model)

where lam = hbar / sqrt(p*E*J) controls the softening of the level ladder.
Three potential models are supported:

* ``harmonic``    -- 0.5 * xi^2 on [-L, L] with hard walls,
* ``quartic``     -- 0.5 * xi^2 - (lam/24) * xi^4, hard walls, L below the
  potential turnover at sqrt(6/lam),
* ``full_cosine`` -- the untruncated pendulum potential, periodic on
  [-pi, pi) in theta, energies shifted so the potential minimum is zero
  (i.e. reported relative to the -p*E well bottom).

Discretization is second-order central finite differences.  Each solve runs
on the requested grid and on a doubled grid; reported eigenvalues and
matrix elements are Richardson-extrapolated from the pair, which removes
the leading O(dxi^2) error of the stencil.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.sparse import csc_matrix, diags
from scipy.sparse.linalg import eigsh

from .constants import HBAR

PotentialModel = Literal["harmonic", "quartic", "full_cosine"]

_MODELS = ("harmonic", "quartic", "full_cosine")

# Hard-wall half-width used when the quartic turnover does not constrain it;
# covers classical turning points sqrt(2n+1) for n <= 10 with ample margin.
_DEFAULT_HALF_WIDTH = 12.0
_TURNOVER_SAFETY = 0.9

# Relative eigenvalue change under grid doubling below which the solve is
# reported as converged.
_CONVERGENCE_RTOL = 1e-8


@dataclass(frozen=True)
class MoleculeSpec:
    """One molecular species: dipole moment (C*m), moment of inertia
    (kg*m^2) and dipole length (m)."""

    name: str
    dipole_moment: float
    moment_of_inertia: float
    dipole_length: float

    def __post_init__(self) -> None:
        for attr in ("dipole_moment", "moment_of_inertia", "dipole_length"):
            if not getattr(self, attr) > 0.0:
                raise ValueError(f"{self.name or 'molecule'}: {attr} must be positive")


@dataclass(frozen=True)
class GridConfig:
    """Discretization settings for :func:`solve_spectrum`.

    ``half_width_xi`` is the hard-wall half-width L in the scaled
    coordinate; ``None`` selects min(12, 0.9*sqrt(6/lam)) for the quartic
    model and 12 for the harmonic one.  The full-cosine model lives on the
    fixed periodic domain [-pi, pi) and ignores it.
    """

    n_points: int = 2001
    half_width_xi: float | None = None
    potential_model: PotentialModel = "quartic"

    def __post_init__(self) -> None:
        if self.potential_model not in _MODELS:
            raise ValueError(f"unknown potential model {self.potential_model!r}")
        if self.n_points < 201 or self.n_points % 2 == 0:
            raise ValueError(f"n_points must be odd and >= 201, got {self.n_points}")
        if self.half_width_xi is not None and not self.half_width_xi > 0.0:
            raise ValueError("half_width_xi must be positive")


@dataclass(frozen=True)
class ValidityReport:
    """Small-angle and discretization diagnostics for one operating point.

    ``grid_converged`` is None when no eigenproblem was solved.
    """

    zero_point_spread_rad: float
    small_angle_ok: bool
    turnover_xi: float
    grid_converged: bool | None = None


@dataclass(frozen=True)
class SpectrumResult:
    """Lowest eigenpairs of the pendulum Hamiltonian.

    ``energies`` are in Joules (ascending); ``gaps`` their first
    differences.  ``eigenvectors[n]`` is the real amplitude of level n on
    the ``xi`` grid, unit-normalized under the trapezoidal weight, with the
    first significant component at the smallest xi made positive.  The
    ``_refined`` arrays hold the doubled-grid solve used for Richardson
    extrapolation of matrix elements.
    """

    omega0: float
    lam: float
    energies: np.ndarray
    gaps: np.ndarray
    xi: np.ndarray
    eigenvectors: np.ndarray
    validity: ValidityReport
    molecule: MoleculeSpec
    efield: float
    angle_scale: float
    xi_refined: np.ndarray
    eigenvectors_refined: np.ndarray
    refine_ratio: float

    @property
    def n_levels(self) -> int:
        return len(self.energies)


def intrinsic_frequency(mol: MoleculeSpec, efield: float) -> float:
    """Small-oscillation angular frequency sqrt(p*E/J) in rad/s."""
    if efield < 0.0:
        raise ValueError(f"field strength must be >= 0, got {efield}")
    return np.sqrt(mol.dipole_moment * efield / mol.moment_of_inertia)


def anharmonicity(mol: MoleculeSpec, efield: float) -> float:
    """Dimensionless quartic-correction strength hbar / sqrt(p*E*J).

    Undefined at zero field (free-rotor regime), which is rejected.
    """
    if not efield > 0.0:
        raise ValueError(
            "anharmonicity requires E > 0: at E = 0 the molecule is a free "
            "rotor and the pendulum scale is undefined"
        )
    return HBAR / np.sqrt(mol.dipole_moment * efield * mol.moment_of_inertia)


def validity_report(mol: MoleculeSpec, efield: float) -> ValidityReport:
    """Check the small-angle expansion at this operating point.

    The zero-point angular spread sqrt(hbar/(2*J*omega0)) must stay below
    0.1 rad for the quartic truncation of -p*E*cos(theta) to make sense.
    """
    omega0 = intrinsic_frequency(mol, efield)
    if not omega0 > 0.0:
        raise ValueError("validity report requires E > 0")
    spread = np.sqrt(HBAR / (2.0 * mol.moment_of_inertia * omega0))
    lam = anharmonicity(mol, efield)
    return ValidityReport(
        zero_point_spread_rad=float(spread),
        small_angle_ok=bool(spread <= 0.1),
        turnover_xi=float(np.sqrt(6.0 / lam)),
    )


def default_half_width(lam: float, model: str) -> float:
    """Default hard-wall half-width: capped below the quartic turnover."""
    if model == "quartic":
        return min(_DEFAULT_HALF_WIDTH, _TURNOVER_SAFETY * np.sqrt(6.0 / lam))
    return _DEFAULT_HALF_WIDTH


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    # First component exceeding 1e-8 of the peak, scanning from the lowest
    # xi, is made positive; plain "first nonzero" would key off eigensolver
    # noise in the exponential tail.
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        idx = int(np.argmax(np.abs(col) > 1e-8 * np.max(np.abs(col))))
        if col[idx] < 0.0:
            vectors[:, k] = -col
    return vectors


def _solve_hard_wall(
    lam: float, model: str, half_width: float, n_points: int, k: int,
    want_vectors: bool,
) -> tuple[np.ndarray, float, np.ndarray, np.ndarray | None]:
    """Eigenpairs of the dimensionless H on [-L, L] with psi(+-L) = 0.

    Returns (xi grid incl. walls, dxi, eigenvalues in hbar*omega0 units,
    eigenvectors on the full grid with zero wall entries or None).
    """
    xi = np.linspace(-half_width, half_width, n_points)
    dxi = xi[1] - xi[0]
    inner = xi[1:-1]
    if model == "harmonic":
        v = 0.5 * inner**2
    else:
        v = 0.5 * inner**2 - (lam / 24.0) * inner**4
    diag = 1.0 / dxi**2 + v
    offdiag = np.full(n_points - 3, -0.5 / dxi**2)
    if want_vectors:
        w, vec = eigh_tridiagonal(diag, offdiag, select="i", select_range=(0, k - 1))
        full = np.zeros((n_points, k))
        full[1:-1, :] = vec
        return xi, dxi, w, full
    w = eigh_tridiagonal(
        diag, offdiag, select="i", select_range=(0, k - 1), eigvals_only=True
    )
    return xi, dxi, w, None


def _solve_cosine(
    lam: float, n_points: int, k: int, want_vectors: bool,
) -> tuple[np.ndarray, float, np.ndarray, np.ndarray | None]:
    """Eigenpairs of the periodic pendulum -d^2/dth^2 + beta*(1 - cos th).

    Solved in rotor units hbar^2/(2J); eigenvalues are returned already
    converted to hbar*omega0 units (factor lam/2).  The grid is symmetric
    about theta = 0 and excludes the duplicate point at +pi.
    """
    beta = 2.0 / lam**2
    dth = 2.0 * np.pi / n_points
    theta = (np.arange(n_points) - (n_points - 1) / 2.0) * dth
    main = 2.0 / dth**2 + beta * (1.0 - np.cos(theta))
    off = np.full(n_points - 1, -1.0 / dth**2)
    ham = diags([main, off, off], [0, 1, -1], format="lil")
    ham[0, -1] += -1.0 / dth**2
    ham[-1, 0] += -1.0 / dth**2
    # Fixed Lanczos start vector keeps repeated solves bit-identical.
    v0 = np.random.default_rng(0x5EED).standard_normal(n_points)
    w, vec = eigsh(csc_matrix(ham), k=k, sigma=-1.0, which="LM", v0=v0)
    order = np.argsort(w)
    w = w[order] * (lam / 2.0)
    if want_vectors:
        return theta, dth, w, vec[:, order]
    return theta, dth, w, None


def _richardson(coarse: np.ndarray, fine: np.ndarray, ratio: float) -> np.ndarray:
    # ratio = h_fine / h_coarse; eliminates the O(h^2) stencil error.
    return fine + (fine - coarse) * ratio**2 / (1.0 - ratio**2)


def solve_spectrum(
    mol: MoleculeSpec,
    efield: float,
    grid: GridConfig | None = None,
    n_levels: int = 6,
) -> SpectrumResult:
    """Lowest ``n_levels`` eigenpairs of the pendulum Hamiltonian.

    Energies are Richardson-extrapolated from the requested grid and a
    doubled one; ``validity.grid_converged`` records whether doubling the
    requested resolution would still move any reported level by more than
    1e-8 relative.  Eigenvectors are reported on the requested grid.

    Raises ValueError for E = 0 (free-rotor regime), for fewer than two
    levels, and for a quartic hard wall at or beyond the potential
    turnover.  Deep in the rotor regime (lam >> 1) the full-cosine model
    produces near-degenerate parity pairs; results are returned but the
    small-angle flags in ``validity`` will be off.
    """
    if grid is None:
        grid = GridConfig()
    if n_levels < 2:
        raise ValueError(f"n_levels must be >= 2, got {n_levels}")
    if n_levels > grid.n_points - 2:
        raise ValueError("n_levels exceeds the number of grid points")
    if not efield > 0.0:
        raise ValueError(
            "solve_spectrum requires E > 0: the E = 0 rotor limit has no "
            "pendulum scale and its degenerate levels do not fit this result"
        )

    omega0 = intrinsic_frequency(mol, efield)
    lam = anharmonicity(mol, efield)
    scale = np.sqrt(HBAR / (mol.moment_of_inertia * omega0))  # theta = scale * xi
    model = grid.potential_model

    if model == "full_cosine":
        n1, n2, n3 = grid.n_points, 2 * grid.n_points - 1, 4 * grid.n_points - 3
        g1, d1, w1, v1 = _solve_cosine(lam, n1, n_levels, want_vectors=True)
        g2, d2, w2, v2 = _solve_cosine(lam, n2, n_levels, want_vectors=True)
        _, _, w3, _ = _solve_cosine(lam, n3, n_levels, want_vectors=False)
        r12, r23 = d2 / d1, (2.0 * np.pi / n3) / d2
        xi1, xi2 = g1 / scale, g2 / scale
        dxi1, dxi2 = d1 / scale, d2 / scale
    else:
        half_width = grid.half_width_xi
        if half_width is None:
            half_width = default_half_width(lam, model)
        if model == "quartic":
            turnover = np.sqrt(6.0 / lam)
            if half_width >= turnover:
                raise ValueError(
                    f"hard wall L = {half_width:g} lies at or beyond the quartic "
                    f"turnover sqrt(6/lam) = {turnover:g} (lam = {lam:g}); the "
                    "potential is unbounded below there"
                )
        n1, n2, n3 = grid.n_points, 2 * grid.n_points - 1, 4 * grid.n_points - 3
        xi1, dxi1, w1, v1 = _solve_hard_wall(lam, model, half_width, n1, n_levels, True)
        xi2, dxi2, w2, v2 = _solve_hard_wall(lam, model, half_width, n2, n_levels, True)
        _, _, w3, _ = _solve_hard_wall(lam, model, half_width, n3, n_levels, False)
        r12, r23 = 0.5, 0.5

    reported = _richardson(w1, w2, r12)
    refined = _richardson(w2, w3, r23)
    with np.errstate(divide="ignore", invalid="ignore"):
        change = np.abs(refined - reported) / np.abs(refined)
    converged = bool(np.all(change <= _CONVERGENCE_RTOL))

    # Unit trapezoid norm on the xi grid (wall entries are zero, so the
    # trapezoid weight reduces to dxi * sum; the periodic grid is uniform).
    v1 = _fix_signs(v1) / np.sqrt(dxi1)
    v2 = _fix_signs(v2) / np.sqrt(dxi2)

    base = validity_report(mol, efield)
    report = ValidityReport(
        zero_point_spread_rad=base.zero_point_spread_rad,
        small_angle_ok=base.small_angle_ok,
        turnover_xi=base.turnover_xi,
        grid_converged=converged,
    )
    energies = reported * (HBAR * omega0)
    return SpectrumResult(
        omega0=float(omega0),
        lam=float(lam),
        energies=energies,
        gaps=np.diff(energies),
        xi=xi1,
        eigenvectors=v1.T.copy(),
        validity=report,
        molecule=mol,
        efield=float(efield),
        angle_scale=float(scale),
        xi_refined=xi2,
        eigenvectors_refined=v2.T.copy(),
        refine_ratio=float(r12),
    )


def transition_matrix_element(res: SpectrumResult, i: int, j: int) -> float:
    """Angular matrix element <i| theta |j> in rad, by trapezoidal quadrature.

    Uses theta = s * xi with s = sqrt(hbar/(J*omega0)) and Richardson
    extrapolation over the stored grid pair, so harmonic elements are good
    to well below 1e-6 relative at the default grid.
    """
    n = res.n_levels
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"levels ({i}, {j}) outside the {n} computed levels")
    dxi1 = res.xi[1] - res.xi[0]
    dxi2 = res.xi_refined[1] - res.xi_refined[0]
    m1 = np.sum(res.eigenvectors[i] * res.xi * res.eigenvectors[j]) * dxi1
    m2 = np.sum(
        res.eigenvectors_refined[i] * res.xi_refined * res.eigenvectors_refined[j]
    ) * dxi2
    r = res.refine_ratio
    return float(res.angle_scale * (m2 + (m2 - m1) * r**2 / (1.0 - r**2)))
