import numpy as np
import pytest

from dmqubit import GridConfig, MoleculeSpec, default_registry, solve_spectrum
from dmqubit.constants import HBAR


@pytest.fixture(scope="session")
def hcl() -> MoleculeSpec:
    return default_registry()["HCl"]


def field_for_lambda(mol: MoleculeSpec, lam: float) -> float:
    """Field strength at which the anharmonicity parameter equals lam."""
    return HBAR**2 / (lam**2 * mol.dipole_moment * mol.moment_of_inertia)


@pytest.fixture(scope="session")
def harmonic_result(hcl):
    """Harmonic-model spectrum at lam = 0.1, default grid, 6 levels."""
    efield = field_for_lambda(hcl, 0.1)
    return solve_spectrum(
        hcl, efield, GridConfig(potential_model="harmonic"), n_levels=6
    )


@pytest.fixture(scope="session")
def quartic_result_001(hcl):
    """Quartic-model spectrum at lam = 0.01, default grid, 5 levels."""
    efield = field_for_lambda(hcl, 0.01)
    return solve_spectrum(
        hcl, efield, GridConfig(potential_model="quartic"), n_levels=5
    )


def scaled_energies(res) -> np.ndarray:
    """Energies in units of hbar*omega0."""
    return res.energies / (HBAR * res.omega0)
