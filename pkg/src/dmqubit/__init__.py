"""Workbench for pendulum qubits made of electric dipolar molecules.

Computes the librational spectrum of a dipole in a uniform field, the
spontaneous-emission lifetime of the qubit levels, thermal operating
thresholds, Rydberg-blockade parameters, and simulates single-qubit decay
and the two-molecule blockade phase gate.
"""

from .constants import CONSTANTS, Constants, convert_units
from .coherence import (
    DecayInput,
    QubitParams,
    decay_rate,
    harmonic_angle_element_squared,
    mean_lifetime,
    qubit_summary,
    thermal_threshold_field,
)
from .dynamics import (
    GateOutcome,
    PulseSegment,
    PulseSequence,
    antisymmetric_single_excited,
    basis_index,
    basis_state,
    collective_rabi,
    evolve_lindblad,
    simulate_gate,
    standard_cz_pulses,
    symmetric_single_excited,
    truth_table_fidelity,
    validate_density_matrix,
)
from .registry import MoleculeRegistry, default_registry, load_registry, save_registry
from .rydberg import (
    RydbergParams,
    blockade_radius,
    blockade_regime,
    c6_coefficient,
    c6_scaled,
)
from .spectrum import (
    GridConfig,
    MoleculeSpec,
    SpectrumResult,
    ValidityReport,
    anharmonicity,
    intrinsic_frequency,
    solve_spectrum,
    transition_matrix_element,
    validity_report,
)
from .sweep import SweepSpec, emit_report, format_report, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "Constants",
    "DecayInput",
    "GateOutcome",
    "GridConfig",
    "MoleculeRegistry",
    "MoleculeSpec",
    "PulseSegment",
    "PulseSequence",
    "QubitParams",
    "RydbergParams",
    "SpectrumResult",
    "SweepSpec",
    "ValidityReport",
    "anharmonicity",
    "antisymmetric_single_excited",
    "basis_index",
    "basis_state",
    "blockade_radius",
    "blockade_regime",
    "c6_coefficient",
    "c6_scaled",
    "collective_rabi",
    "convert_units",
    "decay_rate",
    "default_registry",
    "emit_report",
    "evolve_lindblad",
    "format_report",
    "harmonic_angle_element_squared",
    "intrinsic_frequency",
    "load_registry",
    "mean_lifetime",
    "qubit_summary",
    "run_sweep",
    "save_registry",
    "simulate_gate",
    "solve_spectrum",
    "standard_cz_pulses",
    "symmetric_single_excited",
    "thermal_threshold_field",
    "transition_matrix_element",
    "truth_table_fidelity",
    "validate_density_matrix",
    "validity_report",
]
