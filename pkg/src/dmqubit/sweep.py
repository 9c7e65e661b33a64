"""Parameter sweeps over the workbench formulas, with CSV/JSON reports.

A sweep varies one of E (field, V/m), T (temperature, K), n_ryd or rabi
(rad/s) over a linear or log grid, holding the others fixed, and evaluates
a requested subset of outputs per point.  All emitted numbers are SI and
column names carry their units.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .coherence import DecayInput, decay_rate, mean_lifetime, thermal_threshold_field
from .registry import MoleculeRegistry
from .rydberg import blockade_radius, c6_scaled
from .spectrum import GridConfig, anharmonicity, intrinsic_frequency, solve_spectrum, validity_report
from .constants import HBAR, K_B

SWEEP_VARIABLES = ("E", "T", "n_ryd", "rabi")
SWEEP_OUTPUTS = (
    "omega0",
    "lambda",
    "gaps",
    "gamma",
    "tau",
    "threshold_field",
    "c6",
    "blockade_radius",
)
_SPECTRAL_OUTPUTS = {"omega0", "lambda", "gaps", "gamma", "tau"}
_FIXED_KEYS = ("E", "T", "rabi", "n_ryd", "n_vib", "levels", "model", "c6_ref", "n_ref")

_VARIABLE_COLUMNS = {
    "E": "E_V_per_m",
    "T": "T_K",
    "n_ryd": "n_ryd",
    "rabi": "rabi_rad_per_s",
}


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: molecule, swept variable, range and requested outputs.

    ``fixed`` supplies values for the non-swept inputs plus options
    (n_vib, levels, model, c6_ref, n_ref).
    """

    molecule: str
    variable: str
    start: float
    stop: float
    points: int
    spacing: str = "linear"
    outputs: tuple[str, ...] = ("omega0",)
    fixed: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(
                f"unknown sweep variable {self.variable!r}; "
                f"choose from {', '.join(SWEEP_VARIABLES)}"
            )
        if self.points < 2:
            raise ValueError(f"points must be >= 2, got {self.points}")
        if not self.start < self.stop:
            raise ValueError(f"start must be < stop, got [{self.start}, {self.stop}]")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and not self.start > 0.0:
            raise ValueError("log spacing requires start > 0")
        if not self.outputs:
            raise ValueError("at least one output must be requested")
        for key in self.outputs:
            if key not in SWEEP_OUTPUTS:
                raise ValueError(
                    f"unknown output key {key!r}; "
                    f"choose from {', '.join(SWEEP_OUTPUTS)}"
                )
        for key in self.fixed:
            if key not in _FIXED_KEYS:
                raise ValueError(f"unknown fixed parameter {key!r}")


def _grid_values(spec: SweepSpec) -> np.ndarray:
    if spec.spacing == "log":
        return np.geomspace(spec.start, spec.stop, spec.points)
    return np.linspace(spec.start, spec.stop, spec.points)


def _require(params: dict, key: str, output: str) -> Any:
    value = params.get(key)
    if value is None:
        raise ValueError(f"output {output!r} requires a value for {key!r}")
    return value


def run_sweep(spec: SweepSpec, registry: MoleculeRegistry) -> list[dict]:
    """Evaluate the sweep; rows come back in ascending swept-value order."""
    mol = registry[spec.molecule]
    n_vib = int(spec.fixed.get("n_vib", 1))
    levels = int(spec.fixed.get("levels", 4))
    model = spec.fixed.get("model", "quartic")

    rows: list[dict] = []
    for value in _grid_values(spec):
        params: dict[str, Any] = {
            "E": spec.fixed.get("E"),
            "T": spec.fixed.get("T"),
            "rabi": spec.fixed.get("rabi"),
            "n_ryd": spec.fixed.get("n_ryd"),
        }
        params[spec.variable] = float(value) if spec.variable != "n_ryd" else int(value)

        row: dict[str, Any] = {_VARIABLE_COLUMNS[spec.variable]: params[spec.variable]}
        for output in spec.outputs:
            if output == "omega0":
                efield = _require(params, "E", output)
                row["omega0_rad_per_s"] = float(intrinsic_frequency(mol, efield))
            elif output == "lambda":
                efield = _require(params, "E", output)
                row["lambda"] = float(anharmonicity(mol, efield))
            elif output == "gaps":
                efield = _require(params, "E", output)
                res = solve_spectrum(
                    mol, efield, GridConfig(potential_model=model), n_levels=levels
                )
                for n, gap in enumerate(res.gaps):
                    row[f"gap_{n}_J"] = float(gap)
            elif output in ("gamma", "tau"):
                efield = _require(params, "E", output)
                nu_eg = intrinsic_frequency(mol, efield) / (2.0 * np.pi)
                inp = DecayInput(nu_eg, mol.moment_of_inertia, mol.dipole_length, n_vib)
                if output == "gamma":
                    row["gamma_per_s"] = float(decay_rate(inp))
                else:
                    row["tau_s"] = float(mean_lifetime(inp))
            elif output == "threshold_field":
                temperature = _require(params, "T", output)
                row["threshold_field_V_per_m"] = float(
                    thermal_threshold_field(temperature, mol)
                )
            elif output in ("c6", "blockade_radius"):
                c6_ref = _require(dict(spec.fixed), "c6_ref", output)
                n_ref = int(_require(dict(spec.fixed), "n_ref", output))
                n_ryd = int(_require(params, "n_ryd", output))
                c6 = float(c6_scaled(c6_ref, n_ref, n_ryd))
                if output == "c6":
                    row["c6_J_m6"] = c6
                else:
                    rabi = _require(params, "rabi", output)
                    row["blockade_radius_m"] = float(blockade_radius(c6, rabi))

        if params["E"] is not None and _SPECTRAL_OUTPUTS & set(spec.outputs):
            report = validity_report(mol, params["E"])
            row["small_angle_ok"] = int(report.small_angle_ok)
            if params["T"] is not None:
                suppressed = K_B * params["T"] < HBAR * intrinsic_frequency(
                    mol, params["E"]
                )
                row["noise_suppressed"] = int(suppressed)
        rows.append(row)
    return rows


def format_report(rows: list[dict], fmt: str = "csv") -> str:
    """Render rows as CSV (scientific notation, 10 significant digits) or
    JSON (exact float round-trip)."""
    if not rows:
        raise ValueError("cannot emit an empty report")
    columns = list(rows[0])
    for i, row in enumerate(rows):
        if list(row) != columns:
            raise ValueError(f"row {i} has a different column set than row 0")
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}; use 'csv' or 'json'")

    def cell(value: Any) -> str:
        if isinstance(value, bool):
            return str(int(value))
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            return f"{value:.9e}"
        return str(value)

    lines = [",".join(columns)]
    lines.extend(",".join(cell(row[c]) for c in columns) for row in rows)
    return "\n".join(lines) + "\n"


def emit_report(
    rows: list[dict], fmt: str = "csv", destination: str | Path | None = None
) -> None:
    """Write a report to ``destination`` (a path, or stdout when None)."""
    text = format_report(rows, fmt)
    if destination is None:
        sys.stdout.write(text)
    else:
        Path(destination).write_text(text)
