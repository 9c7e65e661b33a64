"""Molecule registry: named MoleculeSpec records in a human-editable JSON file.

File schema (field names carry their units to prevent silent unit errors)::

    {
      "molecules": [
        {"name": "HCl", "p_debye": 1.0, "J_kgm2": 2.5e-47, "l_m": 1.28e-10}
      ]
    }

Dipole moments are stored in Debye in the file and converted to C*m on
load; everything downstream is SI.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .constants import DEBYE
from .spectrum import MoleculeSpec

_REQUIRED_FIELDS = ("name", "p_debye", "J_kgm2", "l_m")


@dataclass(frozen=True)
class MoleculeRegistry:
    """Molecule records keyed by unique, case-sensitive name."""

    molecules: dict[str, MoleculeSpec]

    def __contains__(self, name: str) -> bool:
        return name in self.molecules

    def __getitem__(self, name: str) -> MoleculeSpec:
        try:
            return self.molecules[name]
        except KeyError:
            known = ", ".join(sorted(self.molecules))
            raise KeyError(f"unknown molecule {name!r} (registry has: {known})") from None

    def names(self) -> list[str]:
        return list(self.molecules)


def _parse_record(rec: dict, index: int) -> MoleculeSpec:
    if not isinstance(rec, dict):
        raise ValueError(f"molecule entry {index} is not an object")
    missing = [f for f in _REQUIRED_FIELDS if f not in rec]
    if missing:
        raise ValueError(
            f"molecule entry {index} is missing field(s): {', '.join(missing)}"
        )
    name = rec["name"]
    if not isinstance(name, str) or not name:
        raise ValueError(f"molecule entry {index}: name must be a nonempty string")
    for key in ("p_debye", "J_kgm2", "l_m"):
        value = rec[key]
        if not isinstance(value, (int, float)) or not value > 0.0:
            raise ValueError(
                f"molecule {name!r}: field {key} must be a positive number, "
                f"got {value!r}"
            )
    return MoleculeSpec(
        name=name,
        dipole_moment=rec["p_debye"] * DEBYE,
        moment_of_inertia=float(rec["J_kgm2"]),
        dipole_length=float(rec["l_m"]),
    )


def _registry_from_obj(obj: dict, source: str) -> MoleculeRegistry:
    if not isinstance(obj, dict) or "molecules" not in obj:
        raise ValueError(f"{source}: expected a top-level 'molecules' array")
    molecules: dict[str, MoleculeSpec] = {}
    for i, rec in enumerate(obj["molecules"]):
        spec = _parse_record(rec, i)
        if spec.name in molecules:
            raise ValueError(f"{source}: duplicate molecule name {spec.name!r}")
        molecules[spec.name] = spec
    return MoleculeRegistry(molecules)


def load_registry(path: str | Path) -> MoleculeRegistry:
    """Load and validate a registry file; diagnostics name the offending
    line or field."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ValueError(f"cannot read registry {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return _registry_from_obj(obj, str(path))


def default_registry() -> MoleculeRegistry:
    """The bundled registry (ships the HCl record)."""
    text = resources.files("dmqubit").joinpath("data/molecules.json").read_text()
    return _registry_from_obj(json.loads(text), "bundled registry")


def _si_to_debye_exact(p_si: float) -> float:
    # Pick the Debye value whose re-conversion reproduces p_si bit-exactly;
    # plain division can be one ulp off after the round trip.
    cand = p_si / DEBYE
    if cand * DEBYE == p_si:
        return cand
    for direction in (math.inf, -math.inf):
        step = cand
        for _ in range(4):
            step = math.nextafter(step, direction)
            if step * DEBYE == p_si:
                return step
    return cand


def save_registry(registry: MoleculeRegistry, path: str | Path) -> None:
    """Write a registry back to the JSON file format."""
    records = [
        {
            "name": spec.name,
            "p_debye": _si_to_debye_exact(spec.dipole_moment),
            "J_kgm2": spec.moment_of_inertia,
            "l_m": spec.dipole_length,
        }
        for spec in registry.molecules.values()
    ]
    Path(path).write_text(json.dumps({"molecules": records}, indent=2) + "\n")
