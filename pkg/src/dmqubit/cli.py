"""Command-line frontend.

Subcommands map one-to-one onto the workbench capabilities: ``spectrum``
(level structure), ``lifetime`` (decay rate and mean lifetime),
``threshold`` (thermal operating field), ``blockade`` (C6 and blockade
radius), ``gate`` (blockade phase-gate truth table) and ``sweep``
(parameter scans).  Machine-readable data goes to --out or stdout;
warnings and validity diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np

from .coherence import DecayInput, decay_rate, mean_lifetime, thermal_threshold_field
from .constants import HBAR, convert_units
from .dynamics import (
    QUBIT_LABELS,
    simulate_gate,
    standard_cz_pulses,
    truth_table_fidelity,
)
from .registry import default_registry, load_registry
from .rydberg import blockade_radius, blockade_regime, c6_coefficient, c6_scaled
from .spectrum import GridConfig, solve_spectrum, validity_report
from .sweep import SWEEP_OUTPUTS, SweepSpec, emit_report, run_sweep

_FIELD_PATTERN = re.compile(r"^\s*([-+]?[\d.]+(?:[eE][-+]?\d+)?)\s*(\S+)?\s*$")

_CLI_MODELS = {"harmonic": "harmonic", "quartic": "quartic", "cosine": "full_cosine"}


def _parse_field(text: str) -> float:
    """Field strength flag: a number with optional V/m or V/um suffix."""
    match = _FIELD_PATTERN.match(text)
    if not match:
        raise ValueError(f"cannot parse field value {text!r}")
    value = float(match.group(1))
    unit = match.group(2) or "V/m"
    return convert_units(value, unit, "V/m")


def _get_registry(args: argparse.Namespace):
    if getattr(args, "registry", None):
        return load_registry(args.registry)
    return default_registry()


def _molecule(args: argparse.Namespace):
    return _get_registry(args)[args.molecule]


def _warn(diagnostics: list[str], message: str) -> None:
    diagnostics.append(f"warning: {message}")


def _cmd_spectrum(args) -> tuple[list[dict], list[str]]:
    mol = _molecule(args)
    efield = _parse_field(args.field)
    grid = GridConfig(
        n_points=args.points,
        half_width_xi=args.half_width,
        potential_model=_CLI_MODELS[args.model],
    )
    res = solve_spectrum(mol, efield, grid, n_levels=args.levels)
    diags = [
        f"omega0 = {res.omega0:.9e} rad/s, lambda = {res.lam:.9e}, "
        f"model = {args.model}"
    ]
    if not res.validity.small_angle_ok:
        _warn(
            diags,
            f"small-angle condition violated: zero-point spread "
            f"{res.validity.zero_point_spread_rad:.3g} rad > 0.1 rad",
        )
    if not res.validity.grid_converged:
        _warn(diags, "eigenvalues not converged at this grid; consider more points")
    rows = [
        {"level": n, "energy_J": float(e)} for n, e in enumerate(res.energies)
    ]
    return rows, diags


def _cmd_lifetime(args) -> tuple[list[dict], list[str]]:
    mol = _molecule(args)
    diags: list[str] = []
    if args.nu_eg is not None:
        nu_eg = args.nu_eg
    elif args.field is not None:
        efield = _parse_field(args.field)
        nu_eg = float(
            np.sqrt(mol.dipole_moment * efield / mol.moment_of_inertia) / (2 * np.pi)
        )
        report = validity_report(mol, efield)
        if not report.small_angle_ok:
            _warn(
                diags,
                f"small-angle condition violated at this field "
                f"(spread {report.zero_point_spread_rad:.3g} rad)",
            )
    else:
        raise ValueError("lifetime needs either --nu-eg or --field")
    inp = DecayInput(nu_eg, mol.moment_of_inertia, mol.dipole_length, args.n_vib)
    rows = [
        {
            "nu_eg_Hz": float(nu_eg),
            "n_vib": args.n_vib,
            "gamma_per_s": float(decay_rate(inp)),
            "tau_s": float(mean_lifetime(inp)),
        }
    ]
    return rows, diags


def _cmd_threshold(args) -> tuple[list[dict], list[str]]:
    mol = _molecule(args)
    estar = thermal_threshold_field(args.temperature, mol)
    rows = [
        {
            "T_K": float(args.temperature),
            "threshold_field_V_per_m": float(estar),
            "threshold_field_V_per_um": float(convert_units(estar, "V/m", "V/um")),
        }
    ]
    return rows, []


def _cmd_blockade(args) -> tuple[list[dict], list[str]]:
    diags: list[str] = []
    if args.c6 is not None:
        c6 = args.c6
    elif args.d1_debye is not None and args.d2_debye is not None and args.delta_j is not None:
        c6 = float(
            c6_coefficient(
                convert_units(args.d1_debye, "Debye", "C*m"),
                convert_units(args.d2_debye, "Debye", "C*m"),
                args.delta_j,
            )
        )
    else:
        raise ValueError("blockade needs --c6 or all of --d1-debye/--d2-debye/--delta-j")
    row: dict = {}
    if args.n_ryd is not None:
        if args.n_ref is None:
            raise ValueError("--n-ryd rescaling needs --n-ref for the reference C6")
        c6 = float(c6_scaled(c6, args.n_ref, args.n_ryd))
        row["n_ryd"] = args.n_ryd
    row["c6_J_m6"] = float(c6)
    row["rabi_rad_per_s"] = float(args.rabi)
    row["blockade_radius_m"] = float(blockade_radius(c6, args.rabi))
    if args.u_int is not None:
        ok = blockade_regime(args.u_int, args.rabi, args.margin)
        row["u_int_J"] = float(args.u_int)
        row["blockade_ok"] = int(ok)
        if not ok:
            _warn(
                diags,
                f"blockade regime not satisfied: U = {args.u_int:.3e} J < "
                f"{args.margin:g} * hbar * Omega",
            )
    return [row], diags


def _cmd_gate(args) -> tuple[list[dict], list[str]]:
    mode = "ideal_blockade" if args.mode == "ideal" else "finite_u"
    u_int = args.u_over_omega * HBAR * args.rabi
    seq = standard_cz_pulses(args.rabi)
    outcomes = simulate_gate(seq, u_int, mode=mode)
    fidelity = truth_table_fidelity(outcomes)
    rows = []
    for label in QUBIT_LABELS:
        out = outcomes[label]
        rows.append(
            {
                "initial": label,
                "phase_re": float(out.phase.real),
                "phase_im": float(out.phase.imag),
                "leakage": float(out.leakage),
                "fidelity": float(fidelity),
            }
        )
    return rows, []


def _cmd_sweep(args) -> tuple[list[dict], list[str]]:
    fixed: dict = {}
    if args.field is not None:
        fixed["E"] = _parse_field(args.field)
    if args.temperature is not None:
        fixed["T"] = args.temperature
    if args.rabi is not None:
        fixed["rabi"] = args.rabi
    if args.n_ryd is not None:
        fixed["n_ryd"] = args.n_ryd
    if args.n_vib != 1:
        fixed["n_vib"] = args.n_vib
    if args.levels != 4:
        fixed["levels"] = args.levels
    if args.model != "quartic":
        fixed["model"] = _CLI_MODELS[args.model]
    if args.c6_ref is not None:
        fixed["c6_ref"] = args.c6_ref
    if args.n_ref is not None:
        fixed["n_ref"] = args.n_ref
    spec = SweepSpec(
        molecule=args.molecule,
        variable=args.var,
        start=args.start,
        stop=args.stop,
        points=args.points,
        spacing=args.spacing,
        outputs=tuple(key.strip() for key in args.outputs.split(",") if key.strip()),
        fixed=fixed,
    )
    rows = run_sweep(spec, _get_registry(args))
    return rows, []


def _add_common(parser: argparse.ArgumentParser, molecule: bool = True) -> None:
    if molecule:
        parser.add_argument("--molecule", required=True, help="molecule name")
        parser.add_argument("--registry", help="registry JSON path (default: bundled)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="output file (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmqubit",
        description="Pendulum qubits of dipolar molecules: spectra, lifetimes, "
        "thresholds, blockade and gate simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="level structure of the pendulum Hamiltonian")
    _add_common(p)
    p.add_argument("--field", required=True, help="field strength, e.g. 3e10 or 1e4V/um")
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--model", choices=tuple(_CLI_MODELS), default="quartic")
    p.add_argument("--points", type=int, default=2001)
    p.add_argument("--half-width", type=float, default=None, help="hard wall in xi")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("lifetime", help="decay rate and mean lifetime")
    _add_common(p)
    p.add_argument("--nu-eg", type=float, help="transition frequency in Hz")
    p.add_argument("--field", help="derive nu_eg from this field instead")
    p.add_argument("--n-vib", type=int, default=1)
    p.set_defaults(handler=_cmd_lifetime)

    p = sub.add_parser("threshold", help="thermal noise-suppression field")
    _add_common(p)
    p.add_argument("--temperature", type=float, required=True, help="temperature in K")
    p.set_defaults(handler=_cmd_threshold)

    p = sub.add_parser("blockade", help="C6 coefficient and blockade radius")
    _add_common(p, molecule=False)
    p.add_argument("--c6", type=float, help="C6 in J*m^6")
    p.add_argument("--d1-debye", type=float, help="transition dipole 1 in Debye")
    p.add_argument("--d2-debye", type=float, help="transition dipole 2 in Debye")
    p.add_argument("--delta-j", type=float, help="Foerster defect in J")
    p.add_argument("--rabi", type=float, required=True, help="Rabi frequency in rad/s")
    p.add_argument("--n-ryd", type=int, help="rescale C6 to this principal number")
    p.add_argument("--n-ref", type=int, help="principal number of the reference C6")
    p.add_argument("--u-int", type=float, help="van der Waals shift U in J")
    p.add_argument("--margin", type=float, default=10.0)
    p.set_defaults(handler=_cmd_blockade)

    p = sub.add_parser("gate", help="pi-2pi-pi blockade phase gate truth table")
    _add_common(p, molecule=False)
    p.add_argument("--rabi", type=float, required=True, help="Rabi frequency in rad/s")
    p.add_argument("--u-over-omega", type=float, default=100.0,
                   help="interaction in units of hbar*Omega")
    p.add_argument("--mode", choices=("ideal", "finite"), default="ideal")
    p.set_defaults(handler=_cmd_gate)

    p = sub.add_parser("sweep", help="scan one variable, report requested outputs")
    _add_common(p)
    p.add_argument("--var", required=True, choices=("E", "T", "n_ryd", "rabi"))
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    p.add_argument(
        "--outputs",
        required=True,
        help=f"comma-separated subset of: {', '.join(SWEEP_OUTPUTS)}",
    )
    p.add_argument("--field", help="fixed field strength (V/m or V/um suffix)")
    p.add_argument("--temperature", type=float, help="fixed temperature in K")
    p.add_argument("--rabi", type=float, help="fixed Rabi frequency in rad/s")
    p.add_argument("--n-ryd", type=int, help="fixed principal quantum number")
    p.add_argument("--n-vib", type=int, default=1)
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--model", choices=tuple(_CLI_MODELS), default="quartic")
    p.add_argument("--c6-ref", type=float, help="reference C6 in J*m^6")
    p.add_argument("--n-ref", type=int, help="principal number of the reference C6")
    p.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        rows, diagnostics = args.handler(args)
        for line in diagnostics:
            print(line, file=sys.stderr)
        emit_report(rows, args.format, args.out)
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: invalid-input: {message}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io-error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
