"""Command-line interface.

Subcommands regenerate the characteristic curves, region boundaries,
velocity-jump and uncertainty tables, densities, classical
trajectories, the torsion mapping, and the full report bundle.

Exit codes: 0 success, 2 validation error, 3 convergence failure,
4 report gate failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import reference as ref
from .classical import ArgConvention, ClassicalParams, trajectory
from .errors import (
    BoundaryNotFoundError,
    ConvergenceError,
    DomainError,
    SeparatrixError,
)
from .mathieu import TRUNCATION_CAP
from .report import build_bundle, write_bundle, write_csv, _HEADERS
from .states import StateFamily, StateSpec, build_state, density
from .symmetry import (
    GapMeasure,
    PairingKind,
    classify_region,
    find_boundary,
    sweep_characteristics,
    well_pair_for_level,
)
from .torsion import TorsionRotor, load_preset, torsion_to_mathieu
from .uncertainty import angular_moments

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3
EXIT_GATE = 4


def _emit(path: str | None, header, rows, fmt: str) -> None:
    if fmt == "json":
        payload = json.dumps(
            [dict(zip(header, row)) for row in rows], indent=2) + "\n"
        if path:
            Path(path).write_text(payload)
        else:
            sys.stdout.write(payload)
        return
    if path:
        write_csv(Path(path), list(header), rows)
    else:
        sys.stdout.write(",".join(header) + "\n")
        for row in rows:
            sys.stdout.write(",".join(repr(c) if isinstance(c, float)
                                      else str(c) for c in row) + "\n")


def cmd_characteristics(args) -> int:
    if args.steps < 2:
        raise DomainError("steps must be >= 2")
    grid = np.unique(np.linspace(args.l_min, args.l_max, args.steps))
    rows = sweep_characteristics(args.n_max, grid)
    _emit(args.out, _HEADERS["fig1_characteristics"], rows, args.format)
    return EXIT_OK


def cmd_regions(args) -> int:
    if args.n_max > 12:
        raise DomainError("n_max must be <= 12")
    eps_rotor = args.epsilon or ref.CALIBRATED_EPS_ROTOR
    eps_well = args.epsilon or ref.CALIBRATED_EPS_WELL
    rows = []
    status = EXIT_OK
    for n in range(1, args.n_max + 1):
        for pairing, eps in ((PairingKind.ROTOR, eps_rotor),
                             (PairingKind.WELL, eps_well)):
            idx = n if pairing is PairingKind.ROTOR else well_pair_for_level(n)
            try:
                l_c = find_boundary(idx, pairing, eps, GapMeasure.RELATIVE).l_c
            except BoundaryNotFoundError:
                rows.append((n, pairing.value, "not-found", eps))
                status = EXIT_GATE
                continue
            rows.append((n, pairing.value, l_c, eps))
    _emit(args.out, ["n", "pairing", "l_c", "epsilon"], rows, args.format)
    return status


def cmd_observables(args) -> int:
    from .report import _observable_tables

    points = dict(ref.OBSERVABLE_EVAL_POINTS)
    t3, t4, fluct = _observable_tables(points)
    base = Path(args.out) if args.out else Path(".")
    base.mkdir(parents=True, exist_ok=True)
    write_csv(base / "table3.csv", _HEADERS["table3"], t3)
    write_csv(base / "table4.csv", _HEADERS["table4"], t4)
    write_csv(base / "fluctuations.csv", _HEADERS["fluctuations"], fluct)
    return EXIT_OK


def cmd_uncertainty(args) -> int:
    from .report import _uncertainty_tables

    t5, t6 = _uncertainty_tables(dict(ref.OBSERVABLE_EVAL_POINTS))
    base = Path(args.out) if args.out else Path(".")
    base.mkdir(parents=True, exist_ok=True)
    write_csv(base / "table5.csv", _HEADERS["table5"], t5)
    write_csv(base / "table6.csv", _HEADERS["table6"], t6)
    return EXIT_OK


def cmd_density(args) -> int:
    if args.points < 16:
        raise DomainError("points must be >= 16")
    family = StateFamily(args.family)
    state = build_state(StateSpec(family, args.n, args.l), args.truncation_cap)
    phi = np.linspace(0.0, 2.0 * np.pi, args.points, endpoint=False)
    rows = [(float(p), float(d)) for p, d in density(state, phi)]
    total = float(np.trapezoid([d for _, d in rows] + [rows[0][1]],
                               dx=2.0 * np.pi / args.points))
    rows.append(("# integral", total))
    _emit(args.out, ["phi", "density"], rows, args.format)
    return EXIT_OK


def cmd_classical(args) -> int:
    params = ClassicalParams(args.omega_prime, args.U, args.E)
    t_grid = np.linspace(0.0, args.t_max, args.steps)
    convention = ArgConvention(args.arg_convention)
    rows = [(float(t), float(v))
            for t, v in trajectory(params, t_grid, convention)]
    _emit(args.out, ["t", "delta_I"], rows, args.format)
    return EXIT_OK


def cmd_torsion(args) -> int:
    if args.preset:
        rotor = load_preset(args.preset)
    else:
        missing = [k for k in ("I1", "I2", "V0", "n_fold")
                   if getattr(args, k) is None]
        if missing:
            raise DomainError(
                f"provide --preset or all of --I1 --I2 --V0 --n-fold "
                f"(missing: {', '.join(missing)})")
        rotor = TorsionRotor(args.I1, args.I2, args.V0, args.n_fold)
    params = torsion_to_mathieu(rotor)
    regions = {
        str(n): classify_region(n, params.l, ref.CALIBRATED_EPS_ROTOR,
                                ref.CALIBRATED_EPS_WELL).value
        for n in range(1, 9)
    }
    payload = {
        "l": params.l,
        "U": params.U,
        "omega_prime": params.omega_prime,
        "energy_scale_J": params.energy_scale,
        "metadata": params.metadata,
        "regions": regions,
    }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args) -> int:
    bundle = build_bundle(truncation_cap=args.truncation_cap)
    out_dir = Path(args.out or "report")
    write_bundle(bundle, out_dir)
    if bundle.gate_failures:
        for msg in bundle.gate_failures:
            print(f"gate failure: {msg}", file=sys.stderr)
        return EXIT_GATE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpendulum",
        description="Quantum pendulum spectra, symmetry regions, and "
                    "velocity-jump observables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output file or directory")
        p.add_argument("--truncation-cap", type=int, default=TRUNCATION_CAP)
        p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("characteristics", help="characteristic-value sweep")
    common(p)
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument("--l-min", dest="l_min", type=float, default=0.0)
    p.add_argument("--l-max", dest="l_max", type=float, default=55.0)
    p.add_argument("--steps", type=int, default=111)
    p.set_defaults(func=cmd_characteristics)

    p = sub.add_parser("regions", help="splitting/merging boundaries")
    common(p)
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument("--epsilon", type=float, default=None,
                   help="override the calibrated gap thresholds")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("observables", help="velocity-jump tables")
    common(p)
    p.set_defaults(func=cmd_observables)

    p = sub.add_parser("uncertainty", help="angular uncertainty tables")
    common(p)
    p.set_defaults(func=cmd_uncertainty)

    p = sub.add_parser("density", help="probability density of one state")
    common(p)
    p.add_argument("--family", required=True,
                   choices=[f.value for f in StateFamily])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-l", type=float, required=True)
    p.add_argument("--points", type=int, default=256)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("classical", help="Jacobi-elliptic trajectory")
    common(p)
    p.add_argument("--E", type=float, required=True)
    p.add_argument("--U", type=float, required=True)
    p.add_argument("--omega-prime", dest="omega_prime", type=float, default=1.0)
    p.add_argument("--t-max", dest="t_max", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--arg-convention", dest="arg_convention",
                   choices=[c.value for c in ArgConvention],
                   default=ArgConvention.AS_PRINTED.value)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("torsion", help="molecular torsion mapping")
    common(p)
    p.add_argument("--preset", default=None, help="molecule preset name")
    p.add_argument("--I1", type=float, default=None)
    p.add_argument("--I2", type=float, default=None)
    p.add_argument("--V0", type=float, default=None)
    p.add_argument("--n-fold", dest="n_fold", type=int, default=None)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("report", help="regenerate all tables and figures")
    common(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, SeparatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
