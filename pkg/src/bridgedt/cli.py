"""Command-line front end: ``bridgedt <command> ...``.

Exit codes: 0 on success, 2 for bad input (parse or validation errors),
3 for numerical failures. Diagnostics go to stderr as a single line.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

from . import design, metrics
from .closedform import circuit_polynomials, derived_coefficients, transmission_zeros
from .errors import BridgedTError, InputError, NumericalError, TopologyError
from .mna import bridged_t_params
from .netlist import bridged_t_netlist, load_netlist, parse_value
from .report import format_coefficients, format_pole_zero, verify_circuit
from .sweep import METHODS, SweepGrid, run_sweep
from .touchstone import write_csv, write_touchstone

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3


def _quantity(text: str) -> float:
    try:
        return parse_value(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_sweep(args) -> int:
    circuit = load_netlist(args.netlist).circuit
    grid = SweepGrid(args.start, args.stop, args.points, args.spacing)
    table = run_sweep(circuit, grid, args.method, parallel=args.parallel)
    if args.out_s2p:
        _write(args.out_s2p, write_touchstone(table))
    if args.out_csv:
        _write(args.out_csv, write_csv(table))
    if not (args.out_s2p or args.out_csv):
        sys.stdout.write(write_csv(table))
    if table.nudged:
        print(f"note: {len(table.nudged)} point(s) nudged off resonance", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    circuit = load_netlist(args.netlist).circuit
    grid = SweepGrid(args.start, args.stop, args.points, "log")
    report = verify_circuit(circuit, grid, args.rel_tol)
    print(f"verify {args.netlist}")
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_NUMERIC


def cmd_design(args) -> int:
    t0 = time.perf_counter()
    p = design.design_hpf(args.fc, args.z0)
    elapsed = time.perf_counter() - t0
    fc = args.fc
    table = design.sweep_params(p, args.z0, design.design_grid(fc))
    corner = metrics.corner_frequency(table, "S21")
    checks = design.passband_check(p, args.z0, fc)
    print(f"bridged-T high-pass, fc = {fc:g} Hz, z0 = {args.z0:g} ohm ({elapsed:.2f} s)")
    for name in ("L1", "L2", "L3", "C1", "C2"):
        print(f"  {name} = {getattr(p, name):.9e}")
    print(f"measured S21 corner: {corner:.9g} Hz ({100 * (corner / fc - 1):+.2e} %)")
    print(f"|S21| at fc/2: {checks['s21_db_half_fc']:.2f} dB, at 100 fc: {checks['s21_db_100fc']:.3e} dB")
    finite = [z for z in transmission_zeros(derived_coefficients(p, args.z0)) if z.imag > 0]
    for z in finite:
        print(f"transmission zero at {z.imag / (2 * math.pi):.6g} Hz")
    # transition band either side of the corner
    for which, f1, f2 in (("S21", 0.75 * fc, fc), ("S11", fc, 1.5 * fc)):
        slope = metrics.rolloff_slope(table, which, f1, f2)
        print(f"{which} slope {f1:.4g}..{f2:.4g} Hz: {slope:+.2f} dB/GHz")
    if args.out_netlist:
        _write(args.out_netlist, bridged_t_netlist(p, args.z0, f"high-pass fc={fc:g}"))
    return EXIT_OK


def cmd_pz(args) -> int:
    circuit = load_netlist(args.netlist).circuit
    try:
        polys = derived_coefficients(bridged_t_params(circuit), circuit.z0)
    except TopologyError:
        polys = circuit_polynomials(circuit)
    for line in format_pole_zero(polys):
        print(line)
    return EXIT_OK


def cmd_coeffs(args) -> int:
    circuit = load_netlist(args.netlist).circuit
    for line in format_coefficients(bridged_t_params(circuit), circuit.z0):
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bridgedt", description="Bridged-T two-port analysis and design.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sweep", help="frequency sweep to Touchstone and/or CSV")
    sp.add_argument("--netlist", required=True)
    sp.add_argument("--start", type=_quantity, required=True, help="Hz, engineering suffixes allowed")
    sp.add_argument("--stop", type=_quantity, required=True)
    sp.add_argument("--points", type=int, default=401)
    sp.add_argument("--spacing", choices=("log", "linear"), default="log")
    sp.add_argument("--method", choices=METHODS, default="mna")
    sp.add_argument("--out-s2p")
    sp.add_argument("--out-csv")
    sp.add_argument("--parallel", action="store_true", help="evaluate points on a thread pool")
    sp.set_defaults(func=cmd_sweep)

    vp = sub.add_parser("verify", help="check every evaluation route against nodal analysis")
    vp.add_argument("--netlist", required=True)
    vp.add_argument("--rel-tol", type=float, default=1e-9)
    vp.add_argument("--start", type=_quantity, default=1e7)
    vp.add_argument("--stop", type=_quantity, default=1e11)
    vp.add_argument("--points", type=int, default=401)
    vp.set_defaults(func=cmd_verify)

    dp = sub.add_parser("design-hpf", help="synthesise a high-pass with L1 == L2")
    dp.add_argument("--fc", type=_quantity, required=True)
    dp.add_argument("--z0", type=_quantity, default=50.0)
    dp.add_argument("--out-netlist")
    dp.set_defaults(func=cmd_design)

    pp = sub.add_parser("pz", help="poles and zeros of S11 and S21")
    pp.add_argument("--netlist", required=True)
    pp.set_defaults(func=cmd_pz)

    cp = sub.add_parser("coeffs", help="printed vs derived polynomial coefficients")
    cp.add_argument("--netlist", required=True)
    cp.set_defaults(func=cmd_coeffs)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"bridgedt: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"bridgedt: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except BridgedTError as exc:
        print(f"bridgedt: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
