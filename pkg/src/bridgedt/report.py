"""Cross-checks and comparison reports shared by the CLI, tests and demos."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .closedform import (
    SParamPolynomials,
    circuit_polynomials,
    coefficient_names,
    derived_coefficients,
    verbatim_coefficients,
)
from .elements import BridgedTParams
from .errors import SingularAtFrequency, TopologyError
from .mna import Circuit, bridged_t_params
from .sweep import SweepGrid, SweepTable, polynomial_table, run_sweep
from .twoport import abcd_to_s, bridged_t_pi, pi_to_abcd, verbatim_pi_admittances

__all__ = [
    "relative_deviation",
    "PathResult",
    "VerifyReport",
    "verify_circuit",
    "coefficient_rows",
    "format_coefficients",
    "format_pole_zero",
]


def relative_deviation(s, ref) -> np.ndarray:
    """Per-row ``max |S - S_ref|`` over the four entries, divided by ``max |S_ref|``.

    Normalising by the largest entry keeps the measure meaningful at
    transmission zeros where a single entry goes to zero.
    """
    s = np.asarray(s, dtype=complex).reshape(-1, 4)
    ref = np.asarray(ref, dtype=complex).reshape(-1, 4)
    scale = np.max(np.abs(ref), axis=1)
    return np.max(np.abs(s - ref), axis=1) / scale


@dataclass
class PathResult:
    name: str
    max_deviation: float
    asserted: bool
    note: str = ""

    def passed(self, tol: float) -> bool:
        return (not self.asserted) or self.max_deviation < tol


@dataclass
class VerifyReport:
    reference: SweepTable
    rel_tol: float
    paths: list[PathResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.passed(self.rel_tol) for p in self.paths)

    def lines(self) -> list[str]:
        f = self.reference.frequencies
        out = [
            f"reference: nodal analysis, {len(f)} points, {f[0]:g}..{f[-1]:g} Hz, "
            f"z0 = {self.reference.z0:g} ohm, nudged rows: {len(self.reference.nudged)}",
            f"tolerance: max relative deviation < {self.rel_tol:g}",
        ]
        for p in self.paths:
            if p.asserted:
                verdict = "PASS" if p.passed(self.rel_tol) else "FAIL"
            else:
                verdict = "info"
            note = f"  ({p.note})" if p.note else ""
            out.append(f"  {p.name:<26} {p.max_deviation:.3e}  {verdict}{note}")
        out.append("result: " + ("PASS" if self.ok else "FAIL"))
        return out


def _pi_route(p: BridgedTParams, freqs, z0, verbatim=False) -> np.ndarray:
    build = verbatim_pi_admittances if verbatim else bridged_t_pi
    out = np.empty((len(freqs), 2, 2), dtype=complex)
    for k, f in enumerate(freqs):
        try:
            out[k] = abcd_to_s(pi_to_abcd(build(p, 2j * math.pi * f)), z0).as_array()
        except SingularAtFrequency:
            out[k] = np.nan
    return out


def verify_circuit(c: Circuit, grid: SweepGrid, rel_tol: float = 1e-9) -> VerifyReport:
    """Compare every available evaluation route against the nodal solver."""
    ref = run_sweep(c, grid, "mna")
    report = VerifyReport(ref, rel_tol)
    keep = np.ones(len(ref), dtype=bool)
    keep[list(ref.nudged)] = False

    def worst(s):
        dev = relative_deviation(s[keep], ref.s[keep])
        return float(np.nanmax(dev)) if np.any(np.isfinite(dev)) else math.inf

    try:
        p = bridged_t_params(c)
    except TopologyError:
        p = None
    if p is None:
        try:
            polys = circuit_polynomials(c)
        except Exception:
            polys = None
        if polys is not None:
            table = polynomial_table(polys, ref.frequencies)
            report.paths.append(PathResult("closed-form (derived)", worst(table.s), True))
        return report

    closed = polynomial_table(derived_coefficients(p, c.z0), ref.frequencies)
    report.paths.append(PathResult("closed-form (derived)", worst(closed.s), True))
    composed = run_sweep(c, grid, "composed")
    report.paths.append(PathResult("composed (cascade || C1)", worst(composed.s), True))
    report.paths.append(PathResult("pi (star-delta)", worst(_pi_route(p, ref.frequencies, c.z0)), True))
    verbatim = verbatim_coefficients(p, c.z0)
    vt = verbatim.evaluate(2j * math.pi * ref.frequencies)
    vt[:, 1, 1] = vt[:, 0, 0] if p.L1 == p.L2 else np.nan
    report.paths.append(
        PathResult("verbatim coefficients", worst(vt[:, :, :]), False, "S11/S21 from printed N, N', D")
    )
    report.paths.append(
        PathResult(
            "verbatim pi admittances",
            worst(_pi_route(p, ref.frequencies, c.z0, verbatim=True)),
            False,
            "printed shunt/series arm expressions",
        )
    )
    return report


def coefficient_rows(p: BridgedTParams, z0: float = 50.0) -> list[tuple[str, float, float, float]]:
    """``(name, verbatim, derived, relative difference)`` for every coefficient."""
    v = verbatim_coefficients(p, z0).table()
    d = derived_coefficients(p, z0).table()
    rows = []
    for name in coefficient_names():
        a, b = v[name], d[name]
        scale = max(abs(a), abs(b))
        rel = 0.0 if scale == 0 else abs(a - b) / scale
        rows.append((name, a, b, rel))
    return rows


def format_coefficients(p: BridgedTParams, z0: float = 50.0) -> list[str]:
    rows = coefficient_rows(p, z0)
    v = dict((r[0], r[1]) for r in rows)
    d = dict((r[0], r[2]) for r in rows)
    out = [
        f"components: L1={p.L1:.6g} L2={p.L2:.6g} L3={p.L3:.6g} C1={p.C1:.6g} C2={p.C2:.6g}  z0={z0:g}",
        "normalisation: D0 = C1*L3*z0^2 in both columns",
        f"{'coeff':<6} {'verbatim':>16} {'derived':>16} {'rel diff':>10}",
    ]
    for name, a, b, rel in rows:
        out.append(f"{name:<6} {a:>16.8e} {b:>16.8e} {rel:>10.3e}")
    same = v["N0"] == v["D0"]
    out.append(f"check N0 == D0 (verbatim): {'agree' if same else 'DIFFER'} ({v['N0']:.8e} vs {v['D0']:.8e})")
    d0 = abs(d["D0"] - v["D0"]) <= 1e-12 * abs(v["D0"])
    out.append(f"check D0 verbatim == D0 derived: {'agree' if d0 else 'DIFFER'}")
    sign = "N0 = -D0" if d["N0"] == -d["D0"] else f"N0/D0 = {d['N0'] / d['D0']:.6g}"
    out.append(f"derived: {sign} (S11 -> -1 as s -> 0: the inductors short both ports to ground)")
    diffs = [r for r in rows if r[3] > 1e-9]
    out.append(f"coefficients differing by more than 1e-9 relative: {len(diffs)} of {len(rows)}")
    return out


def _fmt_root(r: complex) -> str:
    return f"{r.real:+.6e} {r.imag:+.6e}j  (|w|/2pi = {abs(r) / (2 * math.pi):.6g} Hz)"


def format_pole_zero(polys: SParamPolynomials) -> list[str]:
    out = [f"source: {polys.source}, z0 = {polys.z0:g} ohm"]
    sections = [("poles (denominator)", polys.den), ("S11 zeros", polys.s11_num), ("S21 zeros", polys.s21_num)]
    for title, poly in sections:
        roots = poly.roots() if poly.degree >= 1 else []
        out.append(f"{title}: {len(roots)}")
        out.extend("  " + _fmt_root(r) for r in roots)
    return out
