"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (also collected
into the terminal summary) before asserting.
"""

import math
import time

import numpy as np
import pytest
from conftest import random_params, record

from bridgedt import BridgedTParams, bridged_t_circuit, load_netlist
from bridgedt.cli import main
from bridgedt.closedform import circuit_polynomials, derived_coefficients, transmission_zeros
from bridgedt.elements import Element
from bridgedt.metrics import corner_frequency, rolloff_slope
from bridgedt.mna import Circuit, Port, bridged_t_params
from bridgedt.report import coefficient_rows, relative_deviation
from bridgedt.sweep import SweepGrid, run_sweep
from bridgedt.touchstone import read_touchstone, write_touchstone

GRID = SweepGrid(1e7, 1e11, 401, "log")
SEED = 7


def reactive_test_set():
    rng = np.random.default_rng(SEED)
    sets = random_params(rng, 20)
    sets.append(BridgedTParams(10e-9, 10e-9, 8e-9, 2.2e-12, 3.2e-12))
    sets.append(BridgedTParams(6e-9, 12e-9, 8e-9, 2.2e-12, 3.2e-12))
    return sets


def odd_weight(poly, w):
    """Largest odd-power term of ``poly`` at ``|s| = w``, relative to its largest term."""
    terms = [abs(c) * w**k for k, c in enumerate(poly.coeffs)]
    return max(terms[1::2]) / max(terms)


def test_criterion_1_oracle_equivalence():
    t0 = time.perf_counter()
    worst = {"closed-form": 0.0, "composed": 0.0}
    for p in random_params(np.random.default_rng(SEED), 20):
        c = bridged_t_circuit(p, 50.0)
        ref = run_sweep(c, GRID, "mna")
        keep = np.ones(len(ref), dtype=bool)
        keep[list(ref.nudged)] = False
        for method in worst:
            t = run_sweep(c, GRID, method)
            dev = relative_deviation(t.s[keep], ref.s[keep]).max()
            worst[method] = max(worst[method], float(dev))
    elapsed = time.perf_counter() - t0
    ok = max(worst.values()) < 1e-9 and elapsed < 5.0
    record(
        1,
        ok,
        f"max rel dev closed-form {worst['closed-form']:.2e}, composed {worst['composed']:.2e} "
        f"(< 1e-9), {elapsed:.2f} s (< 5 s)",
    )
    assert ok


def test_criterion_2_reciprocity_and_unitarity():
    recip = unit = 0.0
    for p in reactive_test_set():
        c = bridged_t_circuit(p, 50.0)
        for method in ("mna", "closed-form", "composed"):
            s = run_sweep(c, GRID, method).s
            recip = max(recip, float(np.max(np.abs(s[:, 0, 1] - s[:, 1, 0]))))
            p1 = np.abs(s[:, 0, 0]) ** 2 + np.abs(s[:, 1, 0]) ** 2
            p2 = np.abs(s[:, 1, 1]) ** 2 + np.abs(s[:, 0, 1]) ** 2
            unit = max(unit, float(np.max(np.abs(p1 - 1))), float(np.max(np.abs(p2 - 1))))
    ok = recip < 1e-12 and unit < 1e-9
    record(2, ok, f"max |s12 - s21| {recip:.2e} (< 1e-12), max power imbalance {unit:.2e} (< 1e-9)")
    assert ok


def test_criterion_3_symmetry():
    odd_sym = odd_raw = s11_s22 = 0.0
    odd_asym = math.inf
    for p in random_params(np.random.default_rng(SEED), 20):
        sym = BridgedTParams(p.L1, p.L1, p.L3, p.C1, p.C2)
        w = sym.tank_resonance
        polys = derived_coefficients(sym, 50.0)
        odd_sym = max(odd_sym, odd_weight(polys.s11_num, w))
        # the same measure before any coefficient tidying
        raw = circuit_polynomials(bridged_t_circuit(sym, 50.0))
        odd_raw = max(odd_raw, odd_weight(raw.s11_num, w))
        for method in ("mna", "closed-form", "composed"):
            s = run_sweep(bridged_t_circuit(sym, 50.0), GRID, method).s
            s11_s22 = max(s11_s22, float(np.max(np.abs(s[:, 0, 0] - s[:, 1, 1]))))
        asym = BridgedTParams(p.L1, 2 * p.L1, p.L3, p.C1, p.C2)
        odd_asym = min(odd_asym, odd_weight(derived_coefficients(asym, 50.0).s11_num, asym.tank_resonance))
    ok = odd_sym < 1e-12 and odd_raw < 1e-12 and s11_s22 < 1e-12 and odd_asym > 1e-6
    record(
        3,
        ok,
        f"L1 == L2: odd S11 terms {odd_sym:.1e}, untrimmed {odd_raw:.1e} (< 1e-12), |s11 - s22| {s11_s22:.1e} (< 1e-12); "
        f"L2 = 2 L1: smallest odd share {odd_asym:.2e} (nonzero)",
    )
    assert ok


def test_criterion_4_highpass_design(tmp_path, capsys):
    cir = tmp_path / "hpf.cir"
    t0 = time.perf_counter()
    code = main(["design-hpf", "--fc", "1e9", "--out-netlist", str(cir)])
    elapsed = time.perf_counter() - t0
    report = capsys.readouterr().out
    c = load_netlist(cir).circuit
    p = bridged_t_params(c)
    fc = 1e9
    table = run_sweep(c, SweepGrid(fc / 100, fc * 100, 2001, "log"), "mna")
    corner = corner_frequency(table, "S21")
    probe = run_sweep(c, SweepGrid(0.5e9, 100e9, 2, "log"), "mna")
    db_low, db_high = probe.magnitude_db("S21")
    zeros = transmission_zeros(derived_coefficients(p, c.z0))
    finite = [z for z in zeros if abs(z) > 0 and abs(z.real) <= 1e-9 * abs(z) and abs(z.imag) < 2 * math.pi * corner]
    ok = (
        code == 0
        and p.L1 == p.L2
        and abs(corner / fc - 1) <= 0.01
        and db_high > -0.05
        and db_low < -20
        and len(finite) >= 1
        and elapsed < 10.0
    )
    low = "exactly 0 (numerator root)" if db_low <= -6000 else f"{db_low:.1f} dB"
    zf = ", ".join(f"{abs(z.imag) / (2 * math.pi):.4g}" for z in finite if z.imag > 0)
    record(
        4,
        ok,
        f"corner {corner:.6g} Hz (+-1%), |S21| {db_high:.2e} dB at 100 GHz (> -0.05), "
        f"{low} at 0.5 GHz (< -20 dB), zeros below corner at {zf} Hz, {elapsed:.2f} s (< 10 s)",
    )
    print(report)
    assert ok


def test_criterion_5_rolloff(hpf_params):
    C, z0 = 1e-12, 50.0
    fc = 1 / (4 * math.pi * z0 * C)
    c = Circuit((Element("C", C, ("1", "2"), "C1"),), (Port(1, "1"), Port(2, "2")))

    def analytic_db(f):
        x = f / fc
        return 10 * math.log10(x * x / (1 + x * x))

    worst = 0.0
    for f1, f2 in ((fc / 4, fc / 2), (fc / 2, fc), (fc, 3 * fc)):
        t = run_sweep(c, SweepGrid(f1, f2, 101, "log"), "mna")
        got = rolloff_slope(t, "S21", f1, f2)
        expected = (analytic_db(f2) - analytic_db(f1)) / ((f2 - f1) / 1e9)
        worst = max(worst, abs(got / expected - 1))
    ok = worst < 1e-6
    table = run_sweep(bridged_t_circuit(hpf_params), SweepGrid(1e7, 1e11, 2001, "log"))
    s21 = rolloff_slope(table, "S21", 0.75e9, 1e9)
    s11 = rolloff_slope(table, "S11", 1e9, 1.5e9)
    record(
        5,
        ok,
        f"first-order oracle rel err {worst:.1e} (< 1e-6); designed filter S21 {s21:+.1f} dB/GHz "
        f"(0.75-1 GHz), S11 {s11:+.1f} dB/GHz (1-1.5 GHz), reported only",
    )
    assert ok


def test_criterion_6_touchstone(params):
    t = run_sweep(bridged_t_circuit(params, 50.0), GRID)
    text = write_touchstone(t)
    back = read_touchstone(text)
    err = float(np.max(np.abs(back.s - t.s)))
    ferr = float(np.max(np.abs(back.frequencies / t.frequencies - 1)))
    option = [line for line in text.splitlines() if line.startswith("#")]
    ok = err < 1e-6 and ferr < 1e-6 and option == ["# Hz S RI R 50"] and "\n# Hz S RI R 50\n" in text
    record(6, ok, f"round-trip max error {err:.1e} (< 1e-6), option line {option[0]!r}")
    assert ok


def test_criterion_7_errata_report(tmp_path, params, capsys):
    from bridgedt import bridged_t_netlist

    f = tmp_path / "bt.cir"
    f.write_text(bridged_t_netlist(params))
    code = main(["coeffs", "--netlist", str(f)])
    out = capsys.readouterr().out
    rows = [line for line in out.splitlines() if line[:1] in ("N", "D")]
    diffs = [r for r in coefficient_rows(params) if r[3] > 1e-9]
    ok = (
        code == 0
        and len(rows) == 14
        and "check N0 == D0 (verbatim): agree" in out
        and "rel diff" in out
    )
    record(7, ok, f"14 coefficient rows, N0 == D0 shown as agreeing, {len(diffs)} verbatim/derived differences listed")
    print(out)
    assert ok
