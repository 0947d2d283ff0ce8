import math
import warnings

import numpy as np
import pytest

from bridgedt import BridgedTParams, bridged_t_circuit
from bridgedt.elements import Element
from bridgedt.errors import InputError, MultipleCrossingsWarning, NoCrossing, OutOfRange
from bridgedt.metrics import HALF_POWER_DB, corner_frequency, level_crossings, magnitude_at, rolloff_slope
from bridgedt.mna import Circuit, Port
from bridgedt.sweep import NUDGE, SweepGrid, SweepTable, resonances, run_sweep


def series_c_highpass(C=1e-12, z0=50.0):
    return Circuit((Element("C", C, ("1", "2"), "C1"),), (Port(1, "1", z0=z0), Port(2, "2", z0=z0)))


def first_order_db(f, fc):
    x = f / fc
    return 10 * np.log10(x**2 / (1 + x**2))


class TestGrid:
    def test_log_endpoints_exact(self):
        f = SweepGrid(1e7, 1e11, 401).frequencies()
        assert f[0] == 1e7 and f[-1] == 1e11 and len(f) == 401
        assert np.allclose(np.diff(np.log10(f)), 0.01)

    def test_linear(self):
        f = SweepGrid(1.0, 5.0, 5, "linear").frequencies()
        assert f.tolist() == [1.0, 2.0, 3.0, 4.0, 5.0]

    @pytest.mark.parametrize(
        "args", [(2.0, 1.0, 10), (0.0, 1.0, 10), (1.0, 2.0, 1), (1.0, 2.0, 10, "cubic"), (1.0, math.inf, 5)]
    )
    def test_validation(self, args):
        with pytest.raises(InputError):
            SweepGrid(*args)


class TestTable:
    def test_shape_checked(self):
        with pytest.raises(InputError):
            SweepTable(np.array([1.0, 2.0]), np.zeros((3, 2, 2)))

    def test_increasing(self):
        with pytest.raises(InputError):
            SweepTable(np.array([2.0, 1.0]), np.zeros((2, 2, 2)))

    def test_rows(self, circuit):
        t = run_sweep(circuit, SweepGrid(1e8, 1e10, 5))
        f, m = t.rows[2]
        assert f == t.frequencies[2]
        assert m.s21 == t.s[2, 1, 0]

    def test_unknown_parameter(self, circuit):
        t = run_sweep(circuit, SweepGrid(1e8, 1e10, 5))
        with pytest.raises(InputError):
            t.param("S31")


class TestRunSweep:
    def test_methods_agree(self, circuit):
        g = SweepGrid(1e7, 1e11, 101)
        ref = run_sweep(circuit, g, "mna").s
        for method in ("closed-form", "composed"):
            s = run_sweep(circuit, g, method).s
            assert np.max(np.abs(s - ref)) < 1e-11

    def test_parallel_preserves_order(self, circuit):
        g = SweepGrid(1e7, 1e11, 201)
        a = run_sweep(circuit, g, "mna")
        b = run_sweep(circuit, g, "mna", parallel=True, max_workers=4)
        assert np.array_equal(a.frequencies, b.frequencies)
        assert np.array_equal(a.s, b.s)

    def test_unknown_method(self, circuit):
        with pytest.raises(InputError):
            run_sweep(circuit, SweepGrid(1e8, 1e9, 3), "spice")

    def test_nudges_exact_resonance(self):
        p = BridgedTParams(5e-9, 5e-9, 8e-9, 1e-12, 3e-12)
        f0 = p.tank_resonance / (2 * math.pi)
        c = bridged_t_circuit(p, 50.0)
        assert resonances(c) == [pytest.approx(f0)]
        g = SweepGrid(f0, 10 * f0, 11)
        for method in ("mna", "composed", "closed-form"):
            t = run_sweep(c, g, method)
            assert len(t) == 11
            assert t.nudged == (0,)
            assert t.frequencies[0] == pytest.approx(f0 * (1 + NUDGE), rel=1e-15)
            assert np.all(np.isfinite(t.s))

    def test_last_point_nudged_downward(self):
        p = BridgedTParams(5e-9, 5e-9, 8e-9, 1e-12, 3e-12)
        f0 = p.tank_resonance / (2 * math.pi)
        t = run_sweep(bridged_t_circuit(p), SweepGrid(f0 / 10, f0, 11))
        assert t.nudged == (10,)
        assert t.frequencies[-1] < f0

    def test_closed_form_needs_bridged_t(self):
        from bridgedt.errors import TopologyError

        with pytest.raises(TopologyError):
            run_sweep(series_c_highpass(), SweepGrid(1e8, 1e9, 3), "closed-form")


class TestFirstOrderOracle:
    C, Z0 = 1e-12, 50.0
    FC = 1.0 / (4 * math.pi * 50.0 * 1e-12)

    def table(self, points):
        return run_sweep(series_c_highpass(self.C, self.Z0), SweepGrid(self.FC / 100, self.FC * 100, points))

    def test_magnitude_matches_analytic(self):
        t = self.table(401)
        assert t.magnitude_db("S21") == pytest.approx(first_order_db(t.frequencies, self.FC), abs=1e-10)

    def test_corner(self):
        assert corner_frequency(self.table(2001), "S21") == pytest.approx(self.FC, rel=1e-5)

    def test_corner_refinement(self):
        coarse = corner_frequency(self.table(401), "S21")
        fine = corner_frequency(self.table(4001), "S21")
        assert abs(coarse / fine - 1) < 1e-3

    def test_slope_matches_analytic(self):
        f1, f2 = self.FC / 2, self.FC
        t = run_sweep(series_c_highpass(self.C, self.Z0), SweepGrid(f1, f2, 51))
        expected = (first_order_db(f2, self.FC) - first_order_db(f1, self.FC)) / ((f2 - f1) / 1e9)
        assert rolloff_slope(t, "S21", f1, f2) == pytest.approx(expected, rel=1e-6)

    def test_reflection_falls_above_corner(self):
        t = self.table(401)
        assert rolloff_slope(t, "S11", self.FC, 2 * self.FC) < 0


class TestMetricErrors:
    def make(self, db):
        f = np.geomspace(1e8, 1e10, len(db))
        s = np.zeros((len(db), 2, 2), dtype=complex)
        s[:, 1, 0] = 10 ** (np.asarray(db) / 20)
        return SweepTable(f, s)

    def test_no_crossing(self):
        with pytest.raises(NoCrossing):
            corner_frequency(self.make([-1.0, -1.0, -1.0]))

    def test_multiple_crossings_lowest_wins(self):
        t = self.make([-10, 0, -10, 0])
        with pytest.warns(MultipleCrossingsWarning):
            fc = corner_frequency(t)
        assert fc == level_crossings(t, "S21", HALF_POWER_DB)[0]
        assert len(level_crossings(t)) == 3

    def test_single_crossing_no_warning(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            corner_frequency(self.make([-10, -5, 0]))

    def test_out_of_range(self):
        t = self.make([-10, -5, 0])
        with pytest.raises(OutOfRange):
            magnitude_at(t, "S21", 1e11)

    def test_slope_order(self):
        t = self.make([-10, -5, 0])
        with pytest.raises(InputError):
            rolloff_slope(t, "S21", 2e9, 1e9)
