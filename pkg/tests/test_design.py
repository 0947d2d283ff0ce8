import math

import numpy as np
import pytest

from bridgedt.closedform import derived_coefficients, transmission_zeros
from bridgedt.design import ZERO_RATIO, design_hpf, measure_corner, passband_check
from bridgedt.errors import NonPositiveValue


def s21_db(p, z0, f):
    s = derived_coefficients(p, z0).evaluate(2j * np.pi * np.asarray(f, dtype=float))
    return 20 * np.log10(np.abs(s[..., 1, 0]))


class TestDesign:
    def test_equal_series_inductors(self, hpf_params):
        assert hpf_params.L1 == hpf_params.L2

    def test_corner(self, hpf_params):
        assert abs(measure_corner(hpf_params, 50.0, 1e9) / 1e9 - 1) < 0.01

    def test_corner_refinement(self, hpf_params):
        a = measure_corner(hpf_params, 50.0, 1e9, points=401)
        b = measure_corner(hpf_params, 50.0, 1e9, points=4001)
        assert abs(a / b - 1) < 1e-3

    def test_zero_placed_below_corner(self, hpf_params):
        zeros = [z for z in transmission_zeros(derived_coefficients(hpf_params, 50.0)) if z.imag > 0]
        f = sorted(z.imag / (2 * math.pi) for z in zeros)
        assert f[0] == pytest.approx(ZERO_RATIO * 1e9, rel=1e-6)
        assert all(x < 1e9 for x in f)

    def test_band_edges(self, hpf_params):
        check = passband_check(hpf_params, 50.0, 1e9)
        assert check["s21_db_half_fc"] < -20
        assert check["s21_db_100fc"] > -0.05

    def test_limits(self, hpf_params):
        fc = 1e9
        assert s21_db(hpf_params, 50.0, 1000 * fc) > -1e-4
        low = s21_db(hpf_params, 50.0, [1e-4 * fc, 1e-3 * fc])
        assert low[1] < -40
        # a single transmission zero at the origin: +20 dB per decade
        assert low[1] - low[0] == pytest.approx(20.0, abs=1e-3)

    def test_monotone_above_corner_region(self, hpf_params):
        f = np.geomspace(2e9, 1e12, 2001)
        db = s21_db(hpf_params, 50.0, f)
        assert np.all(np.diff(db) >= -1e-9)

    @pytest.mark.parametrize("fc,z0", [(2.4e6, 75.0), (5e9, 50.0), (1e9, 25.0)])
    def test_other_targets(self, fc, z0):
        p = design_hpf(fc, z0)
        assert p.L1 == p.L2
        assert abs(measure_corner(p, z0, fc) / fc - 1) < 0.01

    def test_frequency_scaling(self, hpf_params):
        # designing at 2 GHz is the 1 GHz design with every reactance halved
        p2 = design_hpf(2e9, 50.0)
        q = hpf_params.frequency_scaled(0.5)
        for name in ("L1", "L3", "C1", "C2"):
            assert getattr(p2, name) == pytest.approx(getattr(q, name), rel=1e-6)

    @pytest.mark.parametrize("fc,z0", [(0.0, 50.0), (-1.0, 50.0), (1e9, 0.0), (math.nan, 50.0)])
    def test_rejects_bad_targets(self, fc, z0):
        with pytest.raises(NonPositiveValue):
            design_hpf(fc, z0)
