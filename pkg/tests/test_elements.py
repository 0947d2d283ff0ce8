import math

import pytest

from bridgedt.elements import (
    BridgedTParams,
    Element,
    element_admittance,
    element_impedance,
    tank_impedance,
    tank_resonance,
)
from bridgedt.errors import InputError, NonPositiveValue


class TestElement:
    @pytest.mark.parametrize("kind,expected", [("L", "inductor"), ("c", "capacitor"), ("Resistor", "resistor")])
    def test_kind_aliases(self, kind, expected):
        assert Element(kind, 1.0, ("1", "2")).kind == expected

    def test_impedances(self):
        s = 2j
        assert element_impedance(Element("L", 3.0, (1, 2)))(s) == pytest.approx(6j)
        assert element_impedance(Element("C", 0.25, (1, 2)))(s) == pytest.approx(1 / (0.5j))
        assert element_impedance(Element("R", 7.0, (1, 2)))(s) == pytest.approx(7.0)

    def test_admittance_is_reciprocal(self):
        for kind in "LCR":
            e = Element(kind, 0.4, ("a", "b"))
            s = 0.3 + 1.7j
            assert element_admittance(e)(s) * element_impedance(e)(s) == pytest.approx(1.0)
            assert e.admittance_at(s) == pytest.approx(element_admittance(e)(s))

    @pytest.mark.parametrize("value", [0.0, -1e-9, float("nan"), float("inf")])
    def test_rejects_bad_values(self, value):
        with pytest.raises(NonPositiveValue):
            Element("L", value, ("1", "2"))

    def test_rejects_self_loop_and_unknown_kind(self):
        with pytest.raises(InputError):
            Element("L", 1.0, ("1", "1"))
        with pytest.raises(InputError):
            Element("Q", 1.0, ("1", "2"))


class TestTank:
    def test_impedance_form(self):
        L3, C2 = 8e-9, 3.2e-12
        z = tank_impedance(L3, C2)
        s = 1j * 2e9
        assert z(s) == pytest.approx(1 / (1 / (s * L3) + s * C2))

    def test_resonance(self):
        assert tank_resonance(1e-9, 1e-12) == pytest.approx(1 / math.sqrt(1e-21))

    def test_impedance_unbounded_near_resonance(self):
        L3, C2 = 8e-9, 3.2e-12
        w0 = tank_resonance(L3, C2)
        assert abs(tank_impedance(L3, C2)(1j * w0 * (1 + 1e-9))) > 1e9


class TestParams:
    def test_validation(self):
        with pytest.raises(NonPositiveValue):
            BridgedTParams(1e-9, 1e-9, 0.0, 1e-12, 1e-12)

    def test_scaled(self, params):
        q = params.scaled(2.0)
        assert q.L1 == 2 * params.L1 and q.C2 == params.C2 / 2
        assert q.tank_resonance == pytest.approx(params.tank_resonance)
