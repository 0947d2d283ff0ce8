"""Lumped elements and their Laplace-domain impedances."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError, NonPositiveValue
from .polyrat import Polynomial, RationalFunction

__all__ = [
    "BridgedTParams",
    "Element",
    "KINDS",
    "element_impedance",
    "element_admittance",
    "tank_impedance",
    "tank_resonance",
]

KINDS = ("inductor", "capacitor", "resistor")
_PREFIX = {"L": "inductor", "C": "capacitor", "R": "resistor"}


def _check_positive(name, value):
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise NonPositiveValue(f"{name} must be positive and finite, got {value!r}")
    return value


@dataclass(frozen=True)
class BridgedTParams:
    """Component values of the capacitively bridged T with a parallel tank.

    ``L1`` joins port 1 to the centre node, ``L2`` joins the centre node to
    port 2, ``L3 || C2`` shunts the centre node to ground and ``C1`` bridges
    the two ports. Henry and farad.
    """

    L1: float
    L2: float
    L3: float
    C1: float
    C2: float

    def __post_init__(self):
        for name in ("L1", "L2", "L3", "C1", "C2"):
            object.__setattr__(self, name, _check_positive(name, getattr(self, name)))

    def scaled(self, k: float) -> BridgedTParams:
        """Impedance-scale by ``k``: inductors times k, capacitors over k."""
        return BridgedTParams(self.L1 * k, self.L2 * k, self.L3 * k, self.C1 / k, self.C2 / k)

    def frequency_scaled(self, k: float) -> BridgedTParams:
        """Every reactance multiplied by ``k``; moves the response to ``f / k``."""
        return BridgedTParams(self.L1 * k, self.L2 * k, self.L3 * k, self.C1 * k, self.C2 * k)

    @property
    def tank_resonance(self) -> float:
        return tank_resonance(self.L3, self.C2)


@dataclass(frozen=True)
class Element:
    kind: str
    value: float
    nodes: tuple
    name: str = ""

    def __post_init__(self):
        kind = _PREFIX.get(self.kind.upper(), self.kind.lower())
        if kind not in KINDS:
            raise InputError(f"unknown element kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "value", _check_positive(self.name or kind, self.value))
        nodes = tuple(str(n) for n in self.nodes)
        if len(nodes) != 2 or nodes[0] == nodes[1]:
            raise InputError(f"element {self.name or kind} needs two distinct nodes, got {nodes}")
        object.__setattr__(self, "nodes", nodes)

    def admittance_at(self, s: complex) -> complex:
        if self.kind == "inductor":
            return 1.0 / (s * self.value)
        if self.kind == "capacitor":
            return s * self.value
        return 1.0 / self.value


def element_impedance(e: Element) -> RationalFunction:
    """``sL``, ``1/(sC)`` or ``R`` as a rational function of ``s``."""
    if e.kind == "inductor":
        return RationalFunction(Polynomial((0.0, e.value)))
    if e.kind == "capacitor":
        return RationalFunction(Polynomial((1.0,)), Polynomial((0.0, e.value)))
    return RationalFunction.constant(e.value)


def element_admittance(e: Element) -> RationalFunction:
    if e.kind == "inductor":
        return RationalFunction(Polynomial((1.0,)), Polynomial((0.0, e.value)))
    if e.kind == "capacitor":
        return RationalFunction(Polynomial((0.0, e.value)))
    return RationalFunction.constant(1.0 / e.value)


def tank_impedance(L3: float, C2: float) -> RationalFunction:
    """Parallel LC: ``s L3 / (1 + s**2 L3 C2)``."""
    L3 = _check_positive("L3", L3)
    C2 = _check_positive("C2", C2)
    return RationalFunction(Polynomial((0.0, L3)), Polynomial((1.0, 0.0, L3 * C2)))


def tank_resonance(L3: float, C2: float) -> float:
    """Angular resonance frequency ``1 / sqrt(L3 C2)`` in rad/s."""
    return 1.0 / math.sqrt(_check_positive("L3", L3) * _check_positive("C2", C2))
