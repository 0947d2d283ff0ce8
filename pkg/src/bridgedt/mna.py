"""Nodal-analysis reference solver.

Stamps every element into the complex nodal admittance table at one
frequency, eliminates the internal nodes and converts the remaining port
block to S-parameters. Nothing here depends on the closed-form or
two-port composition code paths it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elements import BridgedTParams, Element
from .errors import InputError, SingularAtFrequency, TopologyError
from .twoport import SMatrix, YMatrix, kron_reduce, y_to_s

__all__ = [
    "GROUND",
    "Port",
    "Circuit",
    "nodal_admittance",
    "mna_sparams",
    "bridged_t_circuit",
    "bridged_t_params",
]

GROUND = "0"


@dataclass(frozen=True)
class Port:
    number: int
    node: str
    ref: str = GROUND
    z0: float = 50.0

    def __post_init__(self):
        object.__setattr__(self, "node", str(self.node))
        object.__setattr__(self, "ref", str(self.ref))
        object.__setattr__(self, "z0", float(self.z0))
        if self.number not in (1, 2):
            raise InputError(f"port number must be 1 or 2, got {self.number}")
        if not self.z0 > 0:
            raise InputError(f"port {self.number} reference impedance must be positive")
        if self.node == GROUND:
            raise InputError(f"port {self.number} cannot sit on the ground node")
        if self.ref != GROUND:
            raise InputError(f"port {self.number} must be referenced to ground (node 0)")


@dataclass(frozen=True)
class Circuit:
    """Lumped circuit with two ground-referenced ports sharing one ``z0``."""

    elements: tuple
    ports: tuple

    def __post_init__(self):
        elements = tuple(self.elements)
        ports = tuple(sorted(self.ports, key=lambda p: p.number))
        if not elements:
            raise InputError("circuit has no elements")
        if [p.number for p in ports] != [1, 2]:
            raise InputError("circuit needs exactly ports 1 and 2")
        if ports[0].node == ports[1].node:
            raise InputError("the two ports must be on distinct nodes")
        if ports[0].z0 != ports[1].z0:
            raise InputError("both ports must share one reference impedance")
        used = {n for e in elements for n in e.nodes}
        for p in ports:
            if p.node not in used:
                raise InputError(f"port {p.number} node {p.node!r} is not connected to any element")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "ports", ports)

    @property
    def z0(self) -> float:
        return self.ports[0].z0

    @property
    def nodes(self) -> list[str]:
        """Non-ground nodes, the two port nodes first."""
        order = [self.ports[0].node, self.ports[1].node]
        for e in self.elements:
            for n in e.nodes:
                if n != GROUND and n not in order:
                    order.append(n)
        return order

    @property
    def n(self) -> int:
        return len(self.nodes)

    def element(self, name: str) -> Element:
        for e in self.elements:
            if e.name.upper() == name.upper():
                return e
        raise KeyError(name)


def _stamp(c: Circuit, s: complex, include_ground: bool) -> np.ndarray:
    nodes = c.nodes + ([GROUND] if include_ground else [])
    index = {n: k for k, n in enumerate(nodes)}
    y = np.zeros((len(nodes), len(nodes)), dtype=complex)
    for e in c.elements:
        g = e.admittance_at(s)
        i, j = index.get(e.nodes[0]), index.get(e.nodes[1])
        if i is not None:
            y[i, i] += g
        if j is not None:
            y[j, j] += g
        if i is not None and j is not None:
            y[i, j] -= g
            y[j, i] -= g
    return y


def nodal_admittance(c: Circuit, omega: float, include_ground: bool = False) -> np.ndarray:
    """Nodal admittance table at ``s = j omega``.

    Rows follow :attr:`Circuit.nodes`; with ``include_ground`` the ground
    node is appended as the last row and column (the table is then
    singular, every row summing to zero).
    """
    if not omega > 0:
        raise InputError("angular frequency must be positive")
    return _stamp(c, 1j * omega, include_ground)


def mna_sparams(c: Circuit, omega: float) -> SMatrix:
    y = nodal_admittance(c, omega)
    if c.n > 2:
        y_ports = kron_reduce(y, list(range(2, c.n)))
    else:
        y_ports = YMatrix.from_array(y)
    s = y_to_s(y_ports, c.z0)
    if not np.all(np.isfinite(s.as_array())):
        raise SingularAtFrequency(f"nodal solution is not finite at omega = {omega:g} rad/s")
    return s


def bridged_t_circuit(p: BridgedTParams, z0: float = 50.0) -> Circuit:
    """The capacitively bridged T as a circuit: ports on nodes 1 and 2, centre node 3."""
    elements = (
        Element("inductor", p.L1, ("1", "3"), "L1"),
        Element("inductor", p.L2, ("3", "2"), "L2"),
        Element("inductor", p.L3, ("3", GROUND), "L3"),
        Element("capacitor", p.C2, ("3", GROUND), "C2"),
        Element("capacitor", p.C1, ("1", "2"), "C1"),
    )
    return Circuit(elements, (Port(1, "1", GROUND, z0), Port(2, "2", GROUND, z0)))


def bridged_t_params(c: Circuit) -> BridgedTParams:
    """Recognise the bridged-T topology in ``c`` and return its component values.

    Element names are ignored; roles are assigned from connectivity.
    Raises :class:`TopologyError` for any other circuit.
    """
    if c.n != 3 or len(c.elements) != 5:
        raise TopologyError("bridged T needs 5 elements on 2 port nodes plus one centre node")
    p1, p2, mid = c.nodes
    roles = {}

    def put(role, value):
        if role in roles:
            raise TopologyError(f"two elements compete for the {role} position")
        roles[role] = value

    for e in c.elements:
        pair = frozenset(e.nodes)
        if e.kind == "inductor" and pair == {p1, mid}:
            put("L1", e.value)
        elif e.kind == "inductor" and pair == {mid, p2}:
            put("L2", e.value)
        elif e.kind == "inductor" and pair == {mid, GROUND}:
            put("L3", e.value)
        elif e.kind == "capacitor" and pair == {mid, GROUND}:
            put("C2", e.value)
        elif e.kind == "capacitor" and pair == {p1, p2}:
            put("C1", e.value)
        else:
            raise TopologyError(f"element {e.name or e.kind} on {e.nodes} has no bridged-T role")
    return BridgedTParams(**roles)
