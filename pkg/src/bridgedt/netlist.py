"""Minimal SPICE-like netlist format.

One statement per line; ``*`` starts a comment that runs to the end of the
line. Element lines are ``<L|C|R><id> <node1> <node2> <value>`` and port
lines are ``PORT <1|2> <node> <refnode> <z0>``. Node ``0`` is ground.
Values accept the engineering suffixes f, p, n, u, m, k, meg and g
(case-insensitive; ``meg`` is 1e6 and ``m`` is 1e-3)::

    * bridged T
    L1 1 3 10n
    L2 3 2 10n
    L3 3 0 8n
    C2 3 0 3.2p
    C1 1 2 2.2p
    PORT 1 1 0 50
    PORT 2 2 0 50
"""

from __future__ import annotations

import re
from decimal import Decimal
from dataclasses import dataclass
from pathlib import Path

from .elements import BridgedTParams, Element
from .errors import DuplicatePort, InputError, MissingPort, NonPositiveValue, ParseError
from .mna import Circuit, Port, bridged_t_circuit

__all__ = [
    "NetlistDocument",
    "parse_value",
    "parse_netlist",
    "parse_document",
    "load_netlist",
    "format_netlist",
    "bridged_t_netlist",
]

# suffix -> power of ten
SUFFIXES = {"f": -15, "p": -12, "n": -9, "u": -6, "m": -3, "k": 3, "meg": 6, "g": 9}

_VALUE_RE = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:e[+-]?\d+)?)(meg|[fpnumkg])?$", re.IGNORECASE)
_KINDS = {"L": "inductor", "C": "capacitor", "R": "resistor"}


@dataclass
class NetlistDocument:
    lines: list[str]
    circuit: Circuit
    source: str = "<string>"


def parse_value(token: str, line: int | None = None) -> float:
    m = _VALUE_RE.match(token.strip())
    if not m:
        raise ParseError(f"cannot read value {token!r}", line)
    if not m.group(2):
        return float(m.group(1))
    # scale in decimal so "2.2p" rounds once, to the same float as 2.2e-12
    return float(Decimal(m.group(1)).scaleb(SUFFIXES[m.group(2).lower()]))


def _strip_comment(raw: str) -> str:
    cut = raw.find("*")
    return raw if cut < 0 else raw[:cut]


def parse_document(text: str, source: str = "<string>") -> NetlistDocument:
    lines = text.splitlines()
    elements: list[Element] = []
    ports: dict[int, Port] = {}
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        tokens = _strip_comment(raw).split()
        if not tokens:
            continue
        head = tokens[0]
        if head.upper() == "PORT":
            if len(tokens) != 5:
                raise ParseError("port line needs: PORT <1|2> <node> <refnode> <z0>", lineno)
            if tokens[1] not in ("1", "2"):
                raise ParseError(f"port number must be 1 or 2, got {tokens[1]!r}", lineno)
            number = int(tokens[1])
            if number in ports:
                raise DuplicatePort(f"port {number} declared twice", lineno)
            z0 = parse_value(tokens[4], lineno)
            if z0 <= 0:
                raise NonPositiveValue(f"line {lineno}: port impedance must be positive")
            try:
                ports[number] = Port(number, tokens[2], tokens[3], z0)
            except InputError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        kind = _KINDS.get(head[0].upper())
        if kind is None:
            raise ParseError(f"unknown element kind in {head!r}", lineno)
        if len(tokens) != 4:
            raise ParseError(f"element line needs: {head[0].upper()}<id> <node1> <node2> <value>", lineno)
        key = head.upper()
        if key in seen:
            raise ParseError(f"element {head} already defined on line {seen[key]}", lineno)
        seen[key] = lineno
        value = parse_value(tokens[3], lineno)
        if value <= 0:
            raise NonPositiveValue(f"line {lineno}: {head} must have a positive value, got {tokens[3]}")
        if tokens[1] == tokens[2]:
            raise ParseError(f"{head} connects node {tokens[1]} to itself", lineno)
        elements.append(Element(kind, value, (tokens[1], tokens[2]), head))
    for number in (1, 2):
        if number not in ports:
            raise MissingPort(f"{source}: PORT {number} is not declared")
    if not elements:
        raise ParseError(f"{source}: netlist has no elements")
    try:
        circuit = Circuit(tuple(elements), (ports[1], ports[2]))
    except InputError as exc:
        raise ParseError(f"{source}: {exc}") from None
    return NetlistDocument(lines, circuit, source)


def parse_netlist(text: str) -> Circuit:
    return parse_document(text).circuit


def load_netlist(path) -> NetlistDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read netlist {path}: {exc}") from None
    return parse_document(text, str(path))


def _number(x: float) -> str:
    # shortest text that parses back to the identical float
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def format_netlist(c: Circuit, title: str | None = None) -> str:
    out = []
    if title:
        out.extend(f"* {line}" for line in title.splitlines())
    prefix = {"inductor": "L", "capacitor": "C", "resistor": "R"}
    for k, e in enumerate(c.elements, start=1):
        name = e.name or f"{prefix[e.kind]}{k}"
        out.append(f"{name} {e.nodes[0]} {e.nodes[1]} {_number(e.value)}")
    for p in c.ports:
        out.append(f"PORT {p.number} {p.node} {p.ref} {_number(p.z0)}")
    return "\n".join(out) + "\n"


def bridged_t_netlist(p: BridgedTParams, z0: float = 50.0, title: str | None = None) -> str:
    return format_netlist(bridged_t_circuit(p, z0), title)
