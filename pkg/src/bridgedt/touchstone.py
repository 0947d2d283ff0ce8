"""Touchstone v1 (.s2p) and CSV output for sweep tables.

Written files always use ``# Hz S RI R <z0>``. The reader also accepts
kHz/MHz/GHz frequency units and the MA (magnitude, angle in degrees) data
format; dB data is rejected.
"""

from __future__ import annotations

import csv
import io

import numpy as np

from .errors import UnsupportedFormat
from .sweep import SweepTable

__all__ = ["write_touchstone", "read_touchstone", "write_csv", "CSV_COLUMNS"]

CSV_COLUMNS = ("freq_hz", "s11_db", "s11_deg", "s21_db", "s21_deg", "s12_db", "s12_deg", "s22_db", "s22_deg")
_UNITS = {"HZ": 1.0, "KHZ": 1e3, "MHZ": 1e6, "GHZ": 1e9}
# Two-port v1 data order: S11 S21 S12 S22
_ORDER = ((0, 0), (1, 0), (0, 1), (1, 1))


def _g(x: float, digits: int = 9) -> str:
    text = f"{x:.{digits}g}"
    return "0" if text == "-0" else text


def write_touchstone(t: SweepTable) -> str:
    lines = [
        "! 2-port S-parameters",
        f"! provenance: {t.provenance}",
    ]
    if t.nudged:
        lines.append("! nudged rows: " + " ".join(str(k) for k in t.nudged))
    lines.append(f"# Hz S RI R {_g(t.z0, 15)}")
    for f, m in zip(t.frequencies, t.s):
        fields = [_g(f, 15)]
        for i, j in _ORDER:
            fields.append(_g(m[i, j].real))
            fields.append(_g(m[i, j].imag))
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def read_touchstone(text: str) -> SweepTable:
    unit, fmt, z0 = 1e9, "MA", 50.0
    provenance = "touchstone"
    nudged: tuple = ()
    seen_option = False
    values: list[float] = []
    for raw in text.splitlines():
        line, _, comment = raw.partition("!")
        comment = comment.strip()
        if comment.startswith("provenance:"):
            provenance = comment.split(":", 1)[1].strip()
        elif comment.startswith("nudged rows:"):
            nudged = tuple(int(k) for k in comment.split(":", 1)[1].split())
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if seen_option:
                continue
            seen_option = True
            unit, fmt, z0 = _parse_option(line)
            continue
        try:
            values.extend(float(x) for x in line.split())
        except ValueError:
            raise UnsupportedFormat(f"non-numeric data line: {raw!r}") from None
    if not values or len(values) % 9:
        raise UnsupportedFormat("2-port data must come in groups of 9 numbers per frequency")
    data = np.array(values).reshape(-1, 9)
    freqs = data[:, 0] * unit
    s = np.empty((len(data), 2, 2), dtype=complex)
    for k, (i, j) in enumerate(_ORDER):
        a, b = data[:, 1 + 2 * k], data[:, 2 + 2 * k]
        if fmt == "RI":
            s[:, i, j] = a + 1j * b
        else:
            s[:, i, j] = a * np.exp(1j * np.radians(b))
    return SweepTable(freqs, s, z0, provenance, nudged)


def _parse_option(line: str) -> tuple[float, str, float]:
    tokens = line[1:].upper().split()
    unit, fmt, z0 = 1e9, "MA", 50.0
    k = 0
    while k < len(tokens):
        tok = tokens[k]
        if tok in _UNITS:
            unit = _UNITS[tok]
        elif tok in ("RI", "MA"):
            fmt = tok
        elif tok == "DB":
            raise UnsupportedFormat("dB/angle data is not supported; use RI or MA")
        elif tok == "S":
            pass
        elif tok in ("Y", "Z", "H", "G"):
            raise UnsupportedFormat(f"only S-parameter files are supported, got {tok}")
        elif tok == "R":
            k += 1
            try:
                z0 = float(tokens[k])
            except (IndexError, ValueError):
                raise UnsupportedFormat("option line has R without a reference impedance") from None
        else:
            raise UnsupportedFormat(f"unrecognised option {tok!r}")
        k += 1
    return unit, fmt, z0


def write_csv(t: SweepTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    cols = [t.frequencies]
    for name in ("S11", "S21", "S12", "S22"):
        mag = np.abs(t.param(name))
        with np.errstate(divide="ignore"):
            cols.append(20.0 * np.log10(mag))
        cols.append(t.phase_deg(name))
    for row in zip(*cols):
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()
