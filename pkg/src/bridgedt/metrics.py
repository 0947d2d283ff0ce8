"""Corner-frequency and roll-off measurements on sweep tables.

Magnitudes are interpolated linearly in dB against log frequency.
"""

from __future__ import annotations

import warnings

import numpy as np

from .errors import MultipleCrossingsWarning, NoCrossing, OutOfRange
from .sweep import SweepTable

__all__ = ["HALF_POWER_DB", "level_crossings", "corner_frequency", "magnitude_at", "rolloff_slope"]

HALF_POWER_DB = -3.0103


def level_crossings(t: SweepTable, which: str = "S21", level_db: float = HALF_POWER_DB) -> list[float]:
    """Every frequency where the dB magnitude trace meets ``level_db``."""
    logf = np.log10(t.frequencies)
    rel = t.magnitude_db(which) - level_db
    out = []
    for k in range(len(rel) - 1):
        a, b = rel[k], rel[k + 1]
        if a == 0:
            out.append(float(t.frequencies[k]))
        elif a * b < 0:
            x = logf[k] + (logf[k + 1] - logf[k]) * a / (a - b)
            out.append(float(10.0**x))
    if len(rel) and rel[-1] == 0:
        out.append(float(t.frequencies[-1]))
    return out


def corner_frequency(t: SweepTable, which: str = "S21", level_db: float = HALF_POWER_DB) -> float:
    """Lowest frequency where ``|which|`` crosses ``level_db``.

    Warns with :class:`MultipleCrossingsWarning` when there is more than one
    crossing in the table.
    """
    hits = level_crossings(t, which, level_db)
    if not hits:
        raise NoCrossing(f"{which} never reaches {level_db:g} dB inside the sweep")
    if len(hits) > 1:
        warnings.warn(
            f"{which} crosses {level_db:g} dB {len(hits)} times; reporting the lowest",
            MultipleCrossingsWarning,
            stacklevel=2,
        )
    return hits[0]


def magnitude_at(t: SweepTable, which: str, f: float) -> float:
    f_lo, f_hi = t.frequencies[0], t.frequencies[-1]
    if not (f_lo * (1 - 1e-12) <= f <= f_hi * (1 + 1e-12)):
        raise OutOfRange(f"{f:g} Hz lies outside the sweep [{f_lo:g}, {f_hi:g}] Hz")
    return float(np.interp(np.log10(f), np.log10(t.frequencies), t.magnitude_db(which)))


def rolloff_slope(t: SweepTable, which: str, f1: float, f2: float) -> float:
    """Magnitude slope between ``f1`` and ``f2`` in dB per GHz."""
    if not f1 < f2:
        raise OutOfRange("roll-off needs f1 < f2")
    return (magnitude_at(t, which, f2) - magnitude_at(t, which, f1)) / ((f2 - f1) / 1e9)
