"""High-pass synthesis on the bridged T with equal series inductors.

With ``L1 == L2`` the odd S11 numerator terms vanish and the network is
symmetric. The recipe used here, with ``wc = 2 pi fc``:

* ``C1 = 1 / (wc z0)`` and ``L3 = z0 / wc``;
* ``C2`` is solved so that S21 has a transmission zero at exactly ``fc / 2``;
* the shared series inductance ``L`` is bisected (on a log scale, bracket
  grown geometrically) until the measured -3.0103 dB corner of ``|S21|``
  on a 2001-point log sweep over ``fc/100 .. 100 fc`` equals ``fc``.

The zero at ``fc / 2`` is what makes the stopband steep; the corner search
relies on the response having a single half-power crossing, which holds
across the bracket the search explores.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from .closedform import derived_coefficients
from .elements import BridgedTParams
from .errors import DesignInfeasible, MultipleCrossingsWarning, NoCrossing, NonPositiveValue
from .metrics import HALF_POWER_DB, corner_frequency
from .sweep import SweepGrid, SweepTable, polynomial_table

__all__ = ["ZERO_RATIO", "design_hpf", "measure_corner", "design_grid", "passband_check"]

ZERO_RATIO = 0.5
GRID_POINTS = 2001
_MAX_STEPS = 200


def design_grid(fc: float, points: int = GRID_POINTS) -> SweepGrid:
    return SweepGrid(fc / 100.0, fc * 100.0, points, "log")


def sweep_params(p: BridgedTParams, z0: float, grid: SweepGrid) -> SweepTable:
    return polynomial_table(derived_coefficients(p, z0), grid.frequencies())


def measure_corner(p: BridgedTParams, z0: float, fc: float, points: int = GRID_POINTS) -> float:
    """Measured |S21| corner on the design grid; the lowest crossing if several."""
    table = sweep_params(p, z0, design_grid(fc, points))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MultipleCrossingsWarning)
        return corner_frequency(table, "S21", HALF_POWER_DB)


def _candidate(L: float, fc: float, z0: float) -> BridgedTParams | None:
    wc = 2.0 * math.pi * fc
    wz = ZERO_RATIO * wc
    C1 = 1.0 / (wc * z0)
    L3 = z0 / wc
    # S21 zero where C1 C2 L^2 L3 w^4 - C1 (L^2 + 2 L L3) w^2 + L3 = 0
    C2 = (C1 * (L * L + 2.0 * L * L3) * wz**2 - L3) / (C1 * L * L * L3 * wz**4)
    if not (C2 > 0 and math.isfinite(C2)):
        return None
    return BridgedTParams(L, L, L3, C1, C2)


def design_hpf(fc: float, z0: float = 50.0) -> BridgedTParams:
    """Component values for a bridged-T high-pass with its corner at ``fc`` Hz."""
    if not (fc > 0 and math.isfinite(fc)):
        raise NonPositiveValue("corner frequency must be positive")
    if not (z0 > 0 and math.isfinite(z0)):
        raise NonPositiveValue("reference impedance must be positive")
    unit = z0 / (2.0 * math.pi * fc)

    def excess(L):
        p = _candidate(L, fc, z0)
        if p is None:
            return None, None
        try:
            return measure_corner(p, z0, fc) - fc, p
        except NoCrossing:
            return None, p

    # Larger L lowers the corner. Start high and step down until the corner
    # rises above fc.
    hi = 2.0 * unit
    g_hi, _ = excess(hi)
    for _ in range(_MAX_STEPS):
        if g_hi is not None and g_hi < 0:
            break
        hi *= math.sqrt(2.0)
        g_hi, _ = excess(hi)
    else:
        raise DesignInfeasible("could not find an inductance with the corner below fc")
    lo = hi
    for _ in range(_MAX_STEPS):
        lo /= 2.0**0.25
        g_lo, _ = excess(lo)
        if g_lo is None:
            raise DesignInfeasible("no inductance puts the corner above fc with C2 > 0")
        if g_lo > 0:
            break
    else:
        raise DesignInfeasible("could not bracket the corner frequency")

    for _ in range(_MAX_STEPS):
        mid = math.sqrt(lo * hi)
        g_mid, p_mid = excess(mid)
        if g_mid is None:
            raise DesignInfeasible("corner measurement failed inside the bracket")
        if abs(g_mid) <= 1e-7 * fc or hi / lo - 1.0 < 1e-13:
            return p_mid
        if g_mid > 0:
            lo = mid
        else:
            hi = mid
    raise DesignInfeasible("bisection did not converge")


def passband_check(p: BridgedTParams, z0: float, fc: float) -> dict[str, float]:
    """A few figures of merit for a designed filter (dB values)."""
    polys = derived_coefficients(p, z0)
    probe = np.array([fc / 2.0, fc, 100.0 * fc])
    s21 = polys.evaluate(2j * np.pi * probe)[:, 1, 0]
    db = 20.0 * np.log10(np.maximum(np.abs(s21), 1e-300))
    return {"s21_db_half_fc": float(db[0]), "s21_db_fc": float(db[1]), "s21_db_100fc": float(db[2])}
