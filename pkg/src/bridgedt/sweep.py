"""Frequency grids and the sweep engine."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .closedform import SParamPolynomials, derived_coefficients
from .errors import FloatingNode, InputError, SingularAtFrequency
from .mna import Circuit, bridged_t_params, mna_sparams
from .twoport import SMatrix, abcd_to_s, bridged_t_composed

__all__ = ["METHODS", "SweepGrid", "SweepTable", "run_sweep", "polynomial_table", "resonances"]

METHODS = ("mna", "closed-form", "composed")
NUDGE = 1e-9
RESONANCE_TOL = 1e-12
_INDEX = {"S11": (0, 0), "S12": (0, 1), "S21": (1, 0), "S22": (1, 1)}


@dataclass(frozen=True)
class SweepGrid:
    start: float
    stop: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise InputError("sweep limits must be finite")
        if not 0 < self.start < self.stop:
            raise InputError(f"need 0 < start < stop, got start={self.start:g} stop={self.stop:g}")
        if int(self.points) != self.points or self.points < 2:
            raise InputError("a sweep needs at least 2 points")
        if self.spacing not in ("log", "linear"):
            raise InputError(f"spacing must be 'log' or 'linear', got {self.spacing!r}")
        object.__setattr__(self, "points", int(self.points))

    def frequencies(self) -> np.ndarray:
        if self.spacing == "log":
            f = np.geomspace(self.start, self.stop, self.points)
        else:
            f = np.linspace(self.start, self.stop, self.points)
        f[0], f[-1] = self.start, self.stop
        return f


@dataclass(frozen=True)
class SweepTable:
    """S-matrices over a strictly increasing frequency axis (Hz).

    ``s`` has shape ``(n, 2, 2)``. ``nudged`` lists the row indices whose
    frequency was moved off an exact resonance.
    """

    frequencies: np.ndarray
    s: np.ndarray
    z0: float = 50.0
    provenance: str = "mna"
    nudged: tuple = field(default=())

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        s = np.asarray(self.s, dtype=complex)
        if f.ndim != 1 or len(f) == 0:
            raise InputError("a sweep table needs a non-empty 1-D frequency axis")
        if s.shape != (len(f), 2, 2):
            raise InputError(f"S data must have shape ({len(f)}, 2, 2), got {s.shape}")
        if np.any(np.diff(f) <= 0):
            raise InputError("frequencies must be strictly increasing")
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "z0", float(self.z0))
        object.__setattr__(self, "nudged", tuple(int(k) for k in self.nudged))

    def __len__(self):
        return len(self.frequencies)

    @property
    def rows(self) -> list[tuple[float, SMatrix]]:
        return [(float(f), SMatrix.from_array(m, self.z0)) for f, m in zip(self.frequencies, self.s)]

    def param(self, which: str) -> np.ndarray:
        try:
            i, j = _INDEX[which.upper()]
        except KeyError:
            raise InputError(f"unknown S-parameter {which!r}") from None
        return self.s[:, i, j]

    def magnitude_db(self, which: str) -> np.ndarray:
        mag = np.abs(self.param(which))
        return 20.0 * np.log10(np.maximum(mag, 1e-300))

    def phase_deg(self, which: str) -> np.ndarray:
        return np.degrees(np.angle(self.param(which)))


def resonances(c: Circuit) -> list[float]:
    """Resonance frequencies (Hz) of inductor-capacitor pairs on the same node pair."""
    out = []
    for e in c.elements:
        if e.kind != "inductor":
            continue
        for other in c.elements:
            if other.kind == "capacitor" and set(other.nodes) == set(e.nodes):
                out.append(1.0 / (2.0 * math.pi * math.sqrt(e.value * other.value)))
    return sorted(out)


def _nudge(freqs: np.ndarray, singular: list[float]) -> tuple[np.ndarray, list[int]]:
    freqs = freqs.copy()
    moved = []
    for k, f in enumerate(freqs):
        if any(abs(f - r) <= RESONANCE_TOL * r for r in singular):
            freqs[k] = f * (1.0 - NUDGE if k == len(freqs) - 1 else 1.0 + NUDGE)
            moved.append(k)
    return freqs, moved


def polynomial_table(polys: SParamPolynomials, freqs, nudged=()) -> SweepTable:
    freqs = np.asarray(freqs, dtype=float)
    s = polys.evaluate(2j * np.pi * freqs)
    return SweepTable(freqs, s, polys.z0, "closed-form", tuple(nudged))


def run_sweep(
    c: Circuit,
    g: SweepGrid,
    method: str = "mna",
    parallel: bool = False,
    max_workers: int | None = None,
) -> SweepTable:
    """Evaluate ``c`` on every grid point with the chosen method.

    ``closed-form`` and ``composed`` need the bridged-T topology. Points
    within one part in 1e12 of a tank resonance are moved by one part in
    1e9; a point whose nodal solve is singular gets the same treatment once
    before the error is allowed through.
    """
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    freqs, moved = _nudge(g.frequencies(), resonances(c))

    if method == "closed-form":
        polys = derived_coefficients(bridged_t_params(c), c.z0)
        return polynomial_table(polys, freqs, moved)

    if method == "composed":
        p = bridged_t_params(c)

        def point(f):
            return abcd_to_s(bridged_t_composed(p, 2j * math.pi * f), c.z0).as_array(), False

    else:

        def point(f):
            try:
                return mna_sparams(c, 2 * math.pi * f).as_array(), False
            except (SingularAtFrequency, FloatingNode):
                return mna_sparams(c, 2 * math.pi * f * (1.0 + NUDGE)).as_array(), True

    if parallel:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(point, freqs))
    else:
        results = [point(f) for f in freqs]
    for k, (_, retried) in enumerate(results):
        if retried:
            freqs[k] *= 1.0 + NUDGE
            moved.append(k)
    s = np.array([r[0] for r in results])
    return SweepTable(freqs, s, c.z0, method, tuple(sorted(set(moved))))
