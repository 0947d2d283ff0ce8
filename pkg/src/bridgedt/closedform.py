"""Closed-form S11/S21 of the bridged T as ratios of polynomials in ``s``.

Two coefficient sets are available. :func:`verbatim_coefficients` applies
the commonly printed expressions for N0..N4, N'1, N'3, N'5 and D0..D5
unchanged; several of them are dimensionally inconsistent, so they are
kept for comparison reports only. :func:`derived_coefficients` builds the
coefficients from the circuit itself and is the one every other part of
the package relies on.

Both sets share one normalisation: the constant denominator term equals
``C1 L3 z0**2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elements import BridgedTParams
from .errors import DenominatorZero, InputError
from .mna import Circuit, bridged_t_circuit
from .polyrat import Polynomial, RationalFunction, poly_roots

__all__ = [
    "SParamPolynomials",
    "NormalizedFrequency",
    "Quadrature",
    "verbatim_coefficients",
    "derived_coefficients",
    "circuit_polynomials",
    "reduced_admittance",
    "quadrature",
    "magnitude_phase",
    "transmission_zeros",
    "coefficient_names",
]

_S = Polynomial((0.0, 1.0))
_S2 = Polynomial((0.0, 0.0, 1.0))


@dataclass(frozen=True)
class SParamPolynomials:
    """``S11 = s11_num / den`` and ``S21 = s21_num / den`` (``S12 = S21``).

    ``s22_num`` is filled in by the derived route only.
    """

    s11_num: Polynomial
    s21_num: Polynomial
    den: Polynomial
    z0: float
    source: str
    s22_num: Polynomial | None = None

    def __post_init__(self):
        if self.source not in ("verbatim", "derived"):
            raise ValueError(f"unknown coefficient source {self.source!r}")
        if self.den.is_zero:
            raise DenominatorZero("denominator polynomial is identically zero")

    @property
    def s11(self) -> RationalFunction:
        return RationalFunction(self.s11_num, self.den)

    @property
    def s21(self) -> RationalFunction:
        return RationalFunction(self.s21_num, self.den)

    def evaluate(self, s) -> np.ndarray:
        """S-matrices at ``s`` (array of shape ``(..., 2, 2)``)."""
        s = np.asarray(s, dtype=complex)
        den = self.den(s)
        s11 = self.s11_num(s) / den
        s21 = self.s21_num(s) / den
        s22 = self.s22_num(s) / den if self.s22_num is not None else np.full_like(s11, np.nan)
        out = np.empty(s.shape + (2, 2), dtype=complex)
        out[..., 0, 0] = s11
        out[..., 0, 1] = s21
        out[..., 1, 0] = s21
        out[..., 1, 1] = s22
        return out

    def table(self) -> dict[str, float]:
        """Coefficients keyed N0..N4, N'1, N'3, N'5, D0..D5."""
        out = {f"N{k}": self.s11_num.coeff(k) for k in range(5)}
        out.update({f"N'{k}": self.s21_num.coeff(k) for k in (1, 3, 5)})
        out.update({f"D{k}": self.den.coeff(k) for k in range(6)})
        return out

    def poles(self) -> list[complex]:
        return poly_roots(self.den)


def coefficient_names() -> list[str]:
    return [f"N{k}" for k in range(5)] + [f"N'{k}" for k in (1, 3, 5)] + [f"D{k}" for k in range(6)]


def verbatim_coefficients(p: BridgedTParams, z0: float = 50.0) -> SParamPolynomials:
    """Coefficients from the printed closed-form expressions, unmodified."""
    L1, L2, L3, C1, C2, Z = p.L1, p.L2, p.L3, p.C1, p.C2, float(z0)
    n = (
        C1 * L3 * Z**2,
        C1 * L3 * Z * (L1 - L2),
        (C1 - L3 * Z**2) * (L1 + L2) + C1 * (L1 * L2 * L3 - C2 * Z**2),
        C1 * C2 * Z * (L1 - L2),
        C2 * (C1 * L1 * L2 - Z**2 * (L1 + L2)),
    )
    d = (
        C1 * L3 * Z**2,
        C1 * Z * (2 + L3 * (L1 + L2)),
        (C1 + L3 * Z**2) * (L1 + L2) + C1 * (L1 * L2 * L3 + C2 * Z**2),
        ((2 + C1 * C2) * (L1 + L2) + 2 * L1 * L2 * L3) * Z,
        C2 * (C1 * L1 * L2 + Z**2 * (L1 + L2)),
        2 * L1 * L2 * C2 * Z,
    )
    n21 = (
        0.0,
        2 * C1 * Z,
        0.0,
        2 * Z * (L1 + L2 + L1 * L2 * L3),
        0.0,
        2 * C2 * L1 * L2 * Z,
    )
    return SParamPolynomials(Polynomial(n), Polynomial(n21), Polynomial(d), Z, "verbatim")


def _polynomial_table(c: Circuit) -> list[list[Polynomial]]:
    """``s`` times the nodal admittance table; every entry is a polynomial."""
    index = {n: k for k, n in enumerate(c.nodes)}
    size = len(index)
    table = [[Polynomial() for _ in range(size)] for _ in range(size)]
    for e in c.elements:
        if e.kind == "inductor":
            g = Polynomial((1.0 / e.value,))
        elif e.kind == "capacitor":
            g = Polynomial((0.0, 0.0, e.value))
        else:
            g = Polynomial((0.0, 1.0 / e.value))
        i, j = index.get(e.nodes[0]), index.get(e.nodes[1])
        if i is not None:
            table[i][i] = table[i][i] + g
        if j is not None:
            table[j][j] = table[j][j] + g
        if i is not None and j is not None:
            table[i][j] = table[i][j] - g
            table[j][i] = table[j][i] - g
    return table


def _eliminate(c: Circuit):
    """Fraction-free elimination of the single internal node.

    Returns ``(q, pivot, det)``: ``q`` is the 2x2 table of Schur-complement
    numerators, ``pivot`` the internal-node diagonal entry and ``det`` the
    determinant of the full polynomial table. The reduced port admittance
    is ``q / (s * pivot)``.
    """
    if c.n not in (2, 3):
        raise InputError("closed-form polynomials support at most one internal node")
    p = _polynomial_table(c)
    if c.n == 2:
        det = p[0][0] * p[1][1] - p[0][1] * p[1][0]
        return p, Polynomial((1.0,)), det
    q = [[p[i][j] * p[2][2] - p[i][2] * p[2][j] for j in range(2)] for i in range(2)]
    det = (
        p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1])
        - p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0])
        + p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0])
    )
    return q, p[2][2], det


def reduced_admittance(c: Circuit) -> list[list[RationalFunction]]:
    """Port admittance table of ``c`` as rational functions of ``s``."""
    q, pivot, _ = _eliminate(c)
    den = _S * pivot
    return [[RationalFunction(q[i][j], den) for j in range(2)] for i in range(2)]


def circuit_polynomials(c: Circuit, source: str = "derived") -> SParamPolynomials:
    """S-parameter polynomials of a circuit with at most one internal node.

    With ``y = z0 q / (s pivot)`` the conversion ``S = (I - y)(I + y)^-1``
    carries a common factor ``pivot`` in numerator and denominator (because
    ``q11 q22 - q12 q21 = pivot * det``); it is removed analytically, so no
    approximate cancellation is involved.
    """
    z0 = c.z0
    q, pivot, det = _eliminate(c)
    head = _S2 * pivot
    den = head + _S * (q[0][0] + q[1][1]) * z0 + det * z0**2
    n11 = head + _S * (q[1][1] - q[0][0]) * z0 - det * z0**2
    n22 = head + _S * (q[0][0] - q[1][1]) * z0 - det * z0**2
    n21 = _S * q[1][0] * (-2.0 * z0)
    return SParamPolynomials(n11, n21, den, z0, source, n22)


def derived_coefficients(p: BridgedTParams, z0: float = 50.0) -> SParamPolynomials:
    """Coefficients regenerated from the circuit, scaled so ``D0 = C1 L3 z0**2``."""
    raw = circuit_polynomials(bridged_t_circuit(p, z0))
    k = p.C1 * p.L3 * z0**2 / raw.den.coeff(0)
    # Structurally zero top terms (e.g. the s^6 term of the determinant) may
    # survive as rounding noise; judge them at the tank resonance.
    w = p.tank_resonance

    def tidy(poly):
        return (poly * k).trim(1e-14, w)

    return SParamPolynomials(
        tidy(raw.s11_num), tidy(raw.s21_num), tidy(raw.den), float(z0), "derived", tidy(raw.s22_num)
    )


@dataclass(frozen=True)
class NormalizedFrequency:
    omega_c: float
    big_omega: float | np.ndarray

    def __post_init__(self):
        if not self.omega_c > 0:
            raise InputError("cutoff angular frequency must be positive")
        if np.any(np.asarray(self.big_omega) < 0):
            raise InputError("normalized frequency must be non-negative")

    @property
    def omega(self):
        return self.omega_c * np.asarray(self.big_omega, dtype=float)


@dataclass(frozen=True)
class Quadrature:
    """Real and imaginary parts of numerator and denominator on the jw axis."""

    alpha_n: float | np.ndarray
    beta_n: float | np.ndarray
    alpha_d: float | np.ndarray
    beta_d: float | np.ndarray
    alpha_n21: float | np.ndarray
    beta_n21: float | np.ndarray


def _split(poly: Polynomial, w):
    """Real and imaginary parts of ``poly(j w)`` for real coefficients."""
    re = np.zeros_like(w)
    im = np.zeros_like(w)
    for k, c in enumerate(poly.coeffs):
        term = c * w**k
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            im = im + sign * term
        else:
            re = re + sign * term
    return re, im


def quadrature(c: SParamPolynomials, nf: NormalizedFrequency) -> Quadrature:
    """Evaluate the alternating even/odd coefficient sums at ``w = omega_c * Omega``.

    ``alpha`` collects ``c0 - c2 w^2 + c4 w^4``, ``beta`` collects
    ``c1 w - c3 w^3 + c5 w^5``.
    """
    w = nf.omega
    a_n, b_n = _split(c.s11_num, w)
    a_d, b_d = _split(c.den, w)
    a_21, b_21 = _split(c.s21_num, w)
    if np.ndim(w) == 0:
        a_n, b_n, a_d, b_d, a_21, b_21 = (float(x) for x in (a_n, b_n, a_d, b_d, a_21, b_21))
    return Quadrature(a_n, b_n, a_d, b_d, a_21, b_21)


def magnitude_phase(q: Quadrature, which: str = "S11"):
    """Magnitude and phase (radians) of S11 or S21 from its quadrature parts.

    The S21 numerator is purely imaginary, so its phase is ``+pi/2`` where
    ``beta'_N > 0`` and ``-pi/2`` where it is negative; ``atan2`` with a
    zero real part yields exactly that.
    """
    which = which.upper()
    den_sq = np.asarray(q.alpha_d) ** 2 + np.asarray(q.beta_d) ** 2
    if np.any(den_sq == 0):
        raise DenominatorZero("denominator vanishes at the requested frequency")
    den_phase = np.arctan2(q.beta_d, q.alpha_d)
    if which == "S11":
        mag = np.sqrt((np.asarray(q.alpha_n) ** 2 + np.asarray(q.beta_n) ** 2) / den_sq)
        phase = np.arctan2(q.beta_n, q.alpha_n) - den_phase
    elif which == "S21":
        mag = np.hypot(q.alpha_n21, q.beta_n21) / np.sqrt(den_sq)
        phase = np.arctan2(q.beta_n21, q.alpha_n21) - den_phase
    else:
        raise InputError(f"unknown parameter {which!r}; use S11 or S21")
    if np.ndim(mag) == 0:
        return float(mag), float(phase)
    return mag, phase


def transmission_zeros(c: SParamPolynomials) -> list[complex]:
    """Roots of the S21 numerator, the origin included."""
    return poly_roots(c.s21_num)
