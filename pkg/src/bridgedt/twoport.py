"""Two-port matrices at a single complex frequency and conversions between them.

ABCD relates ``(V1, I1)`` to ``(V2, I2)`` with ``I2`` flowing out of port 2,
so cascading is a plain matrix product. S-parameters share one real
reference impedance ``z0`` at both ports.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve

from .elements import BridgedTParams
from .errors import (
    FloatingNode,
    NoThroughPath,
    OpenSeriesBranch,
    SingularAtFrequency,
    SingularDenominator,
    ZeroBranch,
)

__all__ = [
    "AbcdMatrix",
    "SMatrix",
    "PiAdmittances",
    "YMatrix",
    "y_delta",
    "pi_to_abcd",
    "abcd_to_s",
    "abcd_to_y",
    "y_to_abcd",
    "y_to_s",
    "cascade",
    "parallel_y",
    "kron_reduce",
    "bridged_t_pi",
    "bridged_t_composed",
    "verbatim_pi_admittances",
    "FLOATING_NODE_TOL",
]

FLOATING_NODE_TOL = 1e-18


@dataclass(frozen=True)
class AbcdMatrix:
    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def identity(cls) -> AbcdMatrix:
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def series(cls, z: complex) -> AbcdMatrix:
        return cls(1.0, z, 0.0, 1.0)

    @classmethod
    def shunt(cls, y: complex) -> AbcdMatrix:
        return cls(1.0, 0.0, y, 1.0)

    @classmethod
    def from_array(cls, m) -> AbcdMatrix:
        m = np.asarray(m)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def __matmul__(self, other):
        if not isinstance(other, AbcdMatrix):
            return NotImplemented
        return cascade(self, other)


@dataclass(frozen=True)
class SMatrix:
    s11: complex
    s12: complex
    s21: complex
    s22: complex
    z0: float = 50.0

    @classmethod
    def from_array(cls, m, z0: float = 50.0) -> SMatrix:
        m = np.asarray(m)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]), float(z0))

    def as_array(self) -> np.ndarray:
        return np.array([[self.s11, self.s12], [self.s21, self.s22]], dtype=complex)

    def power_balance(self) -> tuple[float, float]:
        """``|s11|^2 + |s21|^2`` and ``|s22|^2 + |s12|^2``; both 1 when lossless."""
        return (abs(self.s11) ** 2 + abs(self.s21) ** 2, abs(self.s22) ** 2 + abs(self.s12) ** 2)


@dataclass(frozen=True)
class PiAdmittances:
    """Pi network: ``y1`` shunts port 1, ``y2`` shunts port 2, ``y3`` is the series arm.

    An absent branch is admittance 0; infinite admittances are not representable.
    """

    y1: complex
    y2: complex
    y3: complex

    def __post_init__(self):
        for name in ("y1", "y2", "y3"):
            if not np.isfinite(complex(getattr(self, name))):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class YMatrix:
    y11: complex
    y12: complex
    y21: complex
    y22: complex

    @classmethod
    def zero(cls) -> YMatrix:
        return cls(0.0, 0.0, 0.0, 0.0)

    @classmethod
    def series(cls, y: complex) -> YMatrix:
        """Two-port of a single element of admittance ``y`` between the ports."""
        return cls(y, -y, -y, y)

    @classmethod
    def from_array(cls, m) -> YMatrix:
        m = np.asarray(m)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    def as_array(self) -> np.ndarray:
        return np.array([[self.y11, self.y12], [self.y21, self.y22]], dtype=complex)

    def __add__(self, other):
        if not isinstance(other, YMatrix):
            return NotImplemented
        return parallel_y(self, other)


def y_delta(za: complex, zb: complex, zc: complex) -> tuple[complex, complex, complex]:
    """Star to delta.

    ``za`` is the star arm at port 1, ``zb`` the arm at port 2 and ``zc`` the
    arm to ground. Returns the delta impedances ``(port1_shunt, port2_shunt,
    series)``.
    """
    if za == 0 or zb == 0 or zc == 0:
        raise ZeroBranch("star-delta conversion needs three nonzero arms")
    p = za * zb + zb * zc + zc * za
    return p / zb, p / za, p / zc


def pi_to_abcd(pi: PiAdmittances) -> AbcdMatrix:
    if pi.y3 == 0:
        raise OpenSeriesBranch("a Pi network with an open series arm has no finite ABCD matrix")
    return AbcdMatrix(
        1 + pi.y2 / pi.y3,
        1 / pi.y3,
        pi.y1 + pi.y2 + pi.y1 * pi.y2 / pi.y3,
        1 + pi.y1 / pi.y3,
    )


def abcd_to_s(m: AbcdMatrix, z0: float = 50.0) -> SMatrix:
    if not z0 > 0:
        raise ValueError("reference impedance must be positive")
    a, b, c, d = m.a, m.b, m.c, m.d
    den = a + b / z0 + c * z0 + d
    if den == 0:
        raise SingularDenominator("A + B/z0 + C z0 + D vanishes")
    return SMatrix(
        (a + b / z0 - c * z0 - d) / den,
        2 * (a * d - b * c) / den,
        2 / den,
        (-a + b / z0 - c * z0 + d) / den,
        float(z0),
    )


def cascade(m1: AbcdMatrix, m2: AbcdMatrix) -> AbcdMatrix:
    return AbcdMatrix(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def parallel_y(n1: YMatrix, n2: YMatrix) -> YMatrix:
    return YMatrix(n1.y11 + n2.y11, n1.y12 + n2.y12, n1.y21 + n2.y21, n1.y22 + n2.y22)


def y_to_abcd(y: YMatrix) -> AbcdMatrix:
    if y.y21 == 0:
        raise NoThroughPath("y21 = 0: no transmission between the ports")
    det = y.y11 * y.y22 - y.y12 * y.y21
    return AbcdMatrix(-y.y22 / y.y21, -1 / y.y21, -det / y.y21, -y.y11 / y.y21)


def abcd_to_y(m: AbcdMatrix) -> YMatrix:
    if m.b == 0:
        raise SingularDenominator("B = 0: the Y matrix of a shunt-only network is not finite")
    return YMatrix(m.d / m.b, -m.det / m.b, -1 / m.b, m.a / m.b)


def y_to_s(y: YMatrix, z0: float = 50.0) -> SMatrix:
    """``S = (I - z0 Y)(I + z0 Y)^-1``."""
    yn = z0 * y.as_array()
    eye = np.eye(2)
    lhs = eye + yn
    if abs(np.linalg.det(lhs)) == 0:
        raise SingularDenominator("I + z0 Y is singular")
    # S = (I - zY)(I + zY)^-1, solved as (I + zY)^T S^T = (I - zY)^T
    s = np.linalg.solve(lhs.T, (eye - yn).T).T
    return SMatrix.from_array(s, z0)


def kron_reduce(table, internal):
    """Eliminate internal node(s) from a nodal admittance table by Schur complement.

    ``internal`` is one index or a sequence of indices. A 2x2 result comes
    back as a :class:`YMatrix`, anything larger as an array.
    """
    y = np.asarray(table, dtype=complex)
    idx = [internal] if np.isscalar(internal) else list(internal)
    ext = [k for k in range(y.shape[0]) if k not in idx]
    y_ee = y[np.ix_(ext, ext)]
    y_ei = y[np.ix_(ext, idx)]
    y_ie = y[np.ix_(idx, ext)]
    y_ii = y[np.ix_(idx, idx)]
    if len(idx) == 1:
        pivot = y_ii[0, 0]
        if abs(pivot) < FLOATING_NODE_TOL:
            raise FloatingNode(f"internal node {idx[0]} has (near) zero self-admittance")
        reduced = y_ee - y_ei @ y_ie / pivot
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", LinAlgWarning)
            lu, piv = lu_factor(y_ii, check_finite=True)
        scale = np.max(np.abs(y_ii))
        if np.any(np.abs(np.diag(lu)) <= FLOATING_NODE_TOL * scale):
            raise FloatingNode("internal node block is singular")
        reduced = y_ee - y_ei @ lu_solve((lu, piv), y_ie)
    if reduced.shape == (2, 2):
        return YMatrix.from_array(reduced)
    return reduced


# Bridged-T composition routes


def _tank_admittance(p: BridgedTParams, s: complex) -> complex:
    return 1.0 / (s * p.L3) + s * p.C2


# relative cancellation in 1/(sL3) + sC2 treated as an exact tank resonance
TANK_CANCEL_TOL = 1e-12


def bridged_t_composed(p: BridgedTParams, s: complex) -> AbcdMatrix:
    """ABCD of the bridged T built as (series L1, shunt tank, series L2) || C1."""
    tee = cascade(
        cascade(AbcdMatrix.series(s * p.L1), AbcdMatrix.shunt(_tank_admittance(p, s))),
        AbcdMatrix.series(s * p.L2),
    )
    bridge = YMatrix.series(s * p.C1)
    return y_to_abcd(parallel_y(abcd_to_y(tee), bridge))


def bridged_t_pi(p: BridgedTParams, s: complex) -> PiAdmittances:
    """Pi equivalent: star-delta on (L1, L2, tank), bridge C1 added to the series arm."""
    y_tank = _tank_admittance(p, s)
    if abs(y_tank) <= TANK_CANCEL_TOL * abs(s * p.C2):
        raise SingularAtFrequency("tank resonance: the star arm to ground is open")
    z1, z2, z3 = y_delta(s * p.L1, s * p.L2, 1.0 / y_tank)
    return PiAdmittances(1.0 / z1, 1.0 / z2, 1.0 / z3 + s * p.C1)


def verbatim_pi_admittances(p: BridgedTParams, s: complex) -> PiAdmittances:
    """Pi admittances exactly as commonly printed for this network.

    The printed form omits the factor ``s`` from the tank term of the shunt
    arms and puts the bridge capacitor in series with the series arm rather
    than in parallel. Kept only so reports can quantify the difference
    against :func:`bridged_t_pi`.
    """
    L1, L2, L3, C1, C2 = p.L1, p.L2, p.L3, p.C1, p.C2
    tank = 1 + s**2 * C2 * L3
    y1 = 1 / (s * L1 + L3 * (1 + L1 / L2) / tank)
    y2 = 1 / (s * L2 + L3 * (1 + L2 / L1) / tank)
    y3 = 1 / (1 / (s * C1) + s * (L1 + L2) + L1 * L2 * (s / L3 + s**3 * C2))
    return PiAdmittances(y1, y2, y3)
