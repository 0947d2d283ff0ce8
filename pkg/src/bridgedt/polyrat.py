"""Polynomials and rational functions in the complex frequency ``s``.

Coefficients are stored lowest power first, so ``Polynomial((1, 0, 2))``
is ``1 + 2 s**2``. Values are immutable; every arithmetic operation
returns a new object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import DivisionByZeroFunction, NoConvergence, ZeroPolynomial

__all__ = [
    "Polynomial",
    "RationalFunction",
    "poly_eval",
    "poly_roots",
    "rat_arith",
    "S",
]

_EPS = np.finfo(float).eps
# Fixed offset for the initial Aberth circle; any irrational angle works.
_START_ANGLE = math.sqrt(2.0) - 1.0
CANCEL_TOL = 1e-10


def _clean(values) -> tuple:
    arr = np.atleast_1d(np.asarray(values))
    if arr.ndim != 1:
        raise ValueError("polynomial coefficients must be one-dimensional")
    if np.iscomplexobj(arr) and np.all(arr.imag == 0):
        arr = arr.real
    cast = complex if np.iscomplexobj(arr) else float
    out = [cast(c) for c in arr.tolist()]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with coefficient ``coeffs[k]`` multiplying ``s**k``.

    Trailing (highest-power) exact zeros are dropped on construction, so the
    zero polynomial is the empty tuple.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))
        if not all(np.isfinite(complex(c)) for c in self.coeffs):
            raise ValueError("polynomial coefficients must be finite")

    # construction helpers
    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1.0) -> Polynomial:
        return cls((0.0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots, leading=1.0) -> Polynomial:
        if len(roots) == 0:
            return cls((leading,))
        c = npp.polyfromroots(np.asarray(roots, dtype=complex)) * leading
        if np.allclose(c.imag, 0.0, rtol=0.0, atol=1e-12 * np.max(np.abs(c))):
            c = c.real
        return cls(c)

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            return 0.0
        return self.coeffs[-1]

    @property
    def is_real(self) -> bool:
        return all(isinstance(c, float) for c in self.coeffs)

    def as_array(self) -> np.ndarray:
        dtype = float if self.is_real else complex
        if self.is_zero:
            return np.zeros(1, dtype=dtype)
        return np.array(self.coeffs, dtype=dtype)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0.0

    def zero_order(self) -> int:
        """Multiplicity of the root at ``s = 0``."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    # evaluation
    def __call__(self, s):
        return poly_eval(self, s)

    def roots(self, max_iter: int = 1000) -> list[complex]:
        return poly_roots(self, max_iter=max_iter)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Number):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(npp.polyadd(self.as_array(), other.as_array()))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self.as_array())

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(npp.polysub(self.as_array(), other.as_array()))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        return Polynomial(npp.polymul(self.as_array(), other.as_array()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return Polynomial(self.as_array() / other)
        return NotImplemented

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        if self.degree < other.degree:
            return Polynomial(), self
        q, r = npp.polydiv(self.as_array(), other.as_array())
        return Polynomial(q), Polynomial(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        out = Polynomial((1.0,))
        for _ in range(int(n)):
            out = out * self
        return out

    def shift_down(self, k: int) -> Polynomial:
        """Divide by ``s**k``; the low ``k`` coefficients must be zero."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"polynomial is not divisible by s**{k}")
        return Polynomial(self.coeffs[k:])

    def derivative(self) -> Polynomial:
        if self.degree < 1:
            return Polynomial()
        return Polynomial(npp.polyder(self.as_array()))

    def scale_variable(self, factor: float) -> Polynomial:
        """Return ``q(t) = p(factor * t)``."""
        powers = factor ** np.arange(len(self.coeffs))
        return Polynomial(self.as_array() * powers)

    def trim(self, rel_tol: float, scale: float = 1.0) -> Polynomial:
        """Drop top coefficients that are negligible at ``|s| = scale``.

        A coefficient counts as negligible when ``|c_k| scale**k`` is below
        ``rel_tol`` times the largest such term.
        """
        if self.is_zero:
            return self
        arr = self.as_array()
        weights = np.abs(arr) * float(scale) ** np.arange(len(arr))
        cutoff = rel_tol * weights.max()
        n = len(arr)
        while n > 1 and weights[n - 1] <= cutoff:
            n -= 1
        cleaned = np.where(weights <= cutoff, 0.0, arr)[:n]
        return Polynomial(cleaned)


S = Polynomial((0.0, 1.0))


def poly_eval(p: Polynomial, s):
    """Evaluate ``p`` at ``s`` (scalar or array) with Horner's scheme."""
    coeffs = p.coeffs
    if not coeffs:
        return np.zeros_like(s, dtype=complex) if isinstance(s, np.ndarray) else 0.0
    acc = coeffs[-1] * np.ones_like(s) if isinstance(s, np.ndarray) else coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * s + c
    return acc


def poly_roots(p: Polynomial, max_iter: int = 1000) -> list[complex]:
    """All roots of ``p`` with multiplicity, by Aberth iteration.

    The variable is rescaled so the geometric mean of root magnitudes is
    one before iterating; component-valued circuit polynomials otherwise
    span dozens of decades between their lowest and highest coefficients.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no isolated roots")
    k0 = p.zero_order()
    roots = [0j] * k0
    q = p.shift_down(k0)
    n = q.degree
    if n <= 0:
        return roots
    if n == 1:
        return roots + [complex(-q.coeffs[0] / q.coeffs[1])]

    sigma = abs(q.coeffs[0] / q.coeffs[-1]) ** (1.0 / n)
    scaled = q.scale_variable(sigma)
    a = scaled.as_array().astype(complex) / scaled.leading
    z = _aberth(a, max_iter)
    z = z * sigma
    return roots + sorted((complex(r) for r in z), key=lambda r: (r.real, r.imag))


def _aberth(a: np.ndarray, max_iter: int) -> np.ndarray:
    """Aberth iteration on the monic polynomial with coefficients ``a``."""
    n = len(a) - 1
    radius = 1.0 + np.max(np.abs(a[:-1]))
    angles = 2.0 * np.pi * np.arange(n) / n + _START_ANGLE
    z = radius * np.exp(1j * angles)
    da = npp.polyder(a)
    abs_a = np.abs(a)
    done = np.zeros(n, dtype=bool)
    for _ in range(max_iter):
        pz = npp.polyval(z, a)
        bound = 8.0 * _EPS * npp.polyval(np.abs(z), abs_a)
        done |= np.abs(pz) <= bound
        if done.all():
            return z
        dpz = npp.polyval(z, da)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        bad = ~np.isfinite(step)
        if bad.any():
            step[bad] = 1e-3 * (1.0 + np.abs(z[bad])) * np.exp(1j * _START_ANGLE)
        step[done] = 0.0
        small = np.abs(step) <= 4.0 * _EPS * np.abs(z)
        z = z - step
        done |= small
    if done.all():
        return z
    raise NoConvergence(f"Aberth iteration did not converge in {max_iter} steps")


def _match_roots(ra, rb, tol):
    """Greedy nearest pairing of two root lists within a relative tolerance."""
    used = set()
    pairs = []
    for i, r in enumerate(ra):
        best, best_d = None, None
        for j, t in enumerate(rb):
            if j in used:
                continue
            d = abs(r - t)
            if d <= tol * max(1.0, abs(r)) and (best_d is None or d < best_d):
                best, best_d = j, d
        if best is not None:
            used.add(best)
            pairs.append((i, best))
    return pairs


def _deflate(p: Polynomial, roots) -> Polynomial:
    if not roots:
        return p
    q, _ = divmod(p, Polynomial.from_roots(roots))
    arr = q.as_array()
    if np.iscomplexobj(arr) and np.all(np.abs(arr.imag) <= 1e-9 * np.max(np.abs(arr))):
        q = Polynomial(arr.real)
    return q


@dataclass(frozen=True)
class RationalFunction:
    """Quotient ``num / den`` with a monic denominator."""

    num: Polynomial
    den: Polynomial = Polynomial((1.0,))

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, Polynomial):
            num = Polynomial(np.atleast_1d(num))
        if not isinstance(den, Polynomial):
            den = Polynomial(np.atleast_1d(den))
        if den.is_zero:
            raise DivisionByZeroFunction("denominator is the zero polynomial")
        if num.is_zero:
            den = Polynomial((1.0,))
        lead = den.leading
        if lead != 1:
            num, den = num / lead, den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def constant(cls, value) -> RationalFunction:
        return cls(Polynomial((value,)))

    def __call__(self, s):
        return self.num(s) / self.den(s)

    def __repr__(self):
        return f"RationalFunction(num={list(self.num.coeffs)!r}, den={list(self.den.coeffs)!r})"

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def zeros(self) -> list[complex]:
        return [] if self.num.degree < 1 else self.num.roots()

    def poles(self) -> list[complex]:
        return [] if self.den.degree < 1 else self.den.roots()

    def reduced(self, tol: float = CANCEL_TOL) -> RationalFunction:
        """Cancel common factors.

        Powers of ``s`` are cancelled exactly; other factors only when a
        numerator root and a denominator root coincide within ``tol``
        relative to the root magnitude.
        """
        num, den = self.num, self.den
        if num.is_zero:
            return RationalFunction(num, Polynomial((1.0,)))
        k = min(num.zero_order(), den.zero_order())
        if k:
            num, den = num.shift_down(k), den.shift_down(k)
        if num.degree >= 1 and den.degree >= 1:
            try:
                rn, rd = num.roots(), den.roots()
            except NoConvergence:
                return RationalFunction(num, den)
            pairs = _match_roots(rd, rn, tol)
            if pairs:
                common = [rd[i] for i, _ in pairs]
                num, den = _deflate(num, common), _deflate(den, common)
        return RationalFunction(num, den)

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, Number):
            return RationalFunction.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("add", self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("add", other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("sub", self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("sub", other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("mul", self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("mul", other, self)

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("div", self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else rat_arith("div", other, self)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)


def rat_arith(kind: str, a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Combine two rational functions; ``kind`` is add, sub, mul or div."""
    if kind in ("add", "sub"):
        bn = b.num if kind == "add" else -b.num
        if a.den == b.den:
            result = RationalFunction(a.num + bn, a.den)
        else:
            result = RationalFunction(a.num * b.den + bn * a.den, a.den * b.den)
    elif kind == "mul":
        result = RationalFunction(a.num * b.num, a.den * b.den)
    elif kind == "div":
        if b.is_zero:
            raise DivisionByZeroFunction("division by an identically zero function")
        result = RationalFunction(a.num * b.den, a.den * b.num)
    else:
        raise ValueError(f"unknown operation {kind!r}")
    return result.reduced()
