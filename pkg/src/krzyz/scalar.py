"""Scalar fields for the series kernel.

Two modes are supported:

``exact``
    Gaussian rationals, i.e. ``p + q*i`` with ``p, q`` arbitrary-precision
    :class:`fractions.Fraction`.  No rounding ever happens.
``float``
    Python ``complex``.  A module-wide tolerance is used by the comparison
    helpers below and nowhere else.
"""
from __future__ import annotations

import math
import os
import re
from fractions import Fraction
from numbers import Rational

from .errors import ModeMismatch

EXACT = "exact"
FLOAT = "float"

DEFAULT_FLOAT_TOL = 1e-10
ABS_FLOOR = 1e-14


def float_tolerance() -> float:
    """Relative tolerance for float-mode equality; ``KRZYZ_FLOAT_TOL`` overrides it."""
    raw = os.environ.get("KRZYZ_FLOAT_TOL")
    if raw is None:
        return DEFAULT_FLOAT_TOL
    return float(raw)


class GaussianRational:
    """Immutable complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine a GaussianRational with an imaginary part")
            re, im = re.re, re.im
        if not isinstance(re, (int, Rational)) or not isinstance(im, (int, Rational)):
            raise ModeMismatch(f"exact scalars need rational parts, got {re!r}, {im!r}")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by exact zero")
            return GaussianRational(self.re / other.re, self.im / other.re)
        d = other.abs2()
        num = self * other.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** -n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_exact(self)


_NUM = r"[+-]?\d+(?:/\d+)?"
_EXACT_RE = re.compile(
    rf"^(?:(?P<re>{_NUM})(?P<im>[+-]\d+(?:/\d+)?)i|(?P<only_im>{_NUM})i|(?P<only_re>{_NUM}))$"
)


def format_exact(x: GaussianRational) -> str:
    """``p/q`` for real values, ``p/q+r/si`` (or ``r/si``) otherwise."""
    if not x.im:
        return str(x.re)
    if not x.re:
        return f"{x.im}i"
    sign = "+" if x.im > 0 else "-"
    return f"{x.re}{sign}{abs(x.im)}i"


def parse_exact(text: str) -> GaussianRational:
    """Inverse of :func:`format_exact`.  Decimal notation is rejected."""
    m = _EXACT_RE.match(text.strip().replace(" ", ""))
    if m is None:
        raise ValueError(f"not an exact rational literal: {text!r} (expected p/q or an integer)")
    if m["only_re"] is not None:
        return GaussianRational(Fraction(m["only_re"]))
    if m["only_im"] is not None:
        return GaussianRational(0, Fraction(m["only_im"]))
    return GaussianRational(Fraction(m["re"]), Fraction(m["im"]))


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal into a Fraction; decimals are refused."""
    x = parse_exact(text)
    if x.im:
        raise ValueError(f"expected a real rational, got {text!r}")
    return x.re


def mode_of(x) -> str:
    if isinstance(x, (GaussianRational, int, Rational)) and not isinstance(x, bool):
        return EXACT
    if isinstance(x, (float, complex)):
        return FLOAT
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def coerce(x, mode: str):
    """Bring ``x`` into ``mode``; exact values may be promoted to float, never the reverse."""
    if mode == EXACT:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return GaussianRational(x)
        raise ModeMismatch(f"{x!r} cannot enter exact mode")
    if mode == FLOAT:
        return complex(x)
    raise ValueError(f"unknown mode {mode!r}")


def zero(mode: str):
    return GaussianRational(0) if mode == EXACT else 0j


def one(mode: str):
    return GaussianRational(1) if mode == EXACT else 1 + 0j


def abs2(x):
    """Squared modulus: exact Fraction for exact scalars, float otherwise."""
    if isinstance(x, GaussianRational):
        return x.abs2()
    if isinstance(x, (int, Rational)):
        return Fraction(x) ** 2
    return abs(x) ** 2


def conj(x):
    return x.conjugate()


def is_zero(x, tol: float | None = None) -> bool:
    """Exact test in exact mode; absolute-tolerance test in float mode."""
    if mode_of(x) == EXACT:
        return not x
    if tol is None:
        tol = float_tolerance()
    return abs(x) <= tol


def close(a, b, rtol: float | None = None, atol: float = ABS_FLOOR) -> bool:
    """Equality with exactness in exact mode and ``rtol``/``atol`` in float mode."""
    if mode_of(a) == EXACT and mode_of(b) == EXACT:
        return coerce(a, EXACT) == coerce(b, EXACT)
    if rtol is None:
        rtol = float_tolerance()
    a, b = complex(a), complex(b)
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), atol)


def unit_from_angle(phi, mode: str = EXACT):
    """``e^{i*phi}``.

    ``phi`` is radians (a number) or one of the strings ``"0"``, ``"pi"``,
    ``"pi/2"``, ``"-pi/2"``.  Exact mode only accepts quarter turns.
    """
    from .errors import NonrationalRotationInExactMode

    named = {"0": 0, "pi": 2, "-pi": 2, "pi/2": 1, "-pi/2": 3}
    if isinstance(phi, str):
        key = phi.strip().replace(" ", "")
        if key not in named:
            raise NonrationalRotationInExactMode(f"unrecognised angle {phi!r}")
        quarter = named[key]
    else:
        turns = float(phi) / (math.pi / 2)
        nearest = round(turns)
        quarter = nearest % 4 if abs(turns - nearest) < 1e-12 else None
        if quarter is None:
            if mode == EXACT:
                raise NonrationalRotationInExactMode(
                    f"e^(i*{phi}) is not a Gaussian rational; use float mode")
            return complex(math.cos(phi), math.sin(phi))
    unit = (GaussianRational(1), GaussianRational(0, 1),
            GaussianRational(-1), GaussianRational(0, -1))[quarter]
    return unit if mode == EXACT else complex(unit)
