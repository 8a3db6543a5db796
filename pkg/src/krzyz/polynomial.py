"""Dense univariate polynomials over the scalar fields, used for rational inner functions."""
from __future__ import annotations

from typing import Iterable

from . import scalar as sc
from .scalar import EXACT
from .series import TruncatedSeries


class Polynomial:
    """Coefficients lowest degree first, trailing zeros stripped."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs: Iterable, mode: str | None = None):
        values = list(coeffs)
        if mode is None:
            mode = sc.FLOAT if any(sc.mode_of(v) == sc.FLOAT for v in values) else EXACT
        values = [sc.coerce(v, mode) for v in values]
        while values and sc.is_zero(values[-1], 0.0):
            values.pop()
        self.coeffs = tuple(values)
        self.mode = mode

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else sc.zero(self.mode)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] + other[k] for k in range(n)], self.mode)

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] - other[k] for k in range(n)], self.mode)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.mode)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs], self.mode)
        if not self or not other:
            return Polynomial([], self.mode)
        out = [sc.zero(self.mode)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out, self.mode)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        return Polynomial([x * c for x in self.coeffs], self.mode)

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        shift = len(rem) - len(other.coeffs)
        quot = [sc.zero(self.mode)] * max(shift + 1, 0)
        for s in range(shift, -1, -1):
            c = rem[s + len(other.coeffs) - 1] / lead
            quot[s] = c
            if c:
                for k, b in enumerate(other.coeffs):
                    rem[s + k] = rem[s + k] - c * b
        return Polynomial(quot, self.mode), Polynomial(rem[: max(len(other.coeffs) - 1, 0)], self.mode)

    def monic(self) -> Polynomial:
        return self.scale(1 / self.coeffs[-1]) if self else self

    def conj_reverse(self, length: int) -> Polynomial:
        """``z**(length-1) * conj(p(1/conj(z)))`` for a polynomial with ``length`` slots."""
        if len(self.coeffs) > length:
            raise ValueError("polynomial does not fit in the requested length")
        return Polynomial([self[length - 1 - k].conjugate() for k in range(length)], self.mode)

    def __call__(self, z):
        floaty = sc.mode_of(z) == sc.FLOAT
        acc = 0j if floaty else sc.zero(self.mode)
        for c in reversed(self.coeffs):
            acc = acc * z + (complex(c) if floaty else c)
        return acc

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[: order + 1], order=order, mode=self.mode)

    def lowest_degree(self) -> int:
        """Index of the first nonzero coefficient (``-1`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __repr__(self):
        return f"Polynomial([{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        return format_poly(self)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (Euclid; exact mode only makes sense here)."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def reduce_fraction(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Cancel the common factor of ``num/den``."""
    g = gcd(num, den)
    if g.degree <= 0:
        return num, den
    return num.divmod(g)[0], den.divmod(g)[0]


def same_rational(n1: Polynomial, d1: Polynomial, n2: Polynomial, d2: Polynomial) -> bool:
    """``n1/d1 == n2/d2`` by cross multiplication."""
    return n1 * d2 == n2 * d1


def format_poly(p: Polynomial, var: str = "z") -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        text = sc.format_exact(c) if p.mode == EXACT else f"{c:g}"
        if p.mode == EXACT and c.im and c.re:
            text = f"({text})"
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k and text in ("1", "-1"):
            text = text[:-1]
        elif k:
            mono = "*" + mono
        terms.append(text + mono)
    return " + ".join(terms).replace("+ -", "- ")
