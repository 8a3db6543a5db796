"""Truncated power series over exact or floating scalars.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of
``z**0 .. z**N``; everything beyond ``z**N`` is *unknown*, not zero.  Binary
operations return the smaller of the two operand orders.

    >>> from krzyz.series import TruncatedSeries
    >>> one_plus_z = TruncatedSeries([1, 1], order=2)
    >>> str(one_plus_z * TruncatedSeries([1, -1], order=2))
    '1 - z^2 + O(z^3)'
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import scalar as sc
from .errors import (
    BadConstantTerm,
    CompositionAtNonzero,
    DivisionByNonunit,
    InsufficientOrder,
    ModeMismatch,
)
from .scalar import EXACT, FLOAT


def _infer_mode(values) -> str:
    modes = {sc.mode_of(v) for v in values}
    return FLOAT if FLOAT in modes else EXACT


class TruncatedSeries:
    """Coefficients ``c[0..order]`` of a power series, immutable."""

    __slots__ = ("_c", "_mode")

    def __init__(self, coeffs: Iterable, order: int | None = None, mode: str | None = None):
        values = list(coeffs)
        if mode is None:
            mode = _infer_mode(values) if values else EXACT
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError("a truncated series needs order >= 0")
        values = values[: order + 1]
        values += [0] * (order + 1 - len(values))
        self._c = tuple(sc.coerce(v, mode) for v in values)
        self._mode = mode

    @classmethod
    def _raw(cls, coeffs: tuple, mode: str) -> TruncatedSeries:
        out = object.__new__(cls)
        out._c = coeffs
        out._mode = mode
        return out

    # --- basic protocol -------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._mode == other._mode and self._c == other._c

    def __hash__(self):
        return hash((self._mode, self._c))

    def allclose(self, other: TruncatedSeries, rtol: float | None = None) -> bool:
        """Coefficientwise :func:`krzyz.scalar.close` at the common order."""
        n = min(self.order, other.order)
        return all(sc.close(self._c[k], other._c[k], rtol) for k in range(n + 1))

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(map(str, self._c))}], order={self.order}, mode={self._mode!r})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._c):
            if sc.is_zero(c, 0.0):
                continue
            text = sc.format_exact(c) if self._mode == EXACT else f"{c:g}"
            if self._mode == EXACT and c.im and c.re:
                text = f"({text})"
            if k and text in ("1", "-1"):
                text = text[:-1]
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k and text not in ("", "-") and not text.endswith(")"):
                mono = "*" + mono
            terms.append(text + mono)
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(z^{self.order + 1})"

    # --- conversions ----------------------------------------------------
    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise InsufficientOrder(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries._raw(self._c[: order + 1], self._mode)

    def to_float(self) -> TruncatedSeries:
        return TruncatedSeries._raw(tuple(complex(c) for c in self._c), FLOAT)

    def conjugate_coeffs(self) -> TruncatedSeries:
        """Series of ``conj(f(conj(z)))``."""
        return TruncatedSeries._raw(tuple(c.conjugate() for c in self._c), self._mode)

    def with_constant(self, value) -> TruncatedSeries:
        return TruncatedSeries._raw((sc.coerce(value, self._mode),) + self._c[1:], self._mode)

    # --- calculus -------------------------------------------------------
    def deriv(self) -> TruncatedSeries:
        """Termwise derivative; order drops by one (order 0 gives the zero series of order 0)."""
        if self.order == 0:
            return TruncatedSeries._raw((sc.zero(self._mode),), self._mode)
        return TruncatedSeries._raw(tuple(k * self._c[k] for k in range(1, len(self._c))), self._mode)

    def integ(self) -> TruncatedSeries:
        """Antiderivative vanishing at 0; order grows by one."""
        if self._mode == EXACT:
            tail = tuple(c * Fraction(1, k + 1) for k, c in enumerate(self._c))
        else:
            tail = tuple(c / (k + 1) for k, c in enumerate(self._c))
        return TruncatedSeries._raw((sc.zero(self._mode),) + tail, self._mode)

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by ``z**k``; order grows by ``k``."""
        return TruncatedSeries._raw((sc.zero(self._mode),) * k + self._c, self._mode)

    def unshift(self, k: int = 1) -> TruncatedSeries:
        """Divide by ``z**k``; the first ``k`` coefficients must vanish."""
        if k > self.order:
            raise InsufficientOrder(f"cannot divide an order-{self.order} series by z^{k}")
        if any(not sc.is_zero(c) for c in self._c[:k]):
            raise DivisionByNonunit(f"series is not divisible by z^{k}")
        return TruncatedSeries._raw(self._c[k:], self._mode)

    def __call__(self, z):
        """Evaluate the known polynomial part at a point."""
        acc = sc.zero(self._mode) if sc.mode_of(z) == EXACT and self._mode == EXACT else 0j
        for c in reversed(self._c):
            acc = acc * z + c
        return acc

    # --- operators ------------------------------------------------------
    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        try:
            value = sc.coerce(other, self._mode)
        except (ModeMismatch, TypeError):
            return NotImplemented
        if self._mode == EXACT and sc.mode_of(other) == FLOAT:
            raise ModeMismatch("float scalar combined with an exact series")
        return TruncatedSeries._raw((value,) + (sc.zero(self._mode),) * self.order, self._mode)

    def __add__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else arith(self, other, "add")

    def __radd__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else arith(other, self, "add")

    def __sub__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else arith(self, other, "sub")

    def __rsub__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else arith(other, self, "sub")

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if self._mode == EXACT and sc.mode_of(other) == FLOAT:
                raise ModeMismatch("float scalar combined with an exact series")
            v = sc.coerce(other, self._mode)
            return TruncatedSeries._raw(tuple(c * v for c in self._c), self._mode)
        return arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            if self._mode == EXACT and sc.mode_of(other) == FLOAT:
                raise ModeMismatch("float scalar combined with an exact series")
            v = sc.coerce(other, self._mode)
            if sc.is_zero(v):
                raise DivisionByNonunit("division by a zero scalar")
            return TruncatedSeries._raw(tuple(c / v for c in self._c), self._mode)
        return arith(self, other, "div")

    def __rtruediv__(self, other):
        other = self._lift(other)
        return other if other is NotImplemented else arith(other, self, "div")

    def __neg__(self):
        return TruncatedSeries._raw(tuple(-c for c in self._c), self._mode)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self._lift(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


def monomial(k: int, order: int, coeff=1, mode: str = EXACT) -> TruncatedSeries:
    """``coeff * z**k`` as a series of the given order."""
    c = [0] * (order + 1)
    if k <= order:
        c[k] = coeff
    return TruncatedSeries(c, order=order, mode=mode)


def _check_modes(a: TruncatedSeries, b: TruncatedSeries):
    if a.mode != b.mode:
        raise ModeMismatch(f"cannot combine {a.mode} and {b.mode} series")


def arith(a: TruncatedSeries, b: TruncatedSeries, kind: str) -> TruncatedSeries:
    """Add, subtract, multiply (Cauchy product) or divide two series.

    The result has order ``min(a.order, b.order)``.  Division requires a
    unit constant term in ``b``.
    """
    _check_modes(a, b)
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    if kind == "add":
        out = tuple(ac[k] + bc[k] for k in range(n + 1))
    elif kind == "sub":
        out = tuple(ac[k] - bc[k] for k in range(n + 1))
    elif kind == "mul":
        out = tuple(_cauchy(ac, bc, k) for k in range(n + 1))
    elif kind == "div":
        b0 = bc[0]
        if sc.is_zero(b0):
            raise DivisionByNonunit("divisor has zero constant term")
        q = []
        for k in range(n + 1):
            s = ac[k]
            for j in range(1, k + 1):
                if bc[j]:
                    s = s - bc[j] * q[k - j]
            q.append(s / b0)
        out = tuple(q)
    else:
        raise ValueError(f"unknown arithmetic kind {kind!r}")
    return TruncatedSeries._raw(out, a.mode)


def _cauchy(ac: Sequence, bc: Sequence, k: int):
    s = ac[0] * bc[k]
    for j in range(1, k + 1):
        if ac[j] and bc[k - j]:
            s = s + ac[j] * bc[k - j]
    return s


def exp_log(a: TruncatedSeries, kind: str) -> TruncatedSeries:
    """``exp(a)`` for ``a[0] == 0`` or ``log(a)`` for ``a[0] == 1``.

    ``exp`` uses the recurrence ``n g_n = sum_{k=1..n} k a_k g_{n-k}``, so
    exact input stays exact.  ``log`` is ``integ(a' / a)``.
    """
    mode = a.mode
    c = a.coeffs
    if kind == "exp":
        if not sc.is_zero(c[0]):
            raise BadConstantTerm("exp needs a zero constant term; pull e^{a0} out as a prefactor")
        g = [sc.one(mode)]
        for n in range(1, a.order + 1):
            s = sc.zero(mode)
            for k in range(1, n + 1):
                if c[k]:
                    s = s + k * c[k] * g[n - k]
            g.append(s * Fraction(1, n) if mode == EXACT else s / n)
        return TruncatedSeries._raw(tuple(g), mode)
    if kind == "log":
        if not sc.close(c[0], 1):
            raise BadConstantTerm("log needs constant term 1")
        if a.order == 0:
            return TruncatedSeries._raw((sc.zero(mode),), mode)
        return arith(a.deriv(), a.truncate(a.order - 1), "div").integ()
    raise ValueError(f"unknown kind {kind!r}")


def exp(a: TruncatedSeries) -> TruncatedSeries:
    return exp_log(a, "exp")


def log(a: TruncatedSeries) -> TruncatedSeries:
    return exp_log(a, "log")


def compose(G: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of ``G(w(z))`` by Horner's rule; needs ``w(0) == 0``."""
    _check_modes(G, w)
    if not sc.is_zero(w[0]):
        raise CompositionAtNonzero("the inner series must vanish at 0")
    n = min(G.order, w.order)
    w = w.truncate(n)
    acc = TruncatedSeries._raw((G[n],) + (sc.zero(G.mode),) * n, G.mode)
    for j in range(n - 1, -1, -1):
        acc = (acc * w).with_constant(G[j])
    return acc


def power_coefficients(w: TruncatedSeries, n: int) -> list:
    """Row ``({w^1}_n, ..., {w^n}_n)`` of coefficient ``n`` of successive powers."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if w.order < n:
        raise InsufficientOrder(f"need order >= {n}, have {w.order}")
    if not sc.is_zero(w[0]):
        raise CompositionAtNonzero("w(0) must vanish")
    w = w.truncate(n)
    row = []
    p = w
    for j in range(1, n + 1):
        row.append(p[n])
        if j < n:
            p = p * w
    return row
