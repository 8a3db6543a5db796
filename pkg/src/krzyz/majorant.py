"""Coefficients of the extremal family ``F*(z, t) = exp(-t (1+z)/(1-z))``.

``F*`` is stored as ``e^{-t} * U(z)`` with ``U(z) = exp(-2t z/(1-z))``, so
every exact quantity is rational and ``e^{-t}`` is never evaluated except
when a float bound is explicitly requested.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import scalar as sc
from .errors import InsufficientOrder, NonpositiveParameter
from .scalar import EXACT, FLOAT
from .series import TruncatedSeries, compose, exp, monomial

PREFACTOR = "exp(-t)"


def _check_t(t) -> Fraction:
    t = Fraction(t)
    if t <= 0:
        raise NonpositiveParameter(f"t must be positive, got {t}")
    return t


@dataclass(frozen=True)
class MajorantCoefficients:
    """``F*`` coefficients as ``e^{-t} * rational_part``."""

    t: Fraction
    rational_part: TruncatedSeries
    prefactor: str = PREFACTOR

    @property
    def order(self) -> int:
        return self.rational_part.order

    def float_coeffs(self) -> list[complex]:
        scale = math.exp(-float(self.t))
        return [scale * complex(c) for c in self.rational_part]


@dataclass(frozen=True)
class BoundHorizon:
    t: Fraction
    bound: float
    N: int
    boundary: bool


def halfplane_coeffs(order: int) -> TruncatedSeries:
    """``(1+z)/(1-z) = 1 + 2z + 2z^2 + ...``"""
    if order < 0:
        raise ValueError("order must be >= 0")
    return TruncatedSeries([1] + [2] * order)


def _exponent(t: Fraction, order: int) -> TruncatedSeries:
    # -2t z/(1-z) = -2t (z + z^2 + ...)
    return TruncatedSeries([0] + [-2 * t] * order)


def fstar_coeffs(t, order: int) -> MajorantCoefficients:
    t = _check_t(t)
    return MajorantCoefficients(t, exp(_exponent(t, order)))


def normalized_coeffs(t, order: int) -> TruncatedSeries:
    """``F(z,t) = F*(z,t) / {F*}_1(t) = -U(z)/(2t)``.

    The constant term is ``-1/(2t)``; it never enters subordination sums.
    """
    t = _check_t(t)
    return fstar_coeffs(t, order).rational_part / (-2 * t)


def first_coefficient(t) -> float:
    """``{F*}_1(t) = -2t e^{-t}`` in float."""
    t = _check_t(t)
    return -2 * float(t) * math.exp(-float(t))


def bound_horizon(t) -> BoundHorizon:
    """Bound ``2t/e^t`` and the largest index ``N <= 2/t + 1`` it is proved for."""
    t = _check_t(t)
    limit = 2 / t + 1
    N = math.floor(limit)
    return BoundHorizon(t=t, bound=2 * float(t) * math.exp(-float(t)), N=N,
                        boundary=limit.denominator == 1)


def extremal_coeffs(t, n: int, phi=0, order: int | None = None,
                    mode: str = EXACT) -> MajorantCoefficients:
    """Coefficients of ``F*(e^{i phi} z^n, t)``.

    In exact mode ``phi`` must be a quarter turn; see
    :func:`krzyz.scalar.unit_from_angle` for accepted spellings.
    """
    t = _check_t(t)
    if n < 1:
        raise ValueError("n must be >= 1")
    order = n if order is None else order
    if order < n:
        raise InsufficientOrder(f"order {order} < n = {n}")
    unit = sc.unit_from_angle(phi, mode)
    u = fstar_coeffs(t, order).rational_part
    if mode == FLOAT or sc.mode_of(unit) == FLOAT:
        u = u.to_float()
        inner = monomial(n, order, complex(unit), FLOAT)
    else:
        inner = monomial(n, order, unit)
    return MajorantCoefficients(t, compose(u, inner))
