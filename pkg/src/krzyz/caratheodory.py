"""Convex maps, Carathéodory functions and Toeplitz positivity.

The correspondence ``h = 1 + z f''/f'`` links normalized convex maps with
functions of positive real part.  A segment ``1 + h_1 z + ... + h_n z^n``
extends to such a function iff the leading minors of the Hermitian
Toeplitz matrix with diagonal 2 and superdiagonals ``h_k`` are all positive,
or positive up to some index and zero from there on (then the extension is
unique).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import scalar as sc
from .errors import BadNormalization, EmptySegment, FloatModeRefused, NonpositiveParameter
from .majorant import normalized_coeffs
from .scalar import EXACT, GaussianRational
from .series import TruncatedSeries, exp


class Extension(str, enum.Enum):
    ALL_POSITIVE = "all-positive"
    POSITIVE_THEN_ZERO = "positive-then-zero"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Classification:
    kind: Extension
    index: int | None = None

    def __str__(self):
        return self.kind.value if self.index is None else f"{self.kind.value}({self.index})"


@dataclass(frozen=True)
class CaratheodorySegment:
    """``h_1..h_n`` of ``h = 1 + h_1 z + ...``; ``h_0 = 1`` is implicit."""

    coeffs: tuple
    mode: str = EXACT

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(sc.coerce(c, self.mode) for c in self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def series(self) -> TruncatedSeries:
        return TruncatedSeries((1,) + self.coeffs, mode=self.mode)

    @classmethod
    def from_series(cls, h: TruncatedSeries) -> CaratheodorySegment:
        if not sc.close(h[0], 1):
            raise BadNormalization("a Carathéodory function has h(0) = 1")
        return cls(h.coeffs[1:], h.mode)


@dataclass(frozen=True)
class ToeplitzMinorReport:
    minors: tuple
    classification: Classification
    t: Fraction | None = None
    first_zero: int | None = None


@dataclass(frozen=True)
class Theorem1Verdict:
    extendable: bool
    unique: bool


def convex_to_caratheodory(f: TruncatedSeries) -> CaratheodorySegment:
    """``h = 1 + z f''/f'``; output has ``f.order - 1`` coefficients.

    ``f`` must satisfy ``f(0) = 0`` and ``f'(0) = 1``.  The formula does not
    see ``f(0)``, so a caller holding the normalized majorant (whose
    constant term is ``-1/(2t)``) should zero that term first.
    """
    if f.order < 2:
        raise ValueError("need order >= 2")
    if not sc.is_zero(f[0]) or not sc.close(f[1], 1):
        raise BadNormalization("expected f(0) = 0 and f'(0) = 1")
    d1 = f.deriv()
    d2 = d1.deriv()
    h = (d2 / d1.truncate(d2.order)).shift(1)
    return CaratheodorySegment(h.coeffs[1:], f.mode)


def caratheodory_to_convex(h: CaratheodorySegment) -> TruncatedSeries:
    """Invert :func:`convex_to_caratheodory`: ``f' = exp(int_0^z (h(v)-1)/v dv)``, ``f = int f'``."""
    if len(h) < 1:
        raise EmptySegment("need at least one coefficient")
    integrand = TruncatedSeries(h.coeffs, mode=h.mode)
    return exp(integrand.integ()).integ()


def h_closed_form(t, n: int) -> CaratheodorySegment:
    """``h_j = 2(1 - j t)`` for ``j = 1..n``."""
    t = Fraction(t)
    if t <= 0:
        raise NonpositiveParameter(f"t must be positive, got {t}")
    if n < 1:
        raise ValueError("n must be >= 1")
    return CaratheodorySegment(tuple(2 * (1 - j * t) for j in range(1, n + 1)))


def lemma2_value(t, n: int) -> Fraction:
    """Closed-form leading minor ``M_n = 4^n t^n (2 - n t)`` for the majorant segment."""
    t = Fraction(t)
    return Fraction(4) ** n * t ** n * (2 - n * t)


def toeplitz_matrix(h: CaratheodorySegment, size: int) -> list[list]:
    """Hermitian Toeplitz matrix ``a_ii = 2``, ``a_ij = h_{j-i}`` above the diagonal."""
    c = (GaussianRational(2),) + h.coeffs
    return [[c[j - i] if j >= i else c[i - j].conjugate() for j in range(size)] for i in range(size)]


def bareiss_det(matrix: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Entries are first scaled to Gaussian integers by the common denominator;
    every Bareiss division is then exact in ``Z[i]``.
    """
    n = len(matrix)
    if n == 0:
        return GaussianRational(1)
    L = 1
    for row in matrix:
        for x in row:
            L = lcm(L, x.re.denominator, x.im.denominator)
    a = [[x * L for x in row] for row in matrix]
    sign = 1
    prev = GaussianRational(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return GaussianRational(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = GaussianRational(0)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign / Fraction(L) ** n


def classify(minors: Sequence[Fraction]) -> tuple[Classification, int | None]:
    """Return the extension class and the first zero index (if any)."""
    first_zero = None
    for k, m in enumerate(minors):
        if first_zero is None:
            if m < 0:
                return Classification(Extension.INDEFINITE, k), None
            if m == 0:
                first_zero = k
        elif m != 0:
            return Classification(Extension.INDEFINITE, k), first_zero
    if first_zero is None:
        return Classification(Extension.ALL_POSITIVE), None
    return Classification(Extension.POSITIVE_THEN_ZERO, first_zero), first_zero


def toeplitz_minors(h: CaratheodorySegment, t=None) -> ToeplitzMinorReport:
    """Exact leading minors ``M_0..M_n`` and their classification."""
    if h.mode != EXACT:
        raise FloatModeRefused("minors are sign tests; compute them in exact mode")
    if len(h) == 0:
        raise EmptySegment("empty Carathéodory segment")
    size = len(h) + 1
    full = toeplitz_matrix(h, size)
    minors = []
    for k in range(size):
        d = bareiss_det([row[: k + 1] for row in full[: k + 1]])
        if d.im:
            raise ArithmeticError("Hermitian determinant with an imaginary part")
        minors.append(d.re)
    cls, first_zero = classify(minors)
    return ToeplitzMinorReport(tuple(minors), cls, None if t is None else Fraction(t), first_zero)


def majorant_segment(t, n: int) -> CaratheodorySegment:
    """``h`` for the degree-``n`` segment ``P(z,t,n)`` of the normalized majorant."""
    if n < 2:
        raise EmptySegment("a degree-1 segment carries no Toeplitz constraint (n must be >= 2)")
    f = normalized_coeffs(t, n).with_constant(0)
    return convex_to_caratheodory(f)


def segment_minors(t, n: int) -> ToeplitzMinorReport:
    """Minors ``M_0..M_{n-1}`` for the degree-``n`` segment of the normalized majorant."""
    return toeplitz_minors(majorant_segment(t, n), t=t)


def theorem1_check(t, n: int) -> Theorem1Verdict:
    """Extendability of ``P(z,t,n)`` to a convex map, and whether the extension is unique."""
    t = Fraction(t)
    if t <= 0:
        raise NonpositiveParameter(f"t must be positive, got {t}")
    if n < 1:
        raise ValueError("n must be >= 1")
    return Theorem1Verdict(extendable=n <= 2 / t + 1,
                           unique=n >= 2 and t == Fraction(2, n - 1))
