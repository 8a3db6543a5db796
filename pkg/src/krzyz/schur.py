"""Self-maps of the disk fixing 0: Cayley transform, Schur recursion, Blaschke products.

The Schur recursion runs on ``phi = omega / z``.  For a member of the class
``phi`` is bounded by 1, and the recursion

    gamma_k = phi_k(0),   phi_{k+1} = (phi_k - gamma_k) / (z (1 - conj(gamma_k) phi_k))

terminates with ``|gamma_d| = 1`` exactly when ``phi`` is a finite Blaschke
product of degree ``d``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import scalar as sc
from .errors import (
    BadConstantTerm,
    InsufficientOrder,
    InvalidParameters,
    NotInOmega,
    RankDeficient,
    SingularSystem,
    ZeroOutsideDisk,
)
from .polynomial import Polynomial, reduce_fraction
from .scalar import EXACT, FLOAT, GaussianRational
from .series import TruncatedSeries

DEGENERACY_TOL = 1e-9

_QUARTER_TURNS = (GaussianRational(1), GaussianRational(-1),
                  GaussianRational(0, 1), GaussianRational(0, -1))


# --- Cayley transform ------------------------------------------------------

def cayley(x: TruncatedSeries, direction: str = "c_to_omega") -> TruncatedSeries:
    """``(1 - x)/(1 + x)``, mapping between ``h(0) = 1`` and ``omega(0) = 0``."""
    if direction == "c_to_omega":
        if not sc.close(x[0], 1):
            raise BadConstantTerm("c_to_omega needs x(0) = 1")
    elif direction == "omega_to_c":
        if not sc.is_zero(x[0]):
            raise BadConstantTerm("omega_to_c needs x(0) = 0")
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return (1 - x) / (1 + x)


# --- Schur parameters ------------------------------------------------------

@dataclass(frozen=True)
class SchurParameters:
    gammas: tuple
    degeneracy: int | None = None
    mode: str = EXACT
    # set in float mode when |gamma_d| is 1 only within DEGENERACY_TOL
    numerical: bool = False


def _unimodular(g, mode: str) -> tuple[bool, bool]:
    """(is unimodular, exceeds 1)."""
    m = sc.abs2(g)
    if mode == EXACT:
        return m == 1, m > 1
    if abs(1 - m) < DEGENERACY_TOL:
        return True, False
    return False, m > 1


def schur_parameters(omega: TruncatedSeries) -> SchurParameters:
    """Schur parameters of ``omega / z``, as many as the truncation order allows."""
    if not sc.is_zero(omega[0]):
        raise BadConstantTerm("omega(0) must vanish")
    if omega.order < 1:
        raise InsufficientOrder("need order >= 1 to read any Schur parameter")
    mode = omega.mode
    phi = omega.unshift(1) if mode == EXACT else TruncatedSeries(omega.coeffs[1:], mode=FLOAT)
    gammas = []
    while True:
        g = phi[0]
        gammas.append(g)
        unit, outside = _unimodular(g, mode)
        if outside:
            raise NotInOmega(f"|gamma_{len(gammas) - 1}| > 1")
        if unit:
            if any(not sc.is_zero(c) for c in phi.coeffs[1:]):
                raise NotInOmega("unimodular Schur parameter with a nonconstant remainder")
            return SchurParameters(tuple(gammas), len(gammas) - 1, mode,
                                   numerical=mode == FLOAT)
        if phi.order == 0:
            return SchurParameters(tuple(gammas), None, mode)
        num = TruncatedSeries(phi.coeffs[1:], mode=mode)
        den = (1 - phi * g.conjugate()).truncate(phi.order - 1)
        phi = num / den


def schur_synthesis(params: SchurParameters, order: int) -> TruncatedSeries:
    """Rebuild ``omega = z * phi`` to ``order`` from Schur parameters."""
    gammas = params.gammas
    mode = params.mode
    if not gammas:
        raise InvalidParameters("no Schur parameters")
    d = params.degeneracy
    last = len(gammas) - 1
    for k, g in enumerate(gammas):
        unit, outside = _unimodular(g, mode)
        if outside or (unit and k != d):
            raise InvalidParameters(f"|gamma_{k}| must be < 1")
    if d is not None:
        if d != last or not _unimodular(gammas[d], mode)[0]:
            raise InvalidParameters("degenerate parameter must be the last and unimodular")
        phi_order = order - 1
    else:
        if order - 1 > last:
            raise InsufficientOrder(
                f"{len(gammas)} non-degenerate parameters determine omega only to order {last + 1}")
        phi_order = order - 1
    if phi_order < 0:
        raise ValueError("order must be >= 1")
    # start from the deepest parameter; each backward step recovers one more coefficient
    start = min(last, phi_order)
    phi = TruncatedSeries([gammas[start]], order=phi_order - start if d == start else 0, mode=mode)
    for k in range(start - 1, -1, -1):
        g = gammas[k]
        zp = phi.shift(1)
        phi = (g + zp) / (1 + zp * g.conjugate())
    return phi.truncate(phi_order).shift(1)


# --- Blaschke products -----------------------------------------------------

@dataclass(frozen=True)
class BlaschkeProduct:
    """``lambda * z^m * prod (a_i - z)/(1 - conj(a_i) z)``."""

    zero_order: int
    zeros: tuple = ()
    unimodular: GaussianRational = field(default_factory=lambda: GaussianRational(1))

    def __post_init__(self):
        if self.zero_order < 1:
            raise ValueError("zero_order must be >= 1 so that omega(0) = 0")
        object.__setattr__(self, "zeros", tuple(sc.coerce(a, EXACT) for a in self.zeros))
        object.__setattr__(self, "unimodular", sc.coerce(self.unimodular, EXACT))
        for a in self.zeros:
            if a.abs2() >= 1:
                raise ZeroOutsideDisk(f"zero {a} is not inside the unit disk")
        if self.unimodular.abs2() != 1:
            raise ValueError("unimodular factor must have modulus 1")

    @property
    def degree(self) -> int:
        """Degree of ``omega / z``, the index at which its Schur recursion degenerates."""
        return self.zero_order - 1 + len(self.zeros)

    def __call__(self, z: complex) -> complex:
        out = complex(self.unimodular) * z ** self.zero_order
        for a in self.zeros:
            a = complex(a)
            out *= (a - z) / (1 - a.conjugate() * z)
        return out

    def rational(self) -> tuple[Polynomial, Polynomial]:
        num = Polynomial([0] * self.zero_order + [self.unimodular])
        den = Polynomial([1])
        for a in self.zeros:
            num = num * Polynomial([a, -1])
            den = den * Polynomial([1, -a.conjugate()])
        return num, den


def blaschke_series(B: BlaschkeProduct, order: int) -> TruncatedSeries:
    """Exact Taylor expansion of a finite Blaschke product."""
    out = TruncatedSeries([0] * B.zero_order + [B.unimodular], order=order)
    for a in B.zeros:
        if a.abs2() >= 1:
            raise ZeroOutsideDisk(f"zero {a} is not inside the unit disk")
        factor = TruncatedSeries([a, -1], order=order) / TruncatedSeries([1, -a.conjugate()], order=order)
        out = out * factor
    return out


def sample_omega(seed: int, degree: int, denominator_bound: int = 8) -> BlaschkeProduct:
    """Deterministic pseudo-random Blaschke product with ``degree`` zeros.

    Zeros are ``(p + r i)/q`` with ``q <= denominator_bound``, drawn by
    rejection inside the open disk.  Each seed owns its generator, so results
    do not depend on call order.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    rng = random.Random(seed)
    zero_order = rng.choice((1, 2))
    zeros = []
    while len(zeros) < degree:
        q = rng.randint(1, denominator_bound)
        p = rng.randint(-q, q)
        r = rng.randint(-q, q)
        if p * p + r * r < q * q:
            zeros.append(GaussianRational(Fraction(p, q), Fraction(r, q)))
    lam = rng.choice(_QUARTER_TURNS)
    return BlaschkeProduct(zero_order, tuple(zeros), lam)


# --- rational reconstruction -----------------------------------------------

@dataclass(frozen=True)
class RationalInner:
    """``omega = numerator / denominator`` with ``numerator = lambda z^k conj-reverse(denominator)``."""

    numerator: Polynomial
    denominator: Polynomial
    unimodular: GaussianRational

    def series(self, order: int) -> TruncatedSeries:
        return self.numerator.to_series(order) / self.denominator.to_series(order)

    def __call__(self, z: complex) -> complex:
        return complex(self.numerator(z)) / complex(self.denominator(z))

    def __str__(self):
        k = self.numerator.lowest_degree()
        inner = Polynomial(self.numerator.coeffs[k:])
        pre = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        body = str(inner)
        if pre:
            body = f"{pre}({body})" if inner.degree > 0 else (
                pre if body == "1" else f"-{pre}" if body == "-1" else f"{body}*{pre}")
        if self.denominator == Polynomial([1]):
            return body
        return f"{body}/({self.denominator})"


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational null space by Gauss-Jordan elimination."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def reconstruct_inner(omega: TruncatedSeries, degree: int) -> RationalInner:
    """Recover ``omega = lambda z (conj(a_{n-1}) + ... + conj(a_0) z^{n-1}) / (a_0 + ... + a_{n-1} z^{n-1})``.

    With ``lambda`` fixed to 1 the matching conditions
    ``(a * omega)_k = conj(a_{n-k})`` (``k <= n``) and ``(a * omega)_k = 0``
    (``n < k <= order``) are real-linear in ``(Re a, Im a)``; a unique
    solution up to real scale is required.  The result is reduced to lowest
    terms with a monic denominator, and ``lambda`` is re-read from it.
    """
    if omega.mode != EXACT:
        raise sc.ModeMismatch("reconstruct_inner works in exact mode")
    if not sc.is_zero(omega[0]):
        raise BadConstantTerm("omega(0) must vanish")
    n = degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    N = omega.order
    w = omega.coeffs
    rows = []
    # unknowns: x_0..x_{n-1} = Re a_i, y_0..y_{n-1} = Im a_i
    for k in range(1, N + 1):
        re_row = [Fraction(0)] * (2 * n)
        im_row = [Fraction(0)] * (2 * n)
        for i in range(min(n, k + 1)):
            c = w[k - i]
            # a_i * c = (x + iy)(cr + i ci)
            re_row[i] += c.re
            re_row[n + i] -= c.im
            im_row[i] += c.im
            im_row[n + i] += c.re
        if k <= n:
            j = n - k
            # minus conj(a_j) = -(x_j - i y_j)
            re_row[j] -= 1
            im_row[n + j] += 1
        rows += [re_row, im_row]
    basis = _nullspace(rows, 2 * n)
    if not basis:
        raise SingularSystem(f"no degree-{n} inner function matches the series")
    if len(basis) > 1:
        raise RankDeficient(
            f"{len(basis)}-dimensional solution family; the series does not pin a degree-{n} "
            "inner function (try a lower degree or more coefficients)")
    v = basis[0]
    alpha = Polynomial([GaussianRational(v[i], v[n + i]) for i in range(n)])
    num = alpha.conj_reverse(n) * Polynomial([0, 1])
    num, den = reduce_fraction(num, alpha)
    if not den or not den.coeffs[0]:
        raise SingularSystem("denominator vanishes at 0")
    lead = den.coeffs[-1]
    num, den = num.scale(1 / lead), den.scale(1 / lead)
    lam = num.coeffs[num.lowest_degree()]
    if lam.abs2() != 1:
        raise SingularSystem("reconstructed function is not inner")
    return RationalInner(num, den, lam)


def rational_inverse_cayley(inner: RationalInner) -> tuple[Polynomial, Polynomial]:
    """``h = (1 - omega)/(1 + omega)`` as ``(den - num)/(den + num)``, normalized to ``h_den(0) = 1``."""
    p = inner.denominator - inner.numerator
    q = inner.denominator + inner.numerator
    p, q = reduce_fraction(p, q)
    c = q.coeffs[0]
    return p.scale(1 / c), q.scale(1 / c)


def is_inner_on_circle(f, samples: int = 64, tol: float = 1e-9) -> bool:
    """Float check that ``|f| = 1`` on the unit circle."""
    return all(abs(abs(f(complex(math.cos(a), math.sin(a)))) - 1) < tol
               for a in (2 * math.pi * k / samples for k in range(samples)))
