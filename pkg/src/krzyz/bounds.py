"""Coefficient bounds for subordinate functions ``f = F*(omega, t)``.

Every verdict is made on normalized coefficients ``{f}_n / {F*}_1(t)``,
whose squared modulus must not exceed 1 for ``n <= N(t)``.  Exact mode
therefore never evaluates ``e^{-t}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import scalar as sc
from .caratheodory import (
    CaratheodorySegment,
    Classification,
    Extension,
    convex_to_caratheodory,
    h_closed_form,
    theorem1_check,
    toeplitz_minors,
)
from .errors import BeyondHorizon, InsufficientOrder, ModeMismatch
from .majorant import BoundHorizon, bound_horizon, extremal_coeffs, normalized_coeffs
from .polynomial import Polynomial, same_rational
from .scalar import EXACT, FLOAT
from .schur import blaschke_series, cayley, rational_inverse_cayley, reconstruct_inner, sample_omega
from .series import TruncatedSeries, compose, exp, power_coefficients

FLOAT_MARGIN_SLACK = 1e-12
CONJECTURAL = "conjectural"


@dataclass(frozen=True)
class BoundRow:
    n: int
    normalized_sq_modulus: Any
    margin: Any
    passed: bool
    bound_sq: int = 1


@dataclass(frozen=True)
class BoundCheckResult:
    t: Fraction
    mode: str
    rows: tuple
    horizon: BoundHorizon
    omega_descriptor: Any = None
    # only set by extremal_equality: equality at n and zeros elsewhere
    sharp: bool | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and self.sharp is not False


@dataclass(frozen=True)
class ProbeRow:
    n: int
    normalized_sq_modulus: Any
    conjectural_sq_bound: float
    below_conjectural: bool


@dataclass(frozen=True)
class ProbeReport:
    """Exploratory values past the proved range.  Carries no verdict."""

    t: Fraction
    rows: tuple
    horizon: BoundHorizon
    omega_descriptor: Any = None
    label: str = CONJECTURAL


def subordination_coeffs(G: TruncatedSeries, omega: TruncatedSeries, n_max: int) -> list:
    """``{g}_n = sum_{j=1..n} {G}_j {omega^j}_n`` for ``n = 1..n_max``."""
    if G.order < n_max or omega.order < n_max:
        raise InsufficientOrder(f"need order >= {n_max}")
    if G.mode != omega.mode:
        raise ModeMismatch("G and omega must share a scalar mode")
    out = []
    for n in range(1, n_max + 1):
        row = power_coefficients(omega, n)
        s = sc.zero(G.mode)
        for j, p in enumerate(row, start=1):
            s = s + G[j] * p
        out.append(s)
    return out


def _row(n: int, value, mode: str) -> BoundRow:
    sq = sc.abs2(value)
    margin = 1 - sq
    ok = margin >= 0 if mode == EXACT else margin >= -FLOAT_MARGIN_SLACK
    return BoundRow(n, sq, margin, bool(ok))


def verify_bound(t, omega: TruncatedSeries, mode: str = EXACT, descriptor=None) -> BoundCheckResult:
    """Check ``|{f}_n| <= 2t/e^t`` for ``n <= N(t)`` where ``f = F*(omega, t)``."""
    horizon = bound_horizon(t)
    N = horizon.N
    if omega.order < N:
        raise InsufficientOrder(f"omega known to order {omega.order}, need {N}")
    F = normalized_coeffs(horizon.t, N)
    if mode == FLOAT:
        F, omega = F.to_float(), omega.to_float()
    elif omega.mode != EXACT:
        raise ModeMismatch("exact verification needs an exact omega")
    coeffs = subordination_coeffs(F, omega.truncate(N), N)
    rows = tuple(_row(n, c, mode) for n, c in enumerate(coeffs, start=1))
    return BoundCheckResult(horizon.t, mode, rows, horizon, descriptor)


def extremal_equality(t, n: int, phi=0, mode: str = EXACT) -> BoundCheckResult:
    """Check that ``F*(e^{i phi} z^n, t)`` attains the bound at index ``n``.

    Rows at indices that are not multiples of ``n`` must vanish; row ``k*n``
    must equal ``|{F}_k|^2``, which is the only other data the rotation
    ``e^{i phi} z^n`` can carry.
    """
    horizon = bound_horizon(t)
    N = horizon.N
    if n > N:
        raise BeyondHorizon(f"n = {n} exceeds N(t) = {N}")
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = extremal_coeffs(horizon.t, n, phi, order=N, mode=mode).rational_part
    scale = -2 * horizon.t if mode == EXACT else -2 * float(horizon.t)
    rows = tuple(_row(k, coeffs[k] / scale, mode) for k in range(1, N + 1))
    F = normalized_coeffs(horizon.t, N)
    expected = [(sc.abs2(F[k // n]) if k % n == 0 else 0) for k in range(1, N + 1)]
    if mode == EXACT:
        sharp = all(r.normalized_sq_modulus == e for r, e in zip(rows, expected))
    else:
        sharp = all(sc.close(r.normalized_sq_modulus, float(e)) for r, e in zip(rows, expected))
    return BoundCheckResult(horizon.t, mode, rows, horizon,
                            {"extremal": {"n": n, "phi": str(phi)}}, sharp)


def conjectural_sq_bound(t) -> float:
    """``((2/e) / (2t e^{-t}))^2``: the Krzyz constant on the normalized scale."""
    t = float(t)
    return (math.exp(t - 1) / t) ** 2


def probe_beyond(t, omega: TruncatedSeries, n_lo: int, n_hi: int, descriptor=None) -> ProbeReport:
    """Normalized squared moduli for ``n_lo <= n <= n_hi`` past the horizon.

    Values are set against the conjectural constant ``2/e`` only; nothing
    here is a proved bound.
    """
    horizon = bound_horizon(t)
    if n_lo <= horizon.N:
        raise ValueError(f"probe range must start past N(t) = {horizon.N}")
    if n_hi < n_lo:
        raise ValueError("empty probe range")
    if omega.order < n_hi:
        raise InsufficientOrder(f"omega known to order {omega.order}, need {n_hi}")
    F = normalized_coeffs(horizon.t, n_hi)
    if omega.mode == FLOAT:
        F = F.to_float()
    coeffs = subordination_coeffs(F, omega.truncate(n_hi), n_hi)
    cap = conjectural_sq_bound(horizon.t)
    rows = tuple(
        ProbeRow(n, sc.abs2(coeffs[n - 1]), cap, float(sc.abs2(coeffs[n - 1])) <= cap)
        for n in range(n_lo, n_hi + 1))
    return ProbeReport(horizon.t, rows, horizon, descriptor)


def is_rotated_monomial(omega: TruncatedSeries, upto: int) -> bool:
    """True if ``omega`` agrees with ``lambda z^n`` (``|lambda| = 1``, ``n <= upto``) through ``z^upto``."""
    nz = [k for k in range(1, upto + 1) if not sc.is_zero(omega[k])]
    if len(nz) != 1:
        return False
    m = sc.abs2(omega[nz[0]])
    return m == 1 if omega.mode == EXACT else abs(m - 1) < sc.float_tolerance()


def sample_seed_degree(i: int, max_degree: int) -> int:
    """Degree used for the ``i``-th sample of a sweep: cycles through ``0..max_degree``."""
    return i % (max_degree + 1)


def bound_sweep(t, samples: int = 1000, max_degree: int = 6, seed: int = 0,
                mode: str = EXACT, denominator_bound: int = 8) -> list[BoundCheckResult]:
    """Verify the bound on ``samples`` seeded Blaschke products, ordered by seed."""
    N = bound_horizon(t).N
    out = []
    for i in range(samples):
        s = seed + i
        deg = sample_seed_degree(i, max_degree)
        B = sample_omega(s, deg, denominator_bound)
        omega = blaschke_series(B, N)
        out.append(verify_bound(t, omega, mode, {"seed": s, "degree": deg}))
    return out


# --- the t = 1/2 worked example --------------------------------------------

@dataclass
class Stage:
    key: str
    name: str
    passed: bool
    expected: Any
    actual: Any
    residual: float | None = None


@dataclass
class WorkedExample:
    t: Fraction
    stages: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.stages)

    @property
    def failed_stage(self) -> str | None:
        return next((s.key for s in self.stages if not s.passed), None)


def _q(*xs) -> tuple:
    return tuple(sc.GaussianRational(Fraction(x)) for x in xs)


EXAMPLE_T = Fraction(1, 2)
EXPECTED_F = _q(1, "1/2", "1/6", "-1/24", "-19/120")
EXPECTED_H = _q(1, 0, -1, -2)
EXPECTED_MINORS = tuple(Fraction(x) for x in (2, 3, 4, 4, 0))
EXPECTED_OMEGA = _q("-1/2", "1/4", "3/8", "9/16")
EXPECTED_OMEGA_NUM = Polynomial([0, 1, 0, -1, -2])
EXPECTED_OMEGA_DEN = Polynomial([-2, -1, 0, 1])
EXPECTED_H_NUM = Polynomial([1, 1, 0, -1, -1])
EXPECTED_H_DEN = Polynomial([1, 0, 0, 0, 1])


def binomial_series(a: float, order: int) -> TruncatedSeries:
    """``(1 + x)^a`` in float, by the generalized binomial theorem."""
    c = [1.0]
    for k in range(1, order + 1):
        c.append(c[-1] * (a - k + 1) / k)
    return TruncatedSeries(c, mode=FLOAT)


def closed_form_integrand_series(order: int) -> TruncatedSeries:
    """Taylor series of ``((v^2+sqrt2 v+1)/(v^2-sqrt2 v+1))^(sqrt2/4) / sqrt(1+v^4)`` via binomial expansions."""
    r2 = math.sqrt(2)
    ratio = (TruncatedSeries([1, r2, 1], order=order, mode=FLOAT)
             / TruncatedSeries([1, -r2, 1], order=order, mode=FLOAT))
    power = compose(binomial_series(r2 / 4, order), ratio - 1)
    quartic = TruncatedSeries([0, 0, 0, 0, 1], order=order, mode=FLOAT)
    root = compose(binomial_series(-0.5, order), quartic) if order >= 4 else TruncatedSeries([1], order=order, mode=FLOAT)
    return power * root


def derivative_from_h(h: TruncatedSeries) -> TruncatedSeries:
    """``f' = exp(int_0^z (h(v) - 1)/v dv)``, to the order of ``h``."""
    return exp((h - 1).unshift(1).integ())


def reproduce_worked_example(n_check: int = 10, tol: float = 1e-10) -> WorkedExample:
    """Run the whole ``t = 1/2`` pipeline and compare each stage against its known value."""
    t = EXAMPLE_T
    report = WorkedExample(t)
    add = report.stages.append

    F = normalized_coeffs(t, 5)
    got = tuple(F.coeffs[1:])
    add(Stage("a", "normalized majorant coefficients", got == EXPECTED_F, EXPECTED_F, got))

    h = convex_to_caratheodory(F.with_constant(0))
    add(Stage("b", "Caratheodory segment", h.coeffs == EXPECTED_H == h_closed_form(t, 4).coeffs,
              EXPECTED_H, h.coeffs))

    minors = toeplitz_minors(h, t=t)
    verdict = theorem1_check(t, 5)
    ok = (minors.minors == EXPECTED_MINORS
          and minors.classification == Classification(Extension.POSITIVE_THEN_ZERO, 4)
          and verdict.extendable and verdict.unique)
    add(Stage("c", "Toeplitz minors and extension class", ok,
              {"minors": EXPECTED_MINORS, "classification": "positive-then-zero(4)", "unique": True},
              {"minors": minors.minors, "classification": str(minors.classification),
               "unique": verdict.unique}))

    omega = cayley(h.series())
    got = tuple(omega.coeffs[1:])
    add(Stage("d", "Cayley transform", got == EXPECTED_OMEGA and not omega[0], EXPECTED_OMEGA, got))

    inner = reconstruct_inner(omega, 4)
    ok = (inner.numerator == EXPECTED_OMEGA_NUM and inner.denominator == EXPECTED_OMEGA_DEN
          and same_rational(inner.numerator, inner.denominator, EXPECTED_OMEGA_NUM, EXPECTED_OMEGA_DEN)
          and inner.series(omega.order) == omega and inner.unimodular == 1)
    add(Stage("e", "rational inner reconstruction", ok,
              "z(1 - z^2 - 2*z^3)/(-2 - z + z^3)", str(inner)))

    h_num, h_den = rational_inverse_cayley(inner)
    h_rat = h_num.to_series(4) / h_den.to_series(4)
    ok = h_num == EXPECTED_H_NUM and h_den == EXPECTED_H_DEN and h_rat == h.series()
    add(Stage("f", "inverse Cayley as a rational function", ok,
              "(1 + z - z^3 - z^4)/(1 + z^4)", f"({h_num})/({h_den})"))

    order = n_check - 1
    h_full = h_num.to_series(order) / h_den.to_series(order)
    from_h = derivative_from_h(h_full).to_float()
    closed = closed_form_integrand_series(order)
    residual = max(abs(a - b) for a, b in zip(from_h, closed))
    add(Stage("g", "closed-form integrand vs exp-integral of h", residual < tol,
              [complex(c).real for c in closed], [complex(c).real for c in from_h], residual))
    return report
