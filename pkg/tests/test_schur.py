from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krzyz.errors import (
    BadConstantTerm,
    InvalidParameters,
    NotInOmega,
    RankDeficient,
    SingularSystem,
    ZeroOutsideDisk,
)
from krzyz.polynomial import Polynomial, same_rational
from krzyz.scalar import GaussianRational as G
from krzyz.schur import (
    BlaschkeProduct,
    SchurParameters,
    blaschke_series,
    cayley,
    is_inner_on_circle,
    rational_inverse_cayley,
    reconstruct_inner,
    sample_omega,
    schur_parameters,
    schur_synthesis,
)
from krzyz.series import TruncatedSeries

from .conftest import exact_series

S = TruncatedSeries
HALF = Fraction(1, 2)
WORKED_OMEGA = S([0, Fraction(-1, 2), Fraction(1, 4), Fraction(3, 8), Fraction(9, 16)])


def test_cayley_examples():
    assert cayley(S([1], order=5)) == S([0], order=5)
    assert cayley(S([1, 2, 2, 2, 2, 2])) == S([0, -1], order=5)
    assert cayley(S([1, 1, 0, -1, -2])) == WORKED_OMEGA


def test_cayley_directions():
    with pytest.raises(BadConstantTerm):
        cayley(S([0, 1]), "c_to_omega")
    with pytest.raises(BadConstantTerm):
        cayley(S([1, 1]), "omega_to_c")


@settings(max_examples=200, deadline=None)
@given(exact_series(8, constant=G(1)))
def test_cayley_involution_from_c(h):
    assert cayley(cayley(h), "omega_to_c") == h


@settings(max_examples=200, deadline=None)
@given(exact_series(8, constant=G(0)))
def test_cayley_involution_from_omega(w):
    assert cayley(cayley(w, "omega_to_c")) == w


def test_schur_unimodular_constant():
    p = schur_parameters(S([0, -1], order=4))
    assert p.gammas == (-1,) and p.degeneracy == 0


def test_schur_single_factor():
    # omega = z (z - 1/2)/(1 - z/2)
    w = S([0, 1], order=6) * (S([-HALF, 1], order=6) / S([1, -HALF], order=6))
    p = schur_parameters(w)
    assert p.gammas[0] == -HALF
    assert p.degeneracy == 1 and p.gammas[1].abs2() == 1


def test_schur_worked_series():
    p = schur_parameters(WORKED_OMEGA)
    assert p.gammas[0] == -HALF
    assert p.degeneracy == 3
    assert all(g.abs2() < 1 for g in p.gammas[:3])


def test_schur_detects_non_members():
    with pytest.raises(NotInOmega):
        schur_parameters(S([0, 2, 0]))
    with pytest.raises(NotInOmega):
        schur_parameters(S([0, 1, 1]))
    with pytest.raises(BadConstantTerm):
        schur_parameters(S([1, 1]))


def test_float_mode_degeneracy_is_flagged():
    p = schur_parameters(WORKED_OMEGA.to_float())
    assert p.degeneracy == 3 and p.numerical


def test_synthesis_examples():
    zero = schur_synthesis(SchurParameters((G(0),) * 5), 5)
    assert zero == S([0], order=5)
    assert schur_synthesis(SchurParameters((G(-1),), 0), 6) == S([0, -1], order=6)
    assert schur_synthesis(schur_parameters(WORKED_OMEGA), 4) == WORKED_OMEGA


def test_synthesis_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        schur_synthesis(SchurParameters((G(2),)), 1)
    with pytest.raises(InvalidParameters):
        schur_synthesis(SchurParameters((G(1), G(0)), None), 2)


def test_synthesis_extends_degenerate_worked_example():
    long = schur_synthesis(schur_parameters(WORKED_OMEGA), 12)
    inner = reconstruct_inner(WORKED_OMEGA, 4)
    assert long == inner.series(12)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(0, 6))
def test_schur_round_trip_on_blaschke(seed, degree):
    B = sample_omega(seed, degree)
    w = blaschke_series(B, 10)
    p = schur_parameters(w)
    assert p.degeneracy == B.degree
    assert all(g.abs2() < 1 for g in p.gammas[:-1])
    assert schur_synthesis(p, 10) == w


def test_blaschke_examples():
    assert blaschke_series(BlaschkeProduct(1), 4) == S([0, 1], order=4)
    assert blaschke_series(BlaschkeProduct(1, (0,)), 4) == S([0, 0, -1], order=4)
    assert blaschke_series(BlaschkeProduct(1, (HALF,)), 3) == S([0, HALF, Fraction(-3, 4), Fraction(-3, 8)])
    with pytest.raises(ZeroOutsideDisk):
        BlaschkeProduct(1, (G(1),))


def test_blaschke_series_matches_rational_form():
    B = sample_omega(11, 4)
    num, den = B.rational()
    assert blaschke_series(B, 9) == num.to_series(9) / den.to_series(9)
    assert is_inner_on_circle(B)


def test_sampling_is_deterministic():
    assert sample_omega(42, 4) == sample_omega(42, 4)
    _ = [sample_omega(s, 3) for s in range(5)]
    assert sample_omega(42, 4) == sample_omega(42, 4)
    assert len({sample_omega(s, 4) for s in range(50)}) > 40


@pytest.mark.parametrize("seed", range(0, 1000, 50))
def test_sample_invariants(seed):
    B = sample_omega(seed, 4, denominator_bound=8)
    assert B.zero_order in (1, 2)
    assert len(B.zeros) == 4
    assert all(a.abs2() < 1 and a.re.denominator <= 8 and a.im.denominator <= 8 for a in B.zeros)
    assert B.unimodular in (G(1), G(-1), G(0, 1), G(0, -1))
    assert blaschke_series(B, 3)[0] == 0


def test_thousand_samples_pass_schur_membership():
    for seed in range(1000):
        p = schur_parameters(blaschke_series(sample_omega(seed, 4), 7))
        assert all(g.abs2() <= 1 for g in p.gammas)


def test_reconstruct_trivial_cases():
    r = reconstruct_inner(S([0, -1], order=3), 1)
    assert r.numerator == Polynomial([0, -1]) and r.denominator == Polynomial([1]) and r.unimodular == -1
    r = reconstruct_inner(S([0, 0, 1], order=4), 2)
    assert r.numerator == Polynomial([0, 0, 1]) and r.denominator == Polynomial([1])


def test_reconstruct_worked_example():
    r = reconstruct_inner(WORKED_OMEGA, 4)
    assert r.numerator == Polynomial([0, 1, 0, -1, -2])
    assert r.denominator == Polynomial([-2, -1, 0, 1])
    assert r.unimodular == 1
    assert str(r) == "z(1 - z^2 - 2*z^3)/(-2 - z + z^3)"
    assert r.series(4) == WORKED_OMEGA
    assert is_inner_on_circle(r)
    h_num, h_den = rational_inverse_cayley(r)
    assert same_rational(h_num, h_den, Polynomial([1, 1, 0, -1, -1]), Polynomial([1, 0, 0, 0, 1]))


def test_reconstruct_failures():
    with pytest.raises(RankDeficient):
        reconstruct_inner(S([0, -1], order=3), 2)
    with pytest.raises(SingularSystem):
        reconstruct_inner(S([0, 0, 0, 1, 1], order=5), 2)


@pytest.mark.parametrize("seed", range(30))
def test_reconstruct_recovers_sampled_blaschke(seed):
    B = sample_omega(seed, seed % 4)
    d = B.degree + 1
    w = blaschke_series(B, d + 3)
    r = reconstruct_inner(w, d)
    assert r.series(w.order) == w
    num, den = B.rational()
    assert same_rational(r.numerator, r.denominator, num, den)
