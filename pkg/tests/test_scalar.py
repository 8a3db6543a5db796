from fractions import Fraction

import pytest

from krzyz import scalar as sc
from krzyz.errors import ModeMismatch, NonrationalRotationInExactMode
from krzyz.scalar import GaussianRational as G


def test_field_operations_are_exact():
    a = G(Fraction(1, 3), Fraction(-2, 5))
    b = G(2, 1)
    assert (a * b) / b == a
    assert a - a == 0
    assert (a + b) * b == a * b + b * b
    assert a.conjugate() * a == a.abs2()
    assert G(0, 1) ** 2 == -1
    assert G(2) ** -2 == Fraction(1, 4)


def test_floats_do_not_enter_exact_mode():
    with pytest.raises(ModeMismatch):
        G(0.5)
    with pytest.raises(ModeMismatch):
        sc.coerce(0.5, sc.EXACT)


@pytest.mark.parametrize("text, value", [
    ("1/2", G(Fraction(1, 2))),
    ("-19/120", G(Fraction(-19, 120))),
    ("3", G(3)),
    ("1/2-3/4i", G(Fraction(1, 2), Fraction(-3, 4))),
    ("-1i", G(0, -1)),
])
def test_format_parse_round_trip(text, value):
    assert sc.parse_exact(text) == value
    assert sc.format_exact(value) == text


def test_decimal_literals_rejected():
    with pytest.raises(ValueError):
        sc.parse_rational("0.5")


def test_float_tolerance_env_override(monkeypatch):
    assert sc.float_tolerance() == 1e-10
    monkeypatch.setenv("KRZYZ_FLOAT_TOL", "1e-3")
    assert sc.close(1.0, 1.0005)
    monkeypatch.delenv("KRZYZ_FLOAT_TOL")
    assert not sc.close(1.0, 1.0005)


def test_close_has_absolute_floor():
    assert sc.close(0.0, 1e-15)
    assert not sc.close(0.0, 1e-13)


@pytest.mark.parametrize("phi, unit", [(0, G(1)), ("pi", G(-1)), ("pi/2", G(0, 1)), ("-pi/2", G(0, -1))])
def test_quarter_turns_are_exact(phi, unit):
    assert sc.unit_from_angle(phi) == unit


def test_irrational_rotation_needs_float_mode():
    with pytest.raises(NonrationalRotationInExactMode):
        sc.unit_from_angle(0.3)
    assert abs(sc.unit_from_angle(0.3, sc.FLOAT)) == pytest.approx(1)
