import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from krzyz.scalar import GaussianRational
from krzyz.series import TruncatedSeries

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number, title, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}" + (f" ({detail})" if detail else ""))
    return record


rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))
gaussians = st.builds(GaussianRational, rationals, rationals)


def exact_series(order, constant=None, min_order=None):
    """Strategy for exact series of a fixed order, optionally pinning the constant term."""
    head = st.just(constant) if constant is not None else gaussians
    return st.builds(lambda c0, rest: TruncatedSeries([c0] + rest, order=order),
                     head, st.lists(gaussians, min_size=order, max_size=order))


def random_gaussian(rng, num=6, den=5):
    return GaussianRational(Fraction(rng.randint(-num, num), rng.randint(1, den)),
                            Fraction(rng.randint(-num, num), rng.randint(1, den)))


def random_series(rng, order, constant=None):
    c = [random_gaussian(rng) for _ in range(order + 1)]
    if constant is not None:
        c[0] = constant
    return TruncatedSeries(c, order=order)


@pytest.fixture
def rng():
    return random.Random(20240601)
