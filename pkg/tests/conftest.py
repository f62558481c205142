from fractions import Fraction

import pytest

from degenpoly.algebra import BiPoly, LambdaPoly, Series, parse_poly

LAM = LambdaPoly.lam()
X = BiPoly.x()


def P(text: str) -> BiPoly:
    return parse_poly(text)


def L(text: str) -> LambdaPoly:
    return parse_poly(text).to_lambda()


def series(coeffs, order):
    return Series(coeffs, order)


@pytest.fixture
def half():
    return Fraction(1, 2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
