"""Constructors of the degenerate families.

Frozen polynomial values below were produced by an independent symbolic
oracle (sympy series expansion of the closed-form generating functions with
λ and x as symbols, e.g. (1 + λt)^(x/λ) written as exp(x/λ·log(1 + λt))).
"""

from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from degenpoly import classical
from degenpoly.algebra import LambdaPoly, Series, Triangle
from degenpoly.functions import (
    RouteMismatch,
    bell_poly_deg,
    carlitz_euler,
    compositions,
    degenerate_exp,
    degenerate_log,
    degenerate_sech,
    falling_factorial_deg,
    generalized_harmonic_deg,
    harmonic_numbers_deg,
    harmonic_poly_deg,
    jindalrae1,
    jindalrae2,
    stirling1_deg,
    stirling2_deg,
    stirling_connection_oracle,
    stirling_transform_pair,
    type2_changhee,
    type2_euler_deg,
)

from conftest import LAM, X, L, P

TRIANGLES = {"s1": stirling1_deg, "s2": stirling2_deg, "j1": jindalrae1, "j2": jindalrae2}


# --- elementary series -----------------------------------------------------


def test_falling_factorial():
    assert falling_factorial_deg(0) == 1
    assert falling_factorial_deg(2) == X * X - LAM * X
    assert falling_factorial_deg(3).eval_lambda(1) == X * (X - 1) * (X - 2)


def test_degenerate_exp():
    e = degenerate_exp(4)
    assert e.coefficient(1) == X
    assert degenerate_exp(4, -1).egf_coefficient(2) == L("λ + 1")
    at0 = e.eval_lambda(0)
    for n in range(5):
        assert at0.egf_coefficient(n) == X**n


def test_degenerate_exp_multiplicative():
    order = 6
    lhs = degenerate_exp(order) * degenerate_exp(order, 1)
    assert lhs == degenerate_exp(order).map(lambda p: p.shift_x(1))


def test_degenerate_log():
    log = degenerate_log(6)
    assert log.egf_coefficient(1) == 1
    assert log.egf_coefficient(2) == L("λ - 1")
    at0 = log.eval_lambda(0)
    for n in range(1, 7):
        assert at0.coefficient(n) == Fraction((-1) ** (n - 1), n)


def test_degenerate_sech_start():
    assert degenerate_sech(3).truncate(2) == Series((1, 0, Fraction(-1, 2)), 2)


# --- triangles -------------------------------------------------------------


def test_stirling_small_entries():
    assert stirling2_deg(4)[2, 1] == L("1 - λ")
    assert stirling1_deg(4)[2, 1] == L("λ - 1")
    assert jindalrae1(3)[2, 1] == L("2*λ - 2")
    assert stirling_connection_oracle(4, "first")[2, 1] == L("λ - 1")
    assert stirling_connection_oracle(4, "second")[2, 1] == L("1 - λ")


def _sym(expr) -> LambdaPoly:
    lam = sympy.Symbol("lambda")
    return LambdaPoly(Fraction(str(c)) for c in reversed(sympy.Poly(expr, lam).all_coeffs()))


def test_rows_against_symbolic_oracle():
    lam = sympy.Symbol("lambda")
    s1_row4 = [0, (lam - 3) * (lam - 2) * (lam - 1), (lam - 1) * (7 * lam - 11), 6 * (lam - 1), 1]
    s2_row4 = [0, -(lam - 1) * (2 * lam - 1) * (3 * lam - 1), (lam - 1) * (11 * lam - 7), -6 * (lam - 1), 1]
    j1_row3 = [0, (lam - 1) * (5 * lam - 7), 6 * (lam - 1), 1]
    j2_row3 = [0, (lam - 1) * (7 * lam - 5), -6 * (lam - 1), 1]
    assert list(stirling1_deg(4).rows[4]) == [_sym(e) for e in s1_row4]
    assert list(stirling2_deg(4).rows[4]) == [_sym(e) for e in s2_row4]
    assert list(jindalrae1(3).rows[3]) == [_sym(e) for e in j1_row3]
    assert list(jindalrae2(3).rows[3]) == [_sym(e) for e in j2_row3]


def test_jindalrae2_is_square_of_stirling2():
    n = 7
    s2, j2 = stirling2_deg(n), jindalrae2(n)
    for i in range(n + 1):
        for k in range(i + 1):
            assert j2[i, k] == sum((s2[i, m] * s2[m, k] for m in range(k, i + 1)), LambdaPoly())


def test_jindalrae1_is_square_of_stirling1():
    n = 7
    s1, j1 = stirling1_deg(n), jindalrae1(n)
    for i in range(n + 1):
        for k in range(i + 1):
            assert j1[i, k] == sum((s1[i, m] * s1[m, k] for m in range(k, i + 1)), LambdaPoly())


@pytest.mark.parametrize("name", list(TRIANGLES))
def test_triangle_diagonal_and_first_column(name):
    tri = TRIANGLES[name](12)
    for n in range(13):
        assert tri[n, n] == 1
        if n:
            assert tri[n, 0] == 0


@pytest.mark.parametrize("name", list(TRIANGLES))
def test_triangles_are_identity_at_lambda_one(name):
    assert TRIANGLES[name](8).eval_lambda(1) == Triangle.identity(8)


@pytest.mark.parametrize("kind, build", [("first", stirling1_deg), ("second", stirling2_deg)])
def test_egf_route_matches_connection_coefficients(kind, build):
    assert build(10) == stirling_connection_oracle(10, kind)


def test_classical_stirling_at_lambda_zero():
    assert stirling1_deg(8).eval_lambda(0) == Triangle(classical.stirling1_signed(8))
    assert stirling2_deg(8).eval_lambda(0) == Triangle(classical.stirling2(8))
    assert stirling1_deg(4).eval_lambda(0)[4, 2] == 11
    assert stirling2_deg(4).eval_lambda(0)[4, 2] == 7


def test_classical_oracles_against_sympy():
    from sympy.functions.combinatorial.numbers import stirling

    for n in range(9):
        for k in range(n + 1):
            assert classical.stirling2(8)[n][k] == stirling(n, k, kind=2)
            assert classical.stirling1_signed(8)[n][k] == stirling(n, k, kind=1, signed=True)
    assert classical.bell_numbers(8) == [sympy.bell(n) for n in range(9)]
    assert classical.harmonic(5) == Fraction(137, 60)
    x = sympy.Symbol("x")
    for n, p in enumerate(classical.euler_polynomials(6)):
        ref = sympy.Poly(sympy.euler(n, x), x).all_coeffs()[::-1]
        assert p == [Fraction(str(c)) for c in ref]


# --- polynomial families ---------------------------------------------------


def test_bell_polynomials():
    bell = bell_poly_deg(8)
    assert bell[0] == 1 and bell[1] == X
    assert bell[2] == P("x^2 - 2*λ*x + x")
    assert bell[3] == P("x^3 - 6*λ*x^2 + 3*x^2 + 7*λ^2*x - 6*λ*x + x")
    numbers = [b.eval_lambda(0).eval_x(1) for b in bell]
    assert numbers == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_carlitz_euler():
    e = carlitz_euler(1, 3)
    assert e[0] == 1
    assert e[1] == X - Fraction(1, 2)
    assert e[2] == P("x^2 - λ*x - x + 1/2*λ")
    assert e[3] == P("x^3 - 3*λ*x^2 - 3/2*x^2 + 2*λ^2*x + 3*λ*x - λ^2 + 1/4")
    assert e[2].eval_lambda(0) == X * X - X


def test_type2_euler():
    e1, e2 = type2_euler_deg(1, 4), type2_euler_deg(2, 3)
    assert e1[0] == 1 and e1[1] == X
    assert e1[2] == P("x^2 - λ*x - 1")
    assert e1[3] == P("x^3 - 3*λ*x^2 + 2*λ^2*x - 3*x + 3*λ")
    assert e1[4] == P("x^4 - 6*λ*x^3 + 11*λ^2*x^2 - 6*x^2 - 6*λ^3*x + 18*λ*x - 11*λ^2 + 5")
    assert e2[2] == P("x^2 - λ*x - 2")
    assert e2[3] == P("x^3 - 3*λ*x^2 + 2*λ^2*x - 6*x + 6*λ")


@pytest.mark.parametrize("r", [1, 2, 3])
def test_type2_euler_numbers_vanish_at_odd_n_when_lambda_zero(r):
    nums = type2_euler_deg(r, 9).numbers()
    for n in range(1, 10, 2):
        assert nums[n].eval(0) == 0


def test_type2_changhee():
    c1, c2 = type2_changhee(1, 3), type2_changhee(2, 4)
    assert c1[0] == 1 and c1[1] == X
    assert c1[2] == P("x^2 - x - 1")
    assert c1.numbers()[1] == 0 and c1.numbers()[2] == -1
    assert c2[3] == P("x^3 - 3*x^2 - 4*x + 6")
    assert c2[4] == P("x^4 - 6*x^3 - x^2 + 30*x - 6")


@pytest.mark.parametrize("r", [1, 2, 3])
def test_changhee_is_lambda_free(r):
    assert all(v.degree_lambda <= 0 for v in type2_changhee(r, 10))


@pytest.mark.parametrize("family", [bell_poly_deg, lambda n: type2_euler_deg(2, n), lambda n: type2_changhee(2, n)])
def test_x_degree_bounded_by_index(family):
    for n, v in enumerate(family(8)):
        assert v.degree_x <= n


@pytest.mark.parametrize("build", [carlitz_euler, type2_euler_deg, type2_changhee])
def test_order_must_be_positive(build):
    with pytest.raises(ValueError):
        build(0, 3)


# --- harmonic families -----------------------------------------------------


def test_harmonic_numbers():
    h = harmonic_numbers_deg(8)
    assert h[0] == 0
    assert h[1] == 1
    assert h[2] == 1 + (1 - LAM) / 2
    assert h[4] == L("-1/24*λ^3 + 5/12*λ^2 - 35/24*λ + 25/12")
    for n in range(1, 9):
        assert h[n].eval(0) == classical.harmonic(n)
    assert h[5].eval(0) == Fraction(137, 60)


def test_harmonic_routes_agree():
    assert harmonic_numbers_deg(10, "ogf") == harmonic_numbers_deg(10, "explicit")


def test_harmonic_poly_values():
    h = harmonic_poly_deg(1, 3)
    assert h[0] == 0 and h[1] == 1
    assert h[2] == P("-x - λ + 2")
    assert h[3] == P("1/2*x^2 + λ*x - 5/2*x + 7/12*λ^2 - 5/2*λ + 35/12")


def test_harmonic_poly_order_zero_shifts_harmonic_numbers():
    h0 = harmonic_poly_deg(0, 8).numbers()
    hn = harmonic_numbers_deg(9)
    for n in range(9):
        assert h0[n] == hn[n + 1]


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_harmonic_poly_routes_agree(r):
    assert harmonic_poly_deg(r, 8, "ogf").values == harmonic_poly_deg(r, 8, "explicit").values


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_harmonic_poly_vanishes_below_order(r):
    h = harmonic_poly_deg(r, r + 2)
    for n in range(r):
        assert h[n] == 0
    assert h[r] != 0


def test_generalized_harmonic_values():
    g = generalized_harmonic_deg(1, 3)
    assert g[0] == 1
    assert g[1] == L("2 - λ")
    assert g[3] == L("-1/4*λ^3 + 7/4*λ^2 - 17/4*λ + 15/4")


def test_generalized_harmonic_order_zero():
    g = generalized_harmonic_deg(0, 8)
    hn = harmonic_numbers_deg(9)
    assert list(g) == [hn[n + 1] for n in range(9)]


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_generalized_harmonic_routes_agree(r):
    gh_ogf = generalized_harmonic_deg(r, 8, "ogf")
    assert gh_ogf.values == generalized_harmonic_deg(r, 8, "explicit").values
    assert gh_ogf[0] == 1


def test_bad_route_rejected():
    with pytest.raises(ValueError):
        harmonic_numbers_deg(3, "both")


def test_route_mismatch_type():
    assert issubclass(RouteMismatch, AssertionError)


@pytest.mark.parametrize("total, parts", [(5, 2), (6, 3), (7, 4), (3, 3), (2, 3)])
def test_compositions_count_and_order(total, parts):
    comps = list(compositions(total, parts))
    assert len(comps) == (comb(total - 1, parts - 1) if total >= parts else 0)
    assert comps == sorted(comps)
    assert all(sum(c) == total and min(c) >= 1 for c in comps)


# --- inversion -------------------------------------------------------------

lambda_poly_lists = st.lists(
    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), max_size=3).map(LambdaPoly),
    min_size=7,
    max_size=7,
)


@given(lambda_poly_lists)
@settings(max_examples=30, deadline=None)
def test_transform_pair_round_trip(seq):
    there = stirling_transform_pair(seq, "via_s1", 6)
    assert stirling_transform_pair(there, "via_s2", 6) == seq
    there = stirling_transform_pair(seq, "via_s2", 6)
    assert stirling_transform_pair(there, "via_s1", 6) == seq


def test_transform_pair_on_indicator():
    delta = [LambdaPoly.constant(1)] + [LambdaPoly()] * 6
    assert stirling_transform_pair(delta, "via_s1", 6) == delta


def test_transform_pair_identity_at_lambda_one():
    seq = [LambdaPoly.constant(n * n - 3) for n in range(7)]
    s1, s2 = stirling1_deg(6).eval_lambda(1), stirling2_deg(6).eval_lambda(1)
    assert stirling_transform_pair(seq, "via_s1", 6, s1=s1) == seq
    assert stirling_transform_pair(seq, "via_s2", 6, s2=s2) == seq


def test_transform_pair_validates():
    with pytest.raises(ValueError):
        stirling_transform_pair([1, 2], "via_s1", 4)
    with pytest.raises(ValueError):
        stirling_transform_pair([1, 2], "sideways", 1)
