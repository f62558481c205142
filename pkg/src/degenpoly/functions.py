"""Degenerate special numbers and polynomials as exact objects in ℚ[λ][x].

Families normalised by tⁿ/n! (Stirling, Euler, Changhee, Bell) are read off
with ``egf_coefficient``; the harmonic families are ordinary generating
functions and are read off with plain coefficients.  Where an explicit
formula exists it is coded separately from the generating-function route so
that the two can check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .algebra import BiPoly, LambdaPoly, Series, Triangle, format_poly

__all__ = [
    "RouteMismatch",
    "PolySequence",
    "NumberSequence",
    "falling_factorial_deg",
    "falling_factorial",
    "binomial_poly",
    "binomial_series",
    "degenerate_exp",
    "degenerate_log",
    "degenerate_sech",
    "stirling1_deg",
    "stirling2_deg",
    "stirling_connection_oracle",
    "jindalrae1",
    "jindalrae2",
    "bell_poly_deg",
    "carlitz_euler",
    "type2_euler_deg",
    "type2_changhee",
    "harmonic_numbers_deg",
    "harmonic_poly_deg",
    "generalized_harmonic_deg",
    "compositions",
    "stirling_transform_pair",
]


class RouteMismatch(AssertionError):
    """Two independent constructions of the same sequence disagree."""


@dataclass(frozen=True)
class PolySequence:
    family: str
    order: int
    values: tuple[BiPoly, ...]

    def __getitem__(self, n: int) -> BiPoly:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[BiPoly]:
        return iter(self.values)

    def numbers(self, x=0) -> "NumberSequence":
        """Specialise every polynomial at a rational x (default 0)."""
        return NumberSequence(self.family, self.order, tuple(v.eval_x(x) for v in self.values))

    def shift_x(self, c) -> "PolySequence":
        return PolySequence(self.family, self.order, tuple(v.shift_x(c) for v in self.values))


@dataclass(frozen=True)
class NumberSequence:
    family: str
    order: int
    values: tuple[LambdaPoly, ...]

    def __getitem__(self, n: int) -> LambdaPoly:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[LambdaPoly]:
        return iter(self.values)


# --- elementary building blocks ------------------------------------------


@lru_cache(maxsize=None)
def falling_factorial_deg(n: int) -> BiPoly:
    """x(x − λ)(x − 2λ)⋯(x − (n−1)λ); equal to 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return BiPoly.constant(1)
    lam = LambdaPoly.lam()
    return falling_factorial_deg(n - 1) * BiPoly((lam * -(n - 1), 1))


@lru_cache(maxsize=None)
def falling_factorial(n: int) -> BiPoly:
    """The ordinary falling factorial x(x − 1)⋯(x − n + 1)."""
    return falling_factorial_deg(n).eval_lambda(1)


def binomial_poly(m: int, shift=0) -> BiPoly:
    """C(x + shift, m) as a polynomial in x."""
    return (falling_factorial(m) / math.factorial(m)).shift_x(shift)


def binomial_series(order: int, sign: int = 1, shift=0) -> Series:
    """(1 + sign·t)^(x + shift) expanded as Σ C(x + shift, m)(sign·t)^m."""
    return Series((binomial_poly(m, shift) * sign**m for m in range(order + 1)), order)


def degenerate_exp(order: int, x=None) -> Series:
    """e_λ^x(t) = Σ (x)_{n,λ} tⁿ/n! through tᴺ.

    ``x=None`` keeps x symbolic; a rational substitutes it (x = 1 gives
    e_λ(t), x = −1 gives e_λ^{-1}(t)).
    """
    vals = []
    for n in range(order + 1):
        ff = falling_factorial_deg(n)
        vals.append(ff if x is None else BiPoly.constant(ff.eval_x(Fraction(x))))
    return Series.from_egf(vals, order)


def _log_egf_coefficient(n: int) -> LambdaPoly:
    out = LambdaPoly.constant(1)
    for j in range(1, n):
        out = out * LambdaPoly((-j, 1))
    return out


def degenerate_log(order: int) -> Series:
    """log_λ(1 + t); the tⁿ/n! coefficient is (λ − 1)(λ − 2)⋯(λ − n + 1)."""
    return Series.from_egf([0] + [_log_egf_coefficient(n) for n in range(1, order + 1)], order)


def degenerate_sech(order: int) -> Series:
    """2 / (e_λ(t) + e_λ^{-1}(t))."""
    cosh2 = degenerate_exp(order, 1) + degenerate_exp(order, -1)
    return 2 / cosh2


# --- triangles ------------------------------------------------------------


def _egf_power_triangle(inner: Series, nmax: int) -> Triangle:
    """(n, k) ↦ n!/k! · [tⁿ] inner(t)ᵏ."""
    rows = [[LambdaPoly.constant(1)]] + [[LambdaPoly()] for _ in range(nmax)]
    power = Series.one(nmax)
    for k in range(1, nmax + 1):
        power = power * inner
        scale = Fraction(1, math.factorial(k))
        for n in range(k, nmax + 1):
            rows[n].append(power.egf_coefficient(n).to_lambda() * scale)
    return Triangle(rows)


def _e_minus_one(order: int) -> Series:
    return degenerate_exp(order, 1) - 1


@lru_cache(maxsize=None)
def stirling2_deg(nmax: int) -> Triangle:
    """Degenerate Stirling numbers of the second kind, from (e_λ(t) − 1)ᵏ/k!."""
    return _egf_power_triangle(_e_minus_one(nmax), nmax)


@lru_cache(maxsize=None)
def stirling1_deg(nmax: int) -> Triangle:
    """Degenerate Stirling numbers of the first kind, from log_λ(1 + t)ᵏ/k!."""
    return _egf_power_triangle(degenerate_log(nmax), nmax)


@lru_cache(maxsize=None)
def jindalrae1(nmax: int) -> Triangle:
    """Jindalrae-Stirling numbers of the first kind: log_λ(1 + log_λ(1 + t))ᵏ/k!."""
    log = degenerate_log(nmax)
    return _egf_power_triangle(log(log), nmax)


@lru_cache(maxsize=None)
def jindalrae2(nmax: int) -> Triangle:
    """Jindalrae-Stirling numbers of the second kind: (e_λ(e_λ(t) − 1) − 1)ᵏ/k!."""
    em1 = _e_minus_one(nmax)
    return _egf_power_triangle(em1(em1), nmax)


def _expand_in_basis(target: BiPoly, basis: Sequence[BiPoly]) -> list[LambdaPoly]:
    # basis[l] is monic of x-degree l, so back substitution stays in ℚ[λ]
    rem = target
    out = [LambdaPoly()] * len(basis)
    for l in range(len(basis) - 1, -1, -1):
        c = rem.coefficient(l)
        if c:
            out[l] = c
            rem = rem - basis[l] * c
    if rem:
        raise ArithmeticError(f"remainder {format_poly(rem)} after basis expansion")
    return out


@lru_cache(maxsize=None)
def stirling_connection_oracle(nmax: int, kind: str) -> Triangle:
    """Stirling triangles as connection coefficients between falling-factorial bases.

    ``kind="first"`` expands (x)ₙ over {(x)_{l,λ}}; ``kind="second"`` expands
    (x)_{n,λ} over {(x)_l}.  No generating functions are involved.
    """
    if kind == "first":
        targets, basis = falling_factorial, falling_factorial_deg
    elif kind == "second":
        targets, basis = falling_factorial_deg, falling_factorial
    else:
        raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")
    rows = []
    for n in range(nmax + 1):
        rows.append(_expand_in_basis(targets(n), [basis(l) for l in range(n + 1)]))
    return Triangle(rows)


# --- polynomial families --------------------------------------------------


def _egf_values(s: Series, nmax: int) -> tuple[BiPoly, ...]:
    return tuple(s.egf_coefficient(n) for n in range(nmax + 1))


@lru_cache(maxsize=None)
def bell_poly_deg(nmax: int) -> PolySequence:
    """Degenerate Bell polynomials from e_λ^x(e_λ(t) − 1)."""
    gf = degenerate_exp(nmax)(_e_minus_one(nmax))
    return PolySequence("bell", 0, _egf_values(gf, nmax))


def _require_order(r: int, lowest: int = 1) -> None:
    if r < lowest:
        raise ValueError(f"order r must be at least {lowest}, got {r}")


@lru_cache(maxsize=None)
def carlitz_euler(r: int, nmax: int) -> PolySequence:
    """Carlitz degenerate Euler polynomials of order r: (2/(e_λ(t) + 1))ʳ e_λ^x(t)."""
    _require_order(r)
    factor = 2 / (degenerate_exp(nmax, 1) + 1)
    gf = factor**r * degenerate_exp(nmax)
    return PolySequence("euler", r, _egf_values(gf, nmax))


@lru_cache(maxsize=None)
def type2_euler_deg(r: int, nmax: int) -> PolySequence:
    """Type 2 degenerate Euler polynomials of order r: sech_λ(t)ʳ e_λ^x(t).

    ``.numbers()`` gives the type 2 degenerate Euler numbers (x = 0).
    """
    _require_order(r)
    gf = degenerate_sech(nmax) ** r * degenerate_exp(nmax)
    return PolySequence("euler2", r, _egf_values(gf, nmax))


@lru_cache(maxsize=None)
def type2_changhee(r: int, nmax: int) -> PolySequence:
    """Type 2 Changhee polynomials of order r: (2/((1+t) + (1+t)⁻¹))ʳ (1+t)^x.

    These do not involve λ.  ``.numbers()`` gives the Changhee numbers.
    """
    _require_order(r)
    one_plus_t = Series((1, 1), nmax)
    factor = 2 / (one_plus_t + 1 / one_plus_t)
    gf = factor**r * binomial_series(nmax)
    return PolySequence("changhee2", r, _egf_values(gf, nmax))


# --- harmonic families ----------------------------------------------------


def _neg_log_one_minus_t(order: int) -> Series:
    return -degenerate_log(order).scale_variable(-1)


def _one_minus_t(order: int) -> Series:
    return Series((1, -1), order)


def _harmonic_part(k: int) -> LambdaPoly:
    # (−λ)^{k−1}(1)_{k,1/λ}/k! multiplied out: (1 − λ)(2 − λ)⋯(k − 1 − λ)/k!
    out = LambdaPoly.constant(Fraction(1, math.factorial(k)))
    for j in range(1, k):
        out = out * LambdaPoly((j, -1))
    return out


def _log_part(k: int) -> LambdaPoly:
    # λ^{k−1}(1)_{k,1/λ}/k! multiplied out: (λ − 1)⋯(λ − k + 1)/k!
    out = LambdaPoly.constant(Fraction(1, math.factorial(k)))
    for j in range(1, k):
        out = out * LambdaPoly((-j, 1))
    return out


def _check_routes(name: str, a: Sequence, b: Sequence) -> None:
    for n, (u, v) in enumerate(zip(a, b)):
        if u != v:
            raise RouteMismatch(f"{name}[{n}]: {format_poly(u)} != {format_poly(v)}")


_ROUTES = ("ogf", "explicit", None)


def _pick_route(route):
    if route not in _ROUTES:
        raise ValueError(f"route must be 'ogf', 'explicit' or None, not {route!r}")


@lru_cache(maxsize=None)
def harmonic_numbers_deg(nmax: int, route: Optional[str] = None) -> NumberSequence:
    """Degenerate harmonic numbers H_{n,λ} for n = 0..nmax, with H_{0,λ} = 0.

    ``route="ogf"`` reads coefficients of −log_λ(1 − t)/(1 − t);
    ``route="explicit"`` sums (1 − λ)⋯(k − 1 − λ)/k! over k ≤ n.  The default
    computes both and raises :class:`RouteMismatch` if they differ.
    """
    _pick_route(route)
    ogf = explicit = None
    if route in ("ogf", None):
        gf = _neg_log_one_minus_t(nmax) / _one_minus_t(nmax)
        ogf = tuple(gf.coefficient(n).to_lambda() for n in range(nmax + 1))
    if route in ("explicit", None):
        acc = LambdaPoly()
        vals = [acc]
        for k in range(1, nmax + 1):
            acc = acc + _harmonic_part(k)
            vals.append(acc)
        explicit = tuple(vals)
    if route is None:
        _check_routes("H", ogf, explicit)
    return NumberSequence("harmonic", 0, ogf if ogf is not None else explicit)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive parts, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _composition_sum(total: int, parts: int, piece) -> LambdaPoly:
    acc = LambdaPoly()
    for comp in compositions(total, parts):
        term = LambdaPoly.constant(1)
        for li in comp:
            term = term * piece(li)
        acc = acc + term
    return acc


def _harmonic_numbers_of_order(r: int, nmax: int) -> list[LambdaPoly]:
    # vanishes below n = r; otherwise a double sum over l ≤ n + 1 and compositions of l
    piece = lru_cache(maxsize=None)(_harmonic_part)
    inner = {l: _composition_sum(l, r + 1, piece) for l in range(r + 1, nmax + 2)}
    out = []
    for n in range(nmax + 1):
        if n < r:
            out.append(LambdaPoly())
            continue
        acc = LambdaPoly()
        for l in range(r + 1, n + 2):
            acc = acc + inner[l]
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def harmonic_poly_deg(r: int, nmax: int, route: Optional[str] = None) -> PolySequence:
    """Degenerate harmonic polynomials of order r ≥ 0, n = 0..nmax.

    ``route="ogf"`` reads plain coefficients of
    (−log_λ(1 − t))^{r+1} (1 − t)^{x−1} / t.  ``route="explicit"`` uses the
    multinomial sum over compositions convolved with C(x, m)(−1)^m.  The
    default computes both and asserts agreement.
    """
    _require_order(r, 0)
    _pick_route(route)
    ogf = explicit = None
    if route in ("ogf", None):
        n1 = nmax + 1
        gf = _neg_log_one_minus_t(n1) ** (r + 1) * binomial_series(n1, sign=-1, shift=-1)
        gf = gf.divide_by_t(1)
        ogf = tuple(gf.coefficient(n) for n in range(nmax + 1))
    if route in ("explicit", None):
        numbers = _harmonic_numbers_of_order(r, nmax)
        vals = []
        for n in range(nmax + 1):
            acc = BiPoly()
            for k in range(r, n + 1):
                acc = acc + binomial_poly(n - k) * numbers[k] * (-1) ** (n - k)
            vals.append(acc)
        explicit = tuple(vals)
    if route is None:
        _check_routes(f"H^({r})", ogf, explicit)
    return PolySequence("harmonic-poly", r, ogf if ogf is not None else explicit)


@lru_cache(maxsize=None)
def generalized_harmonic_deg(r: int, nmax: int, route: Optional[str] = None) -> NumberSequence:
    """Generalised degenerate harmonic numbers H_λ(n + r + 1, r) for n = 0..nmax.

    ``route="ogf"`` reads (−log_λ(1 − t))^{r+1} / (t^{r+1}(1 − t));
    ``route="explicit"`` sums (−1)^{r+1−l} over compositions of l into r + 1
    parts with parts (λ − 1)⋯(λ − lᵢ + 1)/lᵢ!.
    """
    _require_order(r, 0)
    _pick_route(route)
    ogf = explicit = None
    if route in ("ogf", None):
        top = nmax + r + 1
        gf = _neg_log_one_minus_t(top) ** (r + 1) / _one_minus_t(top)
        gf = gf.divide_by_t(r + 1)
        ogf = tuple(gf.coefficient(n).to_lambda() for n in range(nmax + 1))
    if route in ("explicit", None):
        piece = lru_cache(maxsize=None)(_log_part)
        inner = {
            l: _composition_sum(l, r + 1, piece) * (-1 if (l - r - 1) % 2 else 1)
            for l in range(r + 1, nmax + r + 2)
        }
        vals = []
        acc = LambdaPoly()
        for n in range(nmax + 1):
            acc = acc + inner[n + r + 1]
            vals.append(acc)
        explicit = tuple(vals)
    if route is None:
        _check_routes(f"H_λ(·, {r})", ogf, explicit)
    return NumberSequence("genharmonic", r, ogf if ogf is not None else explicit)


# --- inversion ------------------------------------------------------------


def stirling_transform_pair(
    seq: Sequence,
    direction: str,
    nmax: int,
    s1: Optional[Triangle] = None,
    s2: Optional[Triangle] = None,
) -> list[LambdaPoly]:
    """Lower-triangular Stirling transforms.

    ``via_s1``: fₙ = Σₖ gₖ S₁,λ(n, k); ``via_s2``: gₙ = Σₖ fₖ S₂,λ(n, k).
    Applying one after the other returns the input.
    """
    if len(seq) < nmax + 1:
        raise ValueError(f"need {nmax + 1} terms, got {len(seq)}")
    if direction == "via_s1":
        tri = s1 if s1 is not None else stirling1_deg(nmax)
    elif direction == "via_s2":
        tri = s2 if s2 is not None else stirling2_deg(nmax)
    else:
        raise ValueError(f"direction must be 'via_s1' or 'via_s2', not {direction!r}")
    vals = [v if isinstance(v, LambdaPoly) else LambdaPoly.constant(v) for v in seq]
    out = []
    for n in range(nmax + 1):
        acc = LambdaPoly()
        for k in range(n + 1):
            acc = acc + vals[k] * tri[n, k]
        out.append(acc)
    return out
