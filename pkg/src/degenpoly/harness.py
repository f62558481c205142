"""Exact verification of the identities relating the degenerate families.

Each checker builds the two sides of an identity from different
constructors and compares them in ℚ[λ][x].  The first disagreement is
reported with its indices and both sides; there are no tolerances.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Optional

from . import classical
from .algebra import BiPoly, LambdaPoly, Triangle, format_poly
from .functions import (
    bell_poly_deg,
    carlitz_euler,
    degenerate_exp,
    degenerate_log,
    falling_factorial_deg,
    generalized_harmonic_deg,
    harmonic_numbers_deg,
    jindalrae1,
    jindalrae2,
    stirling1_deg,
    stirling2_deg,
    stirling_transform_pair,
    type2_changhee,
    type2_euler_deg,
)

__all__ = [
    "Counterexample",
    "CheckReport",
    "CHECKS",
    "check_orthogonality",
    "check_inversion",
    "check_changhee_from_euler",
    "check_euler_from_changhee",
    "check_euler_shift_recurrence",
    "check_jindalrae1_relation",
    "check_jindalrae2_relation",
    "check_bell_relation",
    "check_harmonic_changhee",
    "check_classical_limits",
    "run_all",
]


@dataclass(frozen=True)
class Counterexample:
    indices: dict
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {
            "indices": self.indices,
            "lhs": format_poly(self.lhs),
            "rhs": format_poly(self.rhs),
            "difference": format_poly(_as_bi(self.lhs) - _as_bi(self.rhs)),
        }


@dataclass(frozen=True)
class CheckReport:
    id: str
    ranges: dict
    status: str
    counterexample: Optional[Counterexample] = None
    cases: int = field(default=0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"id": self.id, "ranges": self.ranges, "status": self.status, "cases": self.cases}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def __str__(self) -> str:
        line = f"{self.status.upper():4} {self.id} {json.dumps(self.ranges)} ({self.cases} cases)"
        if self.counterexample is not None:
            ce = self.counterexample.to_dict()
            line += f"\n     at {ce['indices']}: lhs = {ce['lhs']}; rhs = {ce['rhs']}; lhs - rhs = {ce['difference']}"
        return line


def _as_bi(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    return BiPoly.constant(v)


def _run(check_id: str, ranges: dict, cases: Iterable) -> CheckReport:
    count = 0
    for indices, lhs, rhs in cases:
        count += 1
        if _as_bi(lhs) != _as_bi(rhs):
            return CheckReport(check_id, ranges, "fail", Counterexample(indices, lhs, rhs), count)
    return CheckReport(check_id, ranges, "pass", None, count)


def _delta(n: int, l: int) -> LambdaPoly:
    return LambdaPoly.constant(1 if n == l else 0)


# --- orthogonality and inversion -----------------------------------------


def check_orthogonality(nmax: int, s1: Optional[Triangle] = None, s2: Optional[Triangle] = None) -> CheckReport:
    """Both products S₂,λ·S₁,λ and S₁,λ·S₂,λ equal the identity matrix."""
    s1 = s1 if s1 is not None else stirling1_deg(nmax)
    s2 = s2 if s2 is not None else stirling2_deg(nmax)

    def cases():
        for n in range(nmax + 1):
            for l in range(n + 1):
                lhs = sum((s2[n, k] * s1[k, l] for k in range(l, n + 1)), LambdaPoly())
                yield {"n": n, "l": l, "product": "s2*s1"}, lhs, _delta(n, l)
                lhs = sum((s1[n, k] * s2[k, l] for k in range(l, n + 1)), LambdaPoly())
                yield {"n": n, "l": l, "product": "s1*s2"}, lhs, _delta(n, l)

    return _run("orthogonality", {"n": [0, nmax]}, cases())


def _random_sequence(rng: random.Random, length: int, max_degree: int = 2) -> list[LambdaPoly]:
    return [
        LambdaPoly(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(0, max_degree) + 1))
        for _ in range(length)
    ]


def check_inversion(nmax: int, trials: int = 50, seed: int = 0) -> CheckReport:
    """Transforming by S₁,λ then S₂,λ (and conversely) returns the input sequence."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    s1, s2 = stirling1_deg(nmax), stirling2_deg(nmax)
    fixed = [[LambdaPoly.constant(1)] * (nmax + 1), [LambdaPoly()] * (nmax + 1)]

    def cases():
        for trial in range(trials + len(fixed)):
            g = fixed[trial] if trial < len(fixed) else _random_sequence(rng, nmax + 1)
            there = stirling_transform_pair(g, "via_s1", nmax, s1=s1)
            back = stirling_transform_pair(there, "via_s2", nmax, s2=s2)
            other = stirling_transform_pair(stirling_transform_pair(g, "via_s2", nmax, s2=s2), "via_s1", nmax, s1=s1)
            for n in range(nmax + 1):
                yield {"trial": trial, "n": n, "order": "s1 then s2"}, back[n], g[n]
                yield {"trial": trial, "n": n, "order": "s2 then s1"}, other[n], g[n]

    return _run("inversion", {"n": [0, nmax], "trials": trials, "seed": seed}, cases())


# --- Euler / Changhee relations ------------------------------------------


def _dot(values, tri: Triangle, n: int) -> BiPoly:
    """Σₖ values[k]·tri(n, k)."""
    return sum((_as_bi(values[k]) * tri[n, k] for k in range(n + 1)), BiPoly())


def _double(values, outer: Triangle, inner: Triangle, n: int) -> BiPoly:
    """Σₖ Σₗ outer(n, k)·inner(k, l)·values[l]."""
    acc = BiPoly()
    for k in range(n + 1):
        acc = acc + _dot(values, inner, k) * outer[n, k]
    return acc


def check_changhee_from_euler(rmax: int, nmax: int) -> CheckReport:
    """Cₙ^(r)(x) = Σₖ 𝓔ₖ,λ^(r)(x) S₁,λ(n, k), and the same at x = 0."""
    s1 = stirling1_deg(nmax)

    def cases():
        for r in range(1, rmax + 1):
            ch, eu = type2_changhee(r, nmax), type2_euler_deg(r, nmax)
            chn, eun = ch.numbers(), eu.numbers()
            for n in range(nmax + 1):
                yield {"r": r, "n": n, "form": "polynomial"}, ch[n], _dot(eu, s1, n)
                yield {"r": r, "n": n, "form": "number"}, chn[n], _dot(eun, s1, n)

    return _run("changhee-from-euler", {"n": [0, nmax], "r": [1, rmax]}, cases())


def check_euler_from_changhee(rmax: int, nmax: int) -> CheckReport:
    """𝓔ₙ,λ^(r)(x) = Σₖ Cₖ^(r)(x) S₂,λ(n, k), and the same at x = 0."""
    s2 = stirling2_deg(nmax)

    def cases():
        for r in range(1, rmax + 1):
            ch, eu = type2_changhee(r, nmax), type2_euler_deg(r, nmax)
            chn, eun = ch.numbers(), eu.numbers()
            for n in range(nmax + 1):
                yield {"r": r, "n": n, "form": "polynomial"}, eu[n], _dot(ch, s2, n)
                yield {"r": r, "n": n, "form": "number"}, eun[n], _dot(chn, s2, n)

    return _run("euler-from-changhee", {"n": [0, nmax], "r": [1, rmax]}, cases())


def check_euler_shift_recurrence(rmax: int, nmax: int) -> CheckReport:
    """Shift identities for the type 2 degenerate Euler polynomials.

    Step: 𝓔^(r)(x+2) + 𝓔^(r)(x) = 2·𝓔^(r−1)(x+1), where order 0 means
    𝓔^(0)(y) := (y)_{n,λ} (this makes r = 1 the base case).
    Telescoped: 𝓔^(r)(x+2) + Σ_{l<r} 2ˡ 𝓔^(r−l)(x−l) = 2ʳ (x − r + 2)_{n,λ}.
    """
    euler = {q: type2_euler_deg(q, nmax) for q in range(1, rmax + 1)}

    def at(q: int, n: int, shift: int) -> BiPoly:
        if q == 0:
            return falling_factorial_deg(n).shift_x(shift)
        return euler[q][n].shift_x(shift)

    def cases():
        for r in range(1, rmax + 1):
            for n in range(nmax + 1):
                yield {"r": r, "n": n, "form": "step"}, at(r, n, 2) + at(r, n, 0), at(r - 1, n, 1) * 2
        for r in range(1, rmax + 1):
            for n in range(nmax + 1):
                lhs = at(r, n, 2) + sum((at(r - l, n, -l) * 2**l for l in range(r)), BiPoly())
                rhs = falling_factorial_deg(n).shift_x(2 - r) * 2**r
                yield {"r": r, "n": n, "form": "telescoped"}, lhs, rhs

    return _run("euler-shift-recurrence", {"n": [0, nmax], "r": [1, rmax]}, cases())


def check_jindalrae1_relation(rmax: int, nmax: int) -> CheckReport:
    """Σ Cₖ^(r)(x) S₁,λ(n,k) = Σ 𝓔ₖ,λ^(r)(x) S_J^(1)(n,k), its x = 0 form,
    and the inverted double sum for Cₙ^(r)(x) through S₂,λ."""
    s1, s2, j1 = stirling1_deg(nmax), stirling2_deg(nmax), jindalrae1(nmax)

    def cases():
        for r in range(1, rmax + 1):
            ch, eu = type2_changhee(r, nmax), type2_euler_deg(r, nmax)
            chn, eun = ch.numbers(), eu.numbers()
            for n in range(nmax + 1):
                yield {"r": r, "n": n, "form": "polynomial"}, _dot(ch, s1, n), _dot(eu, j1, n)
                yield {"r": r, "n": n, "form": "number"}, _dot(chn, s1, n), _dot(eun, j1, n)
                yield {"r": r, "n": n, "form": "inverted"}, ch[n], _double(eu, s2, j1, n)

    return _run("jindalrae1-relation", {"n": [0, nmax], "r": [1, rmax]}, cases())


def check_jindalrae2_relation(rmax: int, nmax: int) -> CheckReport:
    """Σ S_J^(2)(n,k) Cₖ^(r)(x) = Σ 𝓔ₖ,λ^(r)(x) S₂,λ(n,k), plus the inverted
    double sum for 𝓔ₙ,λ^(r)(x) through S₁,λ."""
    s1, s2, j2 = stirling1_deg(nmax), stirling2_deg(nmax), jindalrae2(nmax)

    def cases():
        for r in range(1, rmax + 1):
            ch, eu = type2_changhee(r, nmax), type2_euler_deg(r, nmax)
            for n in range(nmax + 1):
                yield {"r": r, "n": n, "form": "polynomial"}, _dot(ch, j2, n), _dot(eu, s2, n)
                yield {"r": r, "n": n, "form": "inverted"}, eu[n], _double(ch, s1, j2, n)

    return _run("jindalrae2-relation", {"n": [0, nmax], "r": [1, rmax]}, cases())


def check_bell_relation(rmax: int, nmax: int) -> CheckReport:
    """Σ S_J^(2)(n,k) Cₖ^(r)(x) = Σₖ C(n,k) Σₗ 𝓔ₗ,λ^(r) S₂,λ(k,l) B_{n−k,λ}(x)."""
    s2, j2 = stirling2_deg(nmax), jindalrae2(nmax)
    bell = bell_poly_deg(nmax)

    def cases():
        for r in range(1, rmax + 1):
            ch = type2_changhee(r, nmax)
            eun = type2_euler_deg(r, nmax).numbers()
            for n in range(nmax + 1):
                rhs = BiPoly()
                for k in range(n + 1):
                    rhs = rhs + bell[n - k] * _dot(eun, s2, k).to_lambda() * comb(n, k)
                yield {"r": r, "n": n}, _dot(ch, j2, n), rhs

    return _run("bell-relation", {"n": [0, nmax], "r": [1, rmax]}, cases())


def check_harmonic_changhee(rmax: int, nmax: int) -> CheckReport:
    """Σₖ C(n,k) S₁,λ(k+r+1, r+1)/C(k+r+1, k) · C_{n−k}^(r)(x−1)
    = Σₗ C(n,l) l! H_λ(l+r+1, r) (−1)ˡ C_{n−l}^(r)(x)."""
    s1 = stirling1_deg(nmax + rmax + 1)

    def cases():
        for r in range(1, rmax + 1):
            ch = type2_changhee(r, nmax)
            shifted = ch.shift_x(-1)
            gh = generalized_harmonic_deg(r, nmax)
            for n in range(nmax + 1):
                lhs = BiPoly()
                for k in range(n + 1):
                    w = Fraction(comb(n, k), comb(k + r + 1, k))
                    lhs = lhs + shifted[n - k] * (s1[k + r + 1, r + 1] * w)
                rhs = BiPoly()
                for l in range(n + 1):
                    w = comb(n, l) * factorial(l) * (-1) ** l
                    rhs = rhs + ch[n - l] * (gh[l] * w)
                yield {"r": r, "n": n}, lhs, rhs

    return _run("harmonic-changhee", {"n": [0, nmax], "r": [1, rmax]}, cases())


# --- classical limits -----------------------------------------------------


def _x_poly(coeffs) -> BiPoly:
    return BiPoly(coeffs)


def check_classical_limits(nmax: int, rmax: int = 3) -> CheckReport:
    """λ = 0 and λ = 1 specialisations against the classical recurrences."""
    nmax = max(nmax, 1)
    triangles = {
        "s1": stirling1_deg(nmax),
        "s2": stirling2_deg(nmax),
        "j1": jindalrae1(nmax),
        "j2": jindalrae2(nmax),
    }
    cs1 = classical.stirling1_signed(nmax)
    cs2 = classical.stirling2(nmax)
    expected0 = {
        "s1": cs1,
        "s2": cs2,
        "j1": classical.matmul_lower(cs1, cs1),
        "j2": classical.matmul_lower(cs2, cs2),
    }

    def cases():
        for name, tri in triangles.items():
            at0, at1 = tri.eval_lambda(0), tri.eval_lambda(1)
            for n, k, v in at0.entries():
                yield {"family": name, "lambda": 0, "n": n, "k": k}, v, expected0[name][n][k]
            for n, k, v in at1.entries():
                yield {"family": name, "lambda": 1, "n": n, "k": k}, v, int(n == k)

        exp0 = degenerate_exp(nmax).eval_lambda(0)
        log0 = degenerate_log(nmax).eval_lambda(0)
        for n in range(nmax + 1):
            xn = _x_poly([0] * n + [Fraction(1, factorial(n))])
            yield {"family": "exp", "lambda": 0, "n": n}, exp0[n], xn
            yield {"family": "log", "lambda": 0, "n": n}, log0[n], Fraction((-1) ** (n - 1), n) if n else 0

        harm = harmonic_numbers_deg(nmax)
        for n in range(1, nmax + 1):
            yield {"family": "harmonic", "lambda": 0, "n": n}, harm[n].eval(0), classical.harmonic(n)

        bell = bell_poly_deg(nmax)
        bnum = classical.bell_numbers(nmax)
        for n in range(nmax + 1):
            b0 = bell[n].eval_lambda(0)
            yield {"family": "bell", "lambda": 0, "n": n}, b0, _x_poly(cs2[n])
            yield {"family": "bell-number", "lambda": 0, "n": n}, b0.eval_x(1), bnum[n]

        euler = carlitz_euler(1, nmax)
        ce = classical.euler_polynomials(nmax)
        for n in range(nmax + 1):
            yield {"family": "euler", "lambda": 0, "r": 1, "n": n}, euler[n].eval_lambda(0), _x_poly(ce[n])

        for r in range(1, max(rmax, 1) + 1):
            eu = type2_euler_deg(r, nmax)
            ref = classical.sech_euler_polynomials(r, nmax)
            for n in range(nmax + 1):
                e0 = eu[n].eval_lambda(0)
                yield {"family": "euler2", "lambda": 0, "r": r, "n": n}, e0, _x_poly(ref[n])
                if n % 2:
                    yield {"family": "euler2-number-parity", "lambda": 0, "r": r, "n": n}, e0.eval_x(0), 0

    return _run("classical-limits", {"n": [0, nmax], "r": [1, max(rmax, 1)], "lambda": [0, 1]}, cases())


# --- driver ---------------------------------------------------------------

CHECKS: dict[str, Callable[[int, int, int], CheckReport]] = {
    "orthogonality": lambda nmax, rmax, seed: check_orthogonality(nmax),
    "inversion": lambda nmax, rmax, seed: check_inversion(nmax, 50, seed),
    "changhee-from-euler": lambda nmax, rmax, seed: check_changhee_from_euler(max(rmax, 1), nmax),
    "euler-from-changhee": lambda nmax, rmax, seed: check_euler_from_changhee(max(rmax, 1), nmax),
    "euler-shift-recurrence": lambda nmax, rmax, seed: check_euler_shift_recurrence(max(rmax, 2), nmax),
    "jindalrae1-relation": lambda nmax, rmax, seed: check_jindalrae1_relation(max(rmax, 1), nmax),
    "jindalrae2-relation": lambda nmax, rmax, seed: check_jindalrae2_relation(max(rmax, 1), nmax),
    "bell-relation": lambda nmax, rmax, seed: check_bell_relation(max(rmax, 1), nmax),
    "harmonic-changhee": lambda nmax, rmax, seed: check_harmonic_changhee(max(rmax, 1), nmax),
    "classical-limits": lambda nmax, rmax, seed: check_classical_limits(nmax, rmax),
}


def run_all(nmax: int = 10, rmax: int = 3, seed: int = 0, ids: Optional[Iterable[str]] = None) -> list[CheckReport]:
    """Run the selected checkers (all by default) in registry order."""
    wanted = list(CHECKS) if ids is None else list(ids)
    unknown = [i for i in wanted if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown identity id(s): {', '.join(unknown)}")
    return [CHECKS[i](nmax, rmax, seed) for i in CHECKS if i in wanted]
