"""Classical (non-degenerate) reference values from textbook recurrences.

Nothing here touches the series machinery: numbers are ints/Fractions and
polynomials in x are plain coefficient lists, low to high.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def stirling1_signed(nmax: int) -> list[list[int]]:
    """s(n, k) with s(n+1, k) = s(n, k−1) − n·s(n, k)."""
    s = [[1]]
    for n in range(nmax):
        prev = s[-1] + [0]
        row = [0] * (n + 2)
        for k in range(n + 2):
            row[k] = (prev[k - 1] if k else 0) - n * prev[k]
        s.append(row)
    return s


def stirling2(nmax: int) -> list[list[int]]:
    """S(n, k) with S(n+1, k) = S(n, k−1) + k·S(n, k)."""
    s = [[1]]
    for n in range(nmax):
        prev = s[-1] + [0]
        row = [0] * (n + 2)
        for k in range(n + 2):
            row[k] = (prev[k - 1] if k else 0) + k * prev[k]
        s.append(row)
    return s


def matmul_lower(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [[sum(a[i][m] * b[m][k] for m in range(k, i + 1)) for k in range(i + 1)] for i in range(n)]


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def bell_numbers(nmax: int) -> list[int]:
    """B(n+1) = Σ C(n, k) B(k)."""
    b = [1]
    for n in range(nmax):
        b.append(sum(comb(n, k) * b[k] for k in range(n + 1)))
    return b


def euler_polynomials(nmax: int) -> list[list[Fraction]]:
    """Eₙ(x) from Eₙ(x+1) + Eₙ(x) = 2xⁿ, i.e. 2Eₙ = 2xⁿ − Σ_{k<n} C(n,k)Eₖ."""
    out: list[list[Fraction]] = []
    for n in range(nmax + 1):
        p = [Fraction(0)] * (n + 1)
        p[n] = Fraction(1)
        for k in range(n):
            c = Fraction(comb(n, k), 2)
            for i, a in enumerate(out[k]):
                p[i] -= c * a
        out.append(p)
    return out


def _binomial_convolve(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return [sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1)) for n in range(len(a))]


def sech_egf_numbers(nmax: int) -> list[Fraction]:
    """EGF coefficients of sech t, from Σ C(n,k)·cosh_k·s_{n−k} = δ_{n0}."""
    cosh = [Fraction(1 - n % 2) for n in range(nmax + 1)]
    s: list[Fraction] = []
    for n in range(nmax + 1):
        acc = Fraction(1 if n == 0 else 0)
        for k in range(1, n + 1):
            acc -= comb(n, k) * cosh[k] * s[n - k]
        s.append(acc)
    return s


def sech_euler_polynomials(r: int, nmax: int) -> list[list[Fraction]]:
    """EGF coefficients of sech(t)ʳ e^{xt} as polynomials in x."""
    base = sech_egf_numbers(nmax)
    nums = [Fraction(1)] + [Fraction(0)] * nmax
    for _ in range(r):
        nums = _binomial_convolve(nums, base)
    return [[comb(n, j) * nums[n - j] for j in range(n + 1)] for n in range(nmax + 1)]
