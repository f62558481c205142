"""Exact scalars, polynomials in (λ, x) and truncated power series in t.

Scalars are :class:`fractions.Fraction`.  ``LambdaPoly`` is an element of
ℚ[λ], ``BiPoly`` an element of ℚ[λ][x], and ``Series`` a truncated power
series in t whose coefficients are ``BiPoly``.  All values are immutable.

Series coefficients are stored plainly (the coefficient of tⁿ, not
multiplied by n!).  Use :func:`egf_coefficient` for the exponential
normalisation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

__all__ = [
    "AlgebraError",
    "NonUnitConstantTerm",
    "NonzeroInnerConstant",
    "IndexBeyondOrder",
    "LambdaPoly",
    "BiPoly",
    "Series",
    "Triangle",
    "series_add",
    "series_mul",
    "series_div",
    "series_pow",
    "series_compose",
    "egf_coefficient",
    "poly_eval_lambda",
    "format_rational",
    "parse_rational",
    "format_poly",
    "parse_poly",
    "to_array",
    "from_array",
]

Scalar = Union[int, Fraction]

LAMBDA = "λ"


class AlgebraError(ValueError):
    pass


class NonUnitConstantTerm(AlgebraError):
    """Divisor series whose constant term is zero or not a rational constant."""


class NonzeroInnerConstant(AlgebraError):
    """Inner series of a composition with a nonzero constant term."""


class IndexBeyondOrder(AlgebraError, IndexError):
    """Coefficient requested beyond the truncation order."""


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class LambdaPoly:
    """A polynomial in λ with rational coefficients, stored low to high."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "LambdaPoly":
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "LambdaPoly":
        return cls((c,))

    @classmethod
    def lam(cls) -> "LambdaPoly":
        """The indeterminate λ."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree in λ; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"LambdaPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        if isinstance(other, BiPoly):
            return other == self
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if len(self.coeffs) == 1 else (hash(self.coeffs) if self.coeffs else 0)
        return self._hash

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "LambdaPoly":
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly.constant(other)
        elif not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> "LambdaPoly":
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "LambdaPoly":
        return (-self) + other

    def __mul__(self, other) -> "LambdaPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LambdaPoly._raw(())
            return LambdaPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return LambdaPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "LambdaPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        inv = 1 / Fraction(other)
        return self * inv

    def __pow__(self, k: int) -> "LambdaPoly":
        return _power(self, k, LambdaPoly.constant(1))

    def __call__(self, a: Scalar) -> Fraction:
        return self.eval(a)

    def eval(self, a: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc


class BiPoly:
    """A polynomial in x whose coefficients are ``LambdaPoly`` (low to high)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([_as_lambda(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "BiPoly":
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "BiPoly":
        """The indeterminate x."""
        return cls((0, 1))

    @classmethod
    def lam(cls) -> "BiPoly":
        return cls((LambdaPoly.lam(),))

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[Scalar]]) -> "BiPoly":
        """Build from ``grid[i][j]`` = coefficient of xⁱλʲ."""
        return cls(LambdaPoly(row) for row in grid)

    @property
    def degree_x(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_lambda(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_x_free(self) -> bool:
        return len(self.coeffs) <= 1

    def is_constant(self) -> bool:
        return len(self.coeffs) == 0 or (len(self.coeffs) == 1 and self.coeffs[0].is_constant())

    def to_lambda(self) -> LambdaPoly:
        """The underlying ``LambdaPoly`` of an x-free polynomial."""
        if len(self.coeffs) > 1:
            raise AlgebraError(f"not free of x: {format_poly(self)}")
        return self.coeffs[0] if self.coeffs else LambdaPoly._raw(())

    def coefficient(self, i: int) -> LambdaPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else LambdaPoly._raw(())

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self.coeffs == _trim([_as_lambda(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if len(self.coeffs) == 1 else (hash(self.coeffs) if self.coeffs else 0)
        return self._hash

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "BiPoly":
        other = _as_bipoly_or_none(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        other = _as_bipoly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction, LambdaPoly)):
            if not other:
                return BiPoly._raw(())
            return BiPoly._raw(_trim([c * other for c in self.coeffs]))
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BiPoly._raw(())
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        zero = LambdaPoly._raw(())
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return BiPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "BiPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "BiPoly":
        return _power(self, k, BiPoly.constant(1))

    def eval_lambda(self, a: Scalar) -> "BiPoly":
        """Substitute λ = a; the result has λ-degree ≤ 0."""
        return BiPoly._raw(_trim([LambdaPoly.constant(c.eval(a)) for c in self.coeffs]))

    def eval_x(self, b) -> LambdaPoly:
        """Substitute x = b (a rational or a ``LambdaPoly``)."""
        acc = LambdaPoly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * b + c
        return acc

    def __call__(self, b) -> LambdaPoly:
        return self.eval_x(b)

    def substitute_x(self, q: "BiPoly") -> "BiPoly":
        """Compose in x: return p(q(x, λ), λ)."""
        acc = BiPoly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift_x(self, c) -> "BiPoly":
        """p(x + c); c may be rational or a ``LambdaPoly``."""
        if not c:
            return self
        return self.substitute_x(BiPoly((c, 1)))


def _as_lambda(c) -> LambdaPoly:
    if isinstance(c, LambdaPoly):
        return c
    if isinstance(c, (int, Fraction)):
        return LambdaPoly.constant(c)
    if isinstance(c, BiPoly):
        return c.to_lambda()
    raise TypeError(f"cannot interpret {c!r} as a polynomial in λ")


def _as_bipoly_or_none(v):
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, (int, Fraction, LambdaPoly)):
        return BiPoly._raw(_trim([_as_lambda(v)]))
    return None


def as_bipoly(v) -> BiPoly:
    out = _as_bipoly_or_none(v)
    if out is None:
        raise TypeError(f"cannot interpret {v!r} as a polynomial in λ and x")
    return out


def _power(base, k: int, one):
    if k < 0:
        raise AlgebraError("negative exponent")
    result = one
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


class Series:
    """Power series in t truncated after the tⁿ term with n = ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise AlgebraError("order must be nonnegative")
        cs = [as_bipoly(c) for c in coeffs]
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        zero = BiPoly._raw(())
        cs.extend([zero] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple, order: int) -> "Series":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((1,), order)

    @classmethod
    def t(cls, order: int) -> "Series":
        return cls((0, 1), order)

    @classmethod
    def from_egf(cls, values: Iterable, order: int) -> "Series":
        """Series with coefficient ``values[n] / n!`` at tⁿ."""
        vals = list(values)[: order + 1]
        return cls((as_bipoly(v) / math.factorial(n) for n, v in enumerate(vals)), order)

    def __repr__(self) -> str:
        terms = ", ".join(format_poly(c) for c in self.coeffs)
        return f"Series([{terms}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __getitem__(self, n: int) -> BiPoly:
        return self.coefficient(n)

    def __len__(self) -> int:
        return self.order + 1

    def coefficient(self, n: int) -> BiPoly:
        if n < 0 or n > self.order:
            raise IndexBeyondOrder(f"t^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> BiPoly:
        return self.coefficient(n) * math.factorial(n)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise IndexBeyondOrder(f"cannot extend order {self.order} to {order}")
        return Series._raw(self.coeffs[: order + 1], order)

    def map(self, f: Callable[[BiPoly], BiPoly]) -> "Series":
        return Series._raw(tuple(as_bipoly(f(c)) for c in self.coeffs), self.order)

    def __neg__(self) -> "Series":
        return Series._raw(tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series._raw(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n)
        c = _as_bipoly_or_none(other)
        if c is None:
            return NotImplemented
        return Series._raw((self.coeffs[0] + c,) + self.coeffs[1:], self.order)

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        if isinstance(other, Series):
            return self + (-other)
        c = _as_bipoly_or_none(other)
        if c is None:
            return NotImplemented
        return self + (-c)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            c = _as_bipoly_or_none(other)
            if c is None:
                return NotImplemented
            return Series._raw(tuple(a * c for a in self.coeffs), self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = BiPoly._raw(())
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series._raw(tuple(out), n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_div(self, other)
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other) -> "Series":
        c = _as_bipoly_or_none(other)
        if c is None:
            return NotImplemented
        return series_div(Series((c,), self.order), self)

    def __pow__(self, r: int) -> "Series":
        return series_pow(self, r)

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def scale_variable(self, c: Scalar) -> "Series":
        """Substitute t → c·t."""
        c = Fraction(c)
        return Series._raw(tuple(a * c**n for n, a in enumerate(self.coeffs)), self.order)

    def divide_by_t(self, k: int = 1) -> "Series":
        """Exact division by tᵏ; the truncation order drops by k."""
        if k == 0:
            return self
        if k > self.order:
            raise IndexBeyondOrder(f"cannot divide order-{self.order} series by t^{k}")
        if any(self.coeffs[:k]):
            raise AlgebraError(f"series is not divisible by t^{k}")
        return Series._raw(self.coeffs[k:], self.order - k)

    def eval_lambda(self, a: Scalar) -> "Series":
        return Series._raw(tuple(c.eval_lambda(a) for c in self.coeffs), self.order)

    def eval_x(self, b) -> "Series":
        return Series._raw(tuple(as_bipoly(c.eval_x(b)) for c in self.coeffs), self.order)


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_div(a: Series, b: Series) -> Series:
    """Quotient q with q·b = a through the common truncation order.

    The constant term of ``b`` must be a nonzero rational.
    """
    b0 = b.coeffs[0]
    if not b0 or not b0.is_constant():
        raise NonUnitConstantTerm(f"constant term {format_poly(b0)} is not a nonzero rational")
    inv = 1 / b0.coeffs[0].coeffs[0]
    n = min(a.order, b.order)
    q = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for i in range(1, k + 1):
            if b.coeffs[i] and q[k - i]:
                acc = acc - b.coeffs[i] * q[k - i]
        q.append(acc * inv)
    return Series._raw(tuple(q), n)


def series_pow(a: Series, r: int) -> Series:
    if r < 0:
        raise AlgebraError("negative exponent")
    return _power(a, r, Series.one(a.order))


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(t)) by Horner's rule; requires inner(0) = 0."""
    if inner.coeffs[0]:
        raise NonzeroInnerConstant(f"inner constant term is {format_poly(inner.coeffs[0])}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = Series((outer.coeffs[n],), n)
    for i in range(n - 1, -1, -1):
        acc = acc * inner + outer.coeffs[i]
    return acc


def egf_coefficient(a: Series, n: int) -> BiPoly:
    return a.egf_coefficient(n)


class Triangle:
    """Lower-triangular array of ``LambdaPoly`` indexed by (n, k), k ≤ n ≤ nmax.

    Entries above the diagonal read as zero.
    """

    __slots__ = ("nmax", "rows")

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(_as_lambda(v) for v in row) for row in rows)
        for n, row in enumerate(rs):
            if len(row) != n + 1:
                raise AlgebraError(f"row {n} has {len(row)} entries, expected {n + 1}")
        self.nmax = len(rs) - 1
        self.rows = rs

    @classmethod
    def identity(cls, nmax: int) -> "Triangle":
        return cls([[1 if k == n else 0 for k in range(n + 1)] for n in range(nmax + 1)])

    def __getitem__(self, nk: tuple[int, int]) -> LambdaPoly:
        n, k = nk
        if n < 0 or n > self.nmax:
            raise IndexError(f"row {n} outside 0..{self.nmax}")
        if k < 0 or k > n:
            return LambdaPoly._raw(())
        return self.rows[n][k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Triangle(nmax={self.nmax})"

    def truncate(self, nmax: int) -> "Triangle":
        if nmax > self.nmax:
            raise IndexError(f"cannot extend triangle of {self.nmax} rows to {nmax}")
        return Triangle(self.rows[: nmax + 1])

    def with_entry(self, n: int, k: int, value) -> "Triangle":
        rows = [list(r) for r in self.rows]
        rows[n][k] = _as_lambda(value)
        return Triangle(rows)

    def map(self, f: Callable[[LambdaPoly], LambdaPoly]) -> "Triangle":
        return Triangle([[f(v) for v in row] for row in self.rows])

    def eval_lambda(self, a: Scalar) -> "Triangle":
        return self.map(lambda p: LambdaPoly.constant(p.eval(a)))

    def entries(self):
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield n, k, v


def poly_eval_lambda(p, a: Scalar):
    """Substitute λ = a in any of the algebra types.

    A ``LambdaPoly`` evaluates to a ``Fraction``; the other types keep their
    shape with λ-free coefficients.
    """
    if isinstance(p, (int, Fraction)):
        return Fraction(p)
    if isinstance(p, LambdaPoly):
        return p.eval(a)
    if isinstance(p, (BiPoly, Series, Triangle)):
        return p.eval_lambda(a)
    raise TypeError(f"unsupported type {type(p).__name__}")


# --- canonical text -------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational p/q: {text!r}")
    q = Fraction(s)
    return q


def _monomial(i_lambda: int, j_x: int) -> str:
    parts = []
    for sym, e in ((LAMBDA, i_lambda), ("x", j_x)):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(f"{sym}^{e}")
    return "*".join(parts)


def format_poly(p) -> str:
    """Canonical text: terms high-to-low in x, then in λ; "0" for zero.

    Works for rationals, ``LambdaPoly`` and ``BiPoly``.
    """
    if isinstance(p, (int, Fraction)):
        return format_rational(p)
    if isinstance(p, LambdaPoly):
        grid = [p.coeffs]
    elif isinstance(p, BiPoly):
        grid = [c.coeffs for c in p.coeffs]
    else:
        raise TypeError(f"unsupported type {type(p).__name__}")
    terms = []
    for j in range(len(grid) - 1, -1, -1):
        row = grid[j]
        for i in range(len(row) - 1, -1, -1):
            if row[i]:
                terms.append((row[i], _monomial(i, j)))
    if not terms:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(terms):
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_FACTOR_RE = re.compile(r"^(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>λ|x)(?:\^(?P<exp>\d+))?)$")


def parse_poly(text: str) -> BiPoly:
    """Inverse of :func:`format_poly` (returns a ``BiPoly``)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in pieces) != s:
        raise ValueError(f"malformed polynomial text: {text!r}")
    grid: dict[tuple[int, int], Fraction] = {}
    for sign, body in pieces:
        coeff = Fraction(1)
        i = j = 0
        for factor in body.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"malformed factor {factor!r} in {text!r}")
            if m.group("num") is not None:
                coeff *= Fraction(m.group("num"))
            else:
                e = int(m.group("exp") or 1)
                if m.group("sym") == "x":
                    j += e
                else:
                    i += e
        if sign == "-":
            coeff = -coeff
        grid[(i, j)] = grid.get((i, j), Fraction(0)) + coeff
    dx = max(j for _, j in grid)
    dl = max(i for i, _ in grid)
    rows = [[grid.get((i, j), 0) for i in range(dl + 1)] for j in range(dx + 1)]
    return BiPoly.from_grid(rows)


def to_array(p):
    """Array form: rational → "p/q", LambdaPoly → list low-to-high, BiPoly → list of lists."""
    if isinstance(p, (int, Fraction)):
        return format_rational(p)
    if isinstance(p, LambdaPoly):
        return [format_rational(c) for c in p.coeffs]
    if isinstance(p, BiPoly):
        return [to_array(c) for c in p.coeffs]
    raise TypeError(f"unsupported type {type(p).__name__}")


def from_array(data):
    if isinstance(data, str):
        return parse_rational(data)
    if all(isinstance(d, str) for d in data) and data:
        return LambdaPoly(parse_rational(d) for d in data)
    if not data:
        return LambdaPoly()
    return BiPoly(from_array(d) if d else LambdaPoly() for d in data)
