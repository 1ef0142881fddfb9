"""Sparse polynomials over Q in the n^2 matrix-entry variables x_ij."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from . import kernels

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class VarGrid:
    """Variables x_ij, 1 <= i, j <= n, flattened row-major."""

    n: int

    @property
    def nvars(self) -> int:
        return self.n * self.n

    def index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"x_{i}{j} is outside the {self.n}x{self.n} grid")
        return (i - 1) * self.n + (j - 1)

    def position(self, k: int) -> tuple[int, int]:
        return k // self.n + 1, k % self.n + 1

    def name(self, k: int) -> str:
        i, j = self.position(k)
        return f"x{i}{j}" if self.n <= 9 else f"x{i}_{j}"

    def monomial(self, *entries: tuple[int, int]) -> Monomial:
        exps = [0] * self.nvars
        for i, j in entries:
            exps[self.index(i, j)] += 1
        return tuple(exps)


ORDER_KINDS = ("degrevlex", "deglex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    """Total monomial order; var_priority lists flat indices from greatest variable down.

    ``key(m)`` returns a tuple of ints; larger tuple means larger monomial.
    """

    kind: str = "degrevlex"
    var_priority: tuple[int, ...] | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def _priority(self, nvars: int) -> tuple[int, ...]:
        if self.var_priority is None:
            return tuple(range(nvars))
        if sorted(self.var_priority) != list(range(nvars)):
            raise ValueError("var_priority is not a permutation of the variables")
        return self.var_priority

    def key(self, m: Monomial) -> tuple[int, ...]:
        k = self._cache.get(m)
        if k is None:
            pr = self._priority(len(m))
            if self.kind == "degrevlex":
                k = (sum(m),) + tuple(-m[p] for p in reversed(pr))
            elif self.kind == "deglex":
                k = (sum(m),) + tuple(m[p] for p in pr)
            else:
                k = tuple(m[p] for p in pr)
            self._cache[m] = k
        return k

    def __hash__(self):
        return hash((self.kind, self.var_priority))


DEGREVLEX = MonomialOrder("degrevlex")


def compare(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    """-1, 0, 1 as u is less than, equal to, greater than v."""
    if len(u) != len(v):
        raise ValueError("monomials live on different variable grids")
    ku, kv = order.key(u), order.key(v)
    return (ku > kv) - (ku < kv)


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MPoly:
    """Immutable sparse polynomial; terms map exponent tuples to nonzero Fractions."""

    __slots__ = ("grid", "terms", "_hash")

    def __init__(self, grid: VarGrid, terms: Mapping[Monomial, object] | None = None):
        self.grid = grid
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != grid.nvars:
                    raise ValueError("monomial length does not match the grid")
                c = _as_fraction(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    # -- constructors
    @classmethod
    def var(cls, grid: VarGrid, i: int, j: int) -> "MPoly":
        return cls(grid, {grid.monomial((i, j)): 1})

    @classmethod
    def const(cls, grid: VarGrid, c) -> "MPoly":
        return cls(grid, {(0,) * grid.nvars: c})

    @classmethod
    def _raw(cls, grid: VarGrid, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.grid = grid
        p.terms = terms
        p._hash = None
        return p

    # -- arithmetic
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.grid != self.grid:
                raise ValueError(f"grid mismatch: {self.grid} vs {other.grid}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.grid, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MPoly._raw(self.grid, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.grid, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = _as_fraction(c)
        if not c:
            return MPoly(self.grid)
        return MPoly._raw(self.grid, {m: c * v for m, v in self.terms.items()})

    def shift(self, mono: Monomial, c=1) -> "MPoly":
        """c * x^mono * self."""
        c = _as_fraction(c)
        if not c:
            return MPoly(self.grid)
        return MPoly._raw(
            self.grid, {kernels.mono_mul(m, mono): c * v for m, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        mul = kernels.mono_mul
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MPoly._raw(self.grid, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.grid, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.grid, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.grid == other.grid and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.grid, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"

    # -- structure
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def lead(self, order: MonomialOrder = DEGREVLEX) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def lm(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return self.lead(order)[0]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "MPoly":
        return self.scale(1 / self.lead(order)[1])

    def primitive(self, order: MonomialOrder = DEGREVLEX) -> "MPoly":
        """Integer coefficients with content 1 and a positive leading coefficient."""
        if not self.terms:
            return self
        den = reduce(lcm, (c.denominator for c in self.terms.values()), 1)
        ints = [int(c * den) for c in self.terms.values()]
        content = reduce(gcd, ints, 0)
        s = Fraction(den, content)
        if self.lead(order)[1] < 0:
            s = -s
        return self.scale(s)

    def diff(self, k: int) -> "MPoly":
        """Partial derivative in the flat variable k."""
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                nm = m[:k] + (e - 1,) + m[k + 1 :]
                out[nm] = c * e
        return MPoly._raw(self.grid, out)

    def variables(self) -> set[int]:
        return {k for m in self.terms for k, e in enumerate(m) if e}

    def evaluate(self, values: Sequence):
        """Substitute values[k] for the flat variable k."""
        if len(values) != self.grid.nvars:
            raise ValueError("wrong number of values")
        total = 0
        for m, c in self.terms.items():
            term = c
            for k, e in enumerate(m):
                if e:
                    term = term * values[k] ** e
            total = total + term
        return total

    # -- text
    def to_text(self, order: MonomialOrder = DEGREVLEX) -> str:
        return format_poly(self, order)

    @classmethod
    def parse(cls, text: str, grid: VarGrid) -> "MPoly":
        return parse_poly(text, grid)


def format_monomial(grid: VarGrid, m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m):
        if e:
            parts.append(grid.name(k) if e == 1 else f"{grid.name(k)}^{e}")
    return "*".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: MPoly, order: MonomialOrder = DEGREVLEX) -> str:
    """Canonical text: terms descending, e.g. ``x12^2 + 2*x11*x13``."""
    if not f.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(f.sorted_terms(order)):
        mono = format_monomial(f.grid, m)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TERM = re.compile(r"([+-]?)([^+-]+)")
_VAR_SMALL = re.compile(r"x(\d)(\d)(?:\^(\d+))?")
_VAR_LARGE = re.compile(r"x(\d+)_(\d+)(?:\^(\d+))?")
_NUMBER = re.compile(r"\d+(?:/\d+)?")


def parse_poly(text: str, grid: VarGrid) -> MPoly:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return MPoly(grid)
    var_re = _VAR_SMALL if grid.n <= 9 else _VAR_LARGE
    terms: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, body = m.groups()
        pos = m.end()
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * grid.nvars
        for factor in body.split("*"):
            if _NUMBER.fullmatch(factor):
                coeff *= Fraction(factor)
                continue
            v = var_re.fullmatch(factor)
            if not v:
                raise ValueError(f"cannot parse factor {factor!r}")
            i, j, e = int(v.group(1)), int(v.group(2)), int(v.group(3) or 1)
            exps[grid.index(i, j)] += e
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return MPoly(grid, terms)


def _monic_divisors(B: Iterable[MPoly], order: MonomialOrder) -> list:
    out = []
    for b in B:
        if b.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
        lm, lc = b.lead(order)
        tail = [(m, c / lc) for m, c in b.terms.items() if m != lm]
        out.append((lm, tail))
    return out


def normal_form(f: MPoly, B: Sequence[MPoly], order: MonomialOrder = DEGREVLEX) -> MPoly:
    """Remainder of f on full division by B (first matching divisor wins)."""
    for b in B:
        if b.grid != f.grid:
            raise ValueError("grid mismatch in normal_form")
    if not B or f.is_zero():
        return f
    rem = kernels.normal_form_terms(f.terms, _monic_divisors(B, order), order.key)
    return MPoly._raw(f.grid, rem)


def s_polynomial(f: MPoly, g: MPoly, order: MonomialOrder = DEGREVLEX) -> MPoly:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    if f.grid != g.grid:
        raise ValueError("grid mismatch in s_polynomial")
    (mf, cf), (mg, cg) = f.lead(order), g.lead(order)
    L = kernels.mono_lcm(mf, mg)
    return f.shift(kernels.mono_div(L, mf), 1 / cf) - g.shift(kernels.mono_div(L, mg), 1 / cg)


def generic_matrix(grid: VarGrid) -> list[list[MPoly]]:
    return [[MPoly.var(grid, i, j) for j in range(1, grid.n + 1)] for i in range(1, grid.n + 1)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for t in range(k):
                a, b = A[i][t], B[t][j]
                if (isinstance(a, (int, Fraction)) and a == 0) or (
                    isinstance(b, (int, Fraction)) and b == 0
                ):
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]
