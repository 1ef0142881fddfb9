"""Truncated integer power series and rational functions with (1-t)^a (1-t^2)^b denominators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class SeriesError(ValueError):
    pass


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (0,)


def poly_mul(a: Sequence[int], b: Sequence[int], order: int | None = None) -> list[int]:
    size = len(a) + len(b) - 1
    if order is not None:
        size = min(size, order + 1)
    out = [0] * size
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j, y in enumerate(b[: size - i]):
            out[i + j] += x * y
    return out


def poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _times_one_minus(coeffs: list[int], step: int, order: int) -> list[int]:
    """Multiply by (1 - t^step), truncating at order."""
    out = coeffs + [0] * (order + 1 - len(coeffs))
    return [out[i] - (out[i - step] if i >= step else 0) for i in range(order + 1)]


def _divide_one_minus(coeffs: list[int], step: int, order: int) -> list[int]:
    """Multiply by 1/(1 - t^step), truncating at order."""
    out = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
    for i in range(step, order + 1):
        out[i] += out[i - step]
    return out


@dataclass(frozen=True)
class IntSeries:
    """c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least one coefficient")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise SeriesError("series coefficients must be integers")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, d):
        return self.coeffs[d]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return IntSeries(self.coeffs[: order + 1])

    def __add__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        return IntSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return self + (-other)

    def __neg__(self) -> "IntSeries":
        return IntSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "IntSeries":
        if isinstance(other, int):
            return IntSeries(tuple(other * c for c in self.coeffs))
        n = min(self.order, other.order)
        return IntSeries(tuple(poly_mul(self.coeffs, other.coeffs, n)))

    __rmul__ = __mul__

    def alternate(self) -> "IntSeries":
        """Substitute t -> -t."""
        return IntSeries(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "IntSeries":
        coeffs = tuple(int(c) for c in data["coeffs"])
        if len(coeffs) != int(data["order"]) + 1:
            raise SeriesError("order does not match the number of coefficients")
        return cls(coeffs)


@dataclass(frozen=True)
class RationalFunction:
    """numerator(t) / ((1-t)^a (1-t^2)^b) with an integer numerator."""

    numerator: tuple[int, ...]
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise SeriesError("denominator exponents must be nonnegative")
        object.__setattr__(self, "numerator", _trim(int(c) for c in self.numerator))

    def expand(self, order: int) -> IntSeries:
        coeffs = list(self.numerator[: order + 1])
        for _ in range(self.a):
            coeffs = _divide_one_minus(coeffs, 1, order)
        for _ in range(self.b):
            coeffs = _divide_one_minus(coeffs, 2, order)
        coeffs += [0] * (order + 1 - len(coeffs))
        return IntSeries(tuple(coeffs))

    def numerator_text(self) -> str:
        return format_polynomial(self.numerator)

    def denominator_text(self) -> str:
        parts = []
        if self.a:
            parts.append("(1-t)" if self.a == 1 else f"(1-t)^{self.a}")
        if self.b:
            parts.append("(1-t^2)" if self.b == 1 else f"(1-t^2)^{self.b}")
        return "".join(parts) or "1"

    def __str__(self) -> str:
        return f"({self.numerator_text()})/{self.denominator_text()}"

    def to_json(self) -> dict:
        return {"numerator": [str(c) for c in self.numerator], "a": self.a, "b": self.b}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(tuple(int(c) for c in data["numerator"]), int(data["a"]), int(data["b"]))


def format_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    """Ascending-degree text such as ``1+5t+5t^2-6t^3``."""
    out = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        mag = abs(c)
        body = str(mag) if (mono == "" or mag != 1) else ""
        body += mono
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(sign + body)
    return "".join(out) or "0"


def series_inverse(s: IntSeries) -> IntSeries:
    """1/s to the same truncation order; the constant term must be 1 or -1."""
    a = s.coeffs
    if a[0] not in (1, -1):
        raise SeriesError(f"constant term {a[0]} is not a unit in Z[[t]]")
    u = a[0]
    inv = [u]
    for k in range(1, len(a)):
        acc = 0
        for i in range(1, k + 1):
            if a[i]:
                acc += a[i] * inv[k - i]
        inv.append(-u * acc)
    return IntSeries(tuple(inv))


def koszul_obstruction(s: IntSeries) -> tuple[int, int] | None:
    """First (degree, coefficient) where 1/s(-t) goes negative, or None.

    A returned pair rules out the Koszul property; None proves nothing.
    """
    if s.coeffs[0] != 1:
        raise SeriesError("a Hilbert series has constant term 1")
    inv = series_inverse(s.alternate())
    for d, c in enumerate(inv.coeffs):
        if c < 0:
            return d, c
    return None


def guard_degree(a: int, b: int) -> int:
    """Largest numerator degree accepted by reconstruct_rational for exponents (a, b)."""
    return a + 2 * b + 5


def reconstruct_rational(s: IntSeries, a: int, b: int = 0) -> RationalFunction:
    """Multiply s by (1-t)^a (1-t^2)^b and require the product to be a polynomial.

    Every coefficient above ``guard_degree(a, b)`` must vanish and at least two
    such coefficients must be available.
    """
    bound = guard_degree(a, b)
    if s.order < bound + 2:
        raise SeriesError(
            f"series of order {s.order} is too short: need order >= {bound + 2} "
            f"to test a numerator of degree <= {bound}"
        )
    coeffs = list(s.coeffs)
    for _ in range(a):
        coeffs = _times_one_minus(coeffs, 1, s.order)
    for _ in range(b):
        coeffs = _times_one_minus(coeffs, 2, s.order)
    tail = coeffs[bound + 1 :]
    if any(tail):
        first = bound + 1 + next(i for i, c in enumerate(tail) if c)
        raise SeriesError(
            f"does not terminate: coefficient of t^{first} is nonzero "
            f"for denominator (1-t)^{a}(1-t^2)^{b}"
        )
    rf = RationalFunction(tuple(coeffs[: bound + 1]), a, b)
    assert rf.expand(s.order) == s
    return rf


def find_rational(s: IntSeries, b: int = 0, max_a: int | None = None) -> RationalFunction:
    """Smallest a for which reconstruct_rational(s, a, b) succeeds."""
    if max_a is None:
        max_a = s.order - 2 * b - 7
    for a in range(0, max_a + 1):
        try:
            return reconstruct_rational(s, a, b)
        except SeriesError:
            continue
    raise SeriesError(f"no rational form with (1-t^2)^{b} and a <= {max_a}")
