"""Irreducible-representation labels of O(n), SO(2m), Sp(2m) and their dimensions."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

Label = tuple[int, ...]

_FAMILIES = ("O", "SO", "Sp")


class UnsupportedGroup(ValueError):
    pass


@dataclass(frozen=True)
class GroupId:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise UnsupportedGroup(f"unknown group family {self.family!r}")
        if self.n < 3:
            raise UnsupportedGroup(f"{self.family}({self.n}): need n >= 3")
        if self.family == "Sp" and self.n % 2:
            raise UnsupportedGroup(f"Sp({self.n}): n must be even")
        if self.family == "SO" and self.n % 2:
            raise UnsupportedGroup(
                f"SO({self.n}) has the same cone as O({self.n}); use O({self.n})"
            )

    @property
    def rank(self) -> int:
        return self.n // 2

    @property
    def dim(self) -> int:
        """Dimension of the group as a variety."""
        if self.family == "Sp":
            return self.n * (self.n + 1) // 2
        return self.n * (self.n - 1) // 2

    @classmethod
    def parse(cls, name: str) -> "GroupId":
        m = re.fullmatch(r"(O|SO|Sp)\(?(\d+)\)?", name.strip())
        if not m:
            raise UnsupportedGroup(f"cannot parse group name {name!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.n}"


def _partitions(d: int, max_parts: int, max_part: int | None = None) -> Iterator[Label]:
    """Partitions of d into at most max_parts parts, lexicographically descending."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, max_parts - 1, first):
            yield (first,) + rest


def _pad(parts: Sequence[int], length: int) -> Label:
    parts = tuple(parts)
    if len(parts) > length:
        if any(parts[length:]):
            raise ValueError(f"label {parts} has more than {length} nonzero parts")
        return parts[:length]
    return parts + (0,) * (length - len(parts))


def conjugate(parts: Sequence[int]) -> Label:
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def _is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def in_labels(G: GroupId, lam: Sequence[int]) -> bool:
    lam = tuple(lam)
    if G.family == "SO":
        m = G.rank
        if len(lam) != m:
            return False
        return _is_partition(lam[:-1] + (abs(lam[-1]),))
    if not _is_partition(lam):
        return False
    rows = sum(1 for p in lam if p > 0)
    if G.family == "Sp":
        return rows <= G.rank
    col = conjugate(lam)
    first = col[0] if col else 0
    second = col[1] if len(col) > 1 else 0
    return rows <= G.n and first + second <= G.n


def enum_labels(G: GroupId, d: int) -> list[Label]:
    """Labels of degree d, lexicographically descending.

    Labels have length n for O(n) and length m for Sp(2m), SO(2m).
    For SO(2m) both signs of a nonzero last part are listed.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if G.family == "O":
        out = [_pad(p, G.n) for p in _partitions(d, G.n) if in_labels(G, p)]
    elif G.family == "Sp":
        out = [_pad(p, G.rank) for p in _partitions(d, G.rank)]
    else:
        out = []
        for p in _partitions(d, G.rank):
            p = _pad(p, G.rank)
            out.append(p)
            if p[-1]:
                out.append(p[:-1] + (-p[-1],))
    return sorted(out, reverse=True)


def label_count(G: GroupId, d: int) -> int:
    return len(enum_labels(G, d))


def associated(lam: Sequence[int], n: int) -> Label:
    """Replace the first column length l of lam by n - l."""
    lam = _pad(lam, n)
    rows = sum(1 for p in lam if p > 0)
    return tuple(
        (1 if i < n - rows else 0) + max(p - 1, 0) for i, p in enumerate(lam)
    )


def _orthogonal_normal_form(G: GroupId, lam: Sequence[int]) -> Label:
    """Equivalent O(n)-label with at most floor(n/2) rows, truncated to rank length."""
    if not in_labels(G, lam):
        raise ValueError(f"{tuple(lam)} is not a label of {G}")
    lam = _pad(lam, G.n)
    if sum(1 for p in lam if p > 0) > G.rank:
        lam = associated(lam, G.n)
    return lam[: G.rank]


def epsilon(G: GroupId, lam: Sequence[int]) -> int:
    """Number of SO(2m)-constituents of the O(2m)-irreducible labeled lam."""
    if G.family != "O" or G.n % 2:
        raise UnsupportedGroup("epsilon is defined for O(n) with n even")
    mu = _orthogonal_normal_form(G, lam)
    return 2 if mu[-1] > 0 else 1


def _rho_and_roots(root_type: str, m: int):
    if root_type == "B":
        rho = [Fraction(2 * (m - i) - 1, 2) for i in range(m)]
    elif root_type == "C":
        rho = [Fraction(m - i) for i in range(m)]
    elif root_type == "D":
        rho = [Fraction(m - 1 - i) for i in range(m)]
    else:
        raise ValueError(f"unknown root system type {root_type!r}")
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            roots.append({i: 1, j: -1})
            roots.append({i: 1, j: 1})
    if root_type == "B":
        roots.extend({i: 1} for i in range(m))
    elif root_type == "C":
        roots.extend({i: 2} for i in range(m))
    return rho, roots


def _is_dominant(root_type: str, lam: Label) -> bool:
    if not lam:
        return True
    if root_type == "D":
        return _is_partition(lam[:-1] + (abs(lam[-1]),))
    return _is_partition(lam)


@lru_cache(maxsize=None)
def _weyl_dim(root_type: str, lam: Label) -> int:
    m = len(lam)
    rho, roots = _rho_and_roots(root_type, m)
    num = Fraction(1)
    for alpha in roots:
        top = sum(c * (lam[i] + rho[i]) for i, c in alpha.items())
        bottom = sum(c * rho[i] for i, c in alpha.items())
        num *= Fraction(top) / bottom
    assert num.denominator == 1 and num > 0
    return int(num)


def weyl_dim(root_type: str, lam: Sequence[int]) -> int:
    """Weyl dimension formula for B_m, C_m, D_m with m = len(lam)."""
    lam = tuple(int(p) for p in lam)
    if root_type not in ("B", "C", "D"):
        raise ValueError(f"unknown root system type {root_type!r}")
    if not _is_dominant(root_type, lam):
        raise ValueError(f"{lam} is not dominant for {root_type}{len(lam)}")
    return _weyl_dim(root_type, lam)


def dim_irrep(G: GroupId, lam: Sequence[int]) -> int:
    lam = tuple(lam)
    if G.family == "Sp":
        if not in_labels(G, _pad(lam, G.rank)):
            raise ValueError(f"{lam} is not a label of {G}")
        return weyl_dim("C", _pad(lam, G.rank))
    if G.family == "SO":
        if not in_labels(G, lam):
            raise ValueError(f"{lam} is not a label of {G}")
        return weyl_dim("D", lam)
    mu = _orthogonal_normal_form(G, lam)
    if G.n % 2:
        return weyl_dim("B", mu)
    d = weyl_dim("D", mu)
    return 2 * d if mu[-1] > 0 else d
