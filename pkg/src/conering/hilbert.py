"""Graded dimensions of the coordinate ring of the cone of a classical group."""

from __future__ import annotations

from functools import lru_cache

from .labels import GroupId, dim_irrep, enum_labels, epsilon
from .series import IntSeries


@lru_cache(maxsize=None)
def h_G(G: GroupId, d: int) -> int:
    """Sum of dim(V)^2 over the irreducibles labeled in degree d."""
    return sum(dim_irrep(G, lam) ** 2 for lam in enum_labels(G, d))


def cone_dim(G: GroupId, d: int) -> int:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return sum(h_G(G, d - 2 * k) for k in range(d // 2 + 1))


def _partial_sums_step2(values: list[int]) -> IntSeries:
    out = list(values)
    for d in range(2, len(out)):
        out[d] += out[d - 2]
    return IntSeries(tuple(out))


def hilbert_series(G: GroupId, order: int) -> IntSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _partial_sums_step2([h_G(G, d) for d in range(order + 1)])


def _summand_count(G: GroupId, d: int) -> int:
    """Irreducible G0 x G0 summands of the degree-d Peter-Weyl block."""
    labels = enum_labels(G, d)
    if G.family == "O" and G.n % 2 == 0:
        return sum(epsilon(G, lam) ** 2 for lam in labels)
    # O(2m+1) = SO(2m+1) x {+-1}; Sp and SO(2m) are connected
    return len(labels)


def uxu_series(G: GroupId, order: int) -> IntSeries:
    """Hilbert series of the U x U-invariants (U a maximal unipotent subgroup)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return _partial_sums_step2([_summand_count(G, d) for d in range(order + 1)])


# Default denominators (a, b) for closed forms; a is the Krull dimension dim G + 1.
def default_denominator(G: GroupId, kind: str = "hilbert") -> tuple[int, int]:
    if kind == "hilbert":
        return G.dim + 1, 0
    if G.family == "O" and G.n == 3:
        return 1, 1
    return 1, 2
