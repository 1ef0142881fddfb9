"""Buchberger's algorithm, leading-term ideals and Hilbert series of monomial quotients."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from . import kernels
from .polyring import (
    DEGREVLEX,
    MPoly,
    Monomial,
    MonomialOrder,
    VarGrid,
    _monic_divisors,
    format_monomial,
    normal_form,
    parse_poly,
    s_polynomial,
)
from .series import IntSeries, RationalFunction


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[MPoly, ...]
    order: MonomialOrder = DEGREVLEX

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def grid(self) -> VarGrid:
        return self.elements[0].grid

    def leading_monomials(self) -> list[Monomial]:
        return [g.lm(self.order) for g in self.elements]

    def reduce(self, f: MPoly) -> MPoly:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: MPoly) -> bool:
        return self.reduce(f).is_zero()


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Monomial, ...]
    nvars: int

    @classmethod
    def from_monomials(cls, monomials, nvars: int) -> "MonomialIdeal":
        return cls(tuple(kernels.minimalize([tuple(m) for m in monomials])), nvars)

    def contains(self, m: Monomial) -> bool:
        return any(kernels.divides(g, m) for g in self.generators)


def _interreduce(polys: list[MPoly], order: MonomialOrder) -> list[MPoly]:
    """Reduced basis of the ideal spanned by a Groebner basis ``polys``."""
    polys = [p.monic(order) for p in polys if not p.is_zero()]
    # drop elements whose leading monomial is divisible by another's
    keep: list[MPoly] = []
    lms = [p.lm(order) for p in polys]
    for i, p in enumerate(polys):
        redundant = False
        for j, q in enumerate(polys):
            if i == j:
                continue
            if kernels.divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(p)
    out = []
    for i, p in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        lm = p.lm(order)
        head = MPoly(p.grid, {lm: 1})
        tail = normal_form(p - head, others, order)
        out.append(head + tail)
    return out


def buchberger(gens: Sequence[MPoly], order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis, elements ascending by leading monomial.

    Pairs are selected by the normal strategy (smallest lcm first) and pruned
    with the coprime and chain criteria. Elements are presented with integer
    coefficients of content 1 and positive leading coefficient.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis((), order)
    grid = gens[0].grid
    if any(g.grid != grid for g in gens):
        raise ValueError("generators live on different grids")

    basis: list[MPoly] = []
    lms: list[Monomial] = []
    divisors: list = []  # (lead, monic tail) pairs for the division kernel
    pairs: set[tuple[int, int]] = set()
    queue: list = []  # heap of (normal strategy key, pair)

    def reduce(f: MPoly) -> MPoly:
        if not divisors or f.is_zero():
            return f
        return MPoly._raw(grid, kernels.normal_form_terms(f.terms, divisors, order.key))

    def add(p: MPoly):
        p = p.monic(order)
        basis.append(p)
        lm = p.lm(order)
        lms.append(lm)
        divisors.extend(_monic_divisors([p], order))
        k = len(basis) - 1
        for i in range(k):
            L = kernels.mono_lcm(lms[i], lm)
            pairs.add((i, k))
            heapq.heappush(queue, (sum(L), order.key(L), (i, k)))

    for g in gens:
        r = reduce(g)
        if not r.is_zero():
            add(r)

    while queue:
        i, j = heapq.heappop(queue)[2]
        pairs.discard((i, j))
        a, b = lms[i], lms[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials
        L = kernels.mono_lcm(a, b)
        chain = False
        for k in range(len(basis)):
            if k in (i, j) or not kernels.divides(lms[k], L):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        r = reduce(s_polynomial(basis[i], basis[j], order))
        if not r.is_zero():
            add(r)

    reduced = _interreduce(basis, order)
    reduced = [p.primitive(order) for p in reduced]
    reduced.sort(key=lambda p: order.key(p.lm(order)))
    return GroebnerBasis(tuple(reduced), order)


def is_groebner(elements: Sequence[MPoly], order: MonomialOrder = DEGREVLEX) -> bool:
    """Buchberger's criterion: every pairwise S-polynomial reduces to zero."""
    els = list(elements)
    for f, g in combinations(els, 2):
        if not normal_form(s_polynomial(f, g, order), els, order).is_zero():
            return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    lms = G.leading_monomials()
    for i, g in enumerate(G.elements):
        if g.lead(G.order)[1] != 1:
            return False
        for j, m in enumerate(lms):
            if i != j and any(kernels.divides(m, t) for t in g.terms):
                return False
    return True


def leading_ideal(G: GroebnerBasis) -> MonomialIdeal:
    """Leading monomials of a reduced basis, kept in the basis order (ascending)."""
    if not G.elements:
        return MonomialIdeal((), 0)
    lms = G.leading_monomials()
    for i, a in enumerate(lms):
        if any(i != j and kernels.divides(b, a) for j, b in enumerate(lms)):
            raise ValueError("basis is not reduced: leading monomials are not an antichain")
    return MonomialIdeal(tuple(lms), G.grid.nvars)


def monomial_quotient_hilbert(I: MonomialIdeal | Sequence[Monomial], nvars: int, order: int) -> IntSeries:
    """Hilbert series of k[x_1..x_nvars]/I to the given truncation order."""
    gens = I.generators if isinstance(I, MonomialIdeal) else [tuple(m) for m in I]
    num = kernels.hilbert_numerator(list(gens), nvars)
    return RationalFunction(tuple(num), nvars, 0).expand(order)


def monomials_of_degree(nvars: int, d: int):
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for k in combo:
            exps[k] += 1
        yield tuple(exps)


def standard_monomials(G: GroebnerBasis, d: int) -> list[Monomial]:
    """Degree-d monomials outside the leading ideal, descending in G's order."""
    I = leading_ideal(G)
    out = [m for m in monomials_of_degree(G.grid.nvars, d) if not I.contains(m)]
    out.sort(key=G.order.key, reverse=True)
    return out


# -- basis files


def basis_header(grid: VarGrid, order: MonomialOrder) -> str:
    vars_ = "row-major" if order.var_priority is None else "custom"
    return f"# order={order.kind} vars={vars_} n={grid.n}"


def format_basis(G: GroebnerBasis) -> str:
    """Header line, then one polynomial per line, descending by leading monomial."""
    lines = [basis_header(G.grid, G.order)]
    lines += [g.to_text(G.order) for g in reversed(G.elements)]
    return "\n".join(lines) + "\n"


def format_monomials(grid: VarGrid, monomials: Sequence[Monomial]) -> str:
    return "".join(format_monomial(grid, m) + "\n" for m in monomials)


def parse_basis(text: str) -> GroebnerBasis:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("basis file is missing its header line")
    fields = dict(kv.split("=", 1) for kv in lines[0][1:].split())
    if fields.get("vars", "row-major") != "row-major":
        raise ValueError("only row-major variable order is supported in basis files")
    grid = VarGrid(int(fields["n"]))
    order = MonomialOrder(fields.get("order", "degrevlex"))
    polys = [parse_poly(ln, grid) for ln in lines[1:]]
    polys.sort(key=lambda p: order.key(p.lm(order)))
    return GroebnerBasis(tuple(polys), order)
