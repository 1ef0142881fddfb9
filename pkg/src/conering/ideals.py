"""Vanishing ideals of cones, exact sample points, and the infinitesimal G x G action."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from . import linalg
from .polyring import MPoly, VarGrid, generic_matrix, mat_mul, transpose


@dataclass(frozen=True)
class FormMatrix:
    """Nondegenerate symmetric or skew bilinear form."""

    entries: tuple[tuple[Fraction, ...], ...]
    kind: str

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("form matrix must be square")
        sgn = {"symmetric": 1, "skew": -1}.get(self.kind)
        if sgn is None:
            raise ValueError(f"unknown form kind {self.kind!r}")
        if any(rows[i][j] != sgn * rows[j][i] for i in range(n) for j in range(n)):
            raise ValueError(f"form matrix is not {self.kind}")
        if linalg.det(rows) == 0:
            raise ValueError("form matrix is singular")

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    @classmethod
    def identity(cls, n: int) -> "FormMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), "symmetric")

    @classmethod
    def beta(cls) -> "FormMatrix":
        """Antidiagonal form on C^3, used for upper-triangular Borel subgroups."""
        return cls(((0, 0, 1), (0, 1, 0), (1, 0, 0)), "symmetric")

    @classmethod
    def standard_J(cls, n: int) -> "FormMatrix":
        if n % 2:
            raise ValueError("symplectic forms need even size")
        rows = [[0] * n for _ in range(n)]
        for k in range(0, n, 2):
            rows[k][k + 1] = 1
            rows[k + 1][k] = -1
        return cls(tuple(map(tuple, rows)), "skew")


def _as_poly(grid: VarGrid, entry) -> MPoly:
    return entry if isinstance(entry, MPoly) else MPoly.const(grid, entry)


def _independent(polys: list[MPoly]) -> list[MPoly]:
    """Greedy subset of polys with linearly independent coefficient vectors."""
    kept: list[MPoly] = []
    for p in polys:
        if p.is_zero():
            continue
        if coefficient_rank(kept + [p]) > len(kept):
            kept.append(p)
    return kept


def coefficient_rank(polys: Sequence[MPoly]) -> int:
    monos = sorted({m for p in polys for m in p.terms})
    return linalg.rank([[p.terms.get(m, 0) for m in monos] for p in polys]) if polys else 0


def _form_conditions(P, F, symmetric: bool) -> tuple[list[MPoly], list[MPoly]]:
    """Polynomials saying the matrix P is proportional to the constant form F.

    Returns (entries at zero positions of F, proportionality differences
    against the first nonzero position of F), over i <= j (i < j when skew).
    """
    n = len(F)
    positions = [(i, j) for i in range(n) for j in range(i if symmetric else i + 1, n)]
    zeros = [P[i][j] for i, j in positions if F[i][j] == 0]
    nonzero = [(i, j) for i, j in positions if F[i][j] != 0]
    i0, j0 = nonzero[0]
    diffs = [P[i0][j0] * F[k][l] - P[k][l] * F[i0][j0] for k, l in nonzero[1:]]
    return zeros, diffs


def _cone_generators(n: int, B: FormMatrix) -> list[MPoly]:
    grid = VarGrid(n)
    X = generic_matrix(grid)
    Bm = B.rows()
    Binv = linalg.inverse(Bm)
    symmetric = B.kind == "symmetric"
    # M^T B M = c B  and  M B^-1 M^T = c B^-1 on the cone
    P = [[_as_poly(grid, e) for e in row] for row in mat_mul(mat_mul(transpose(X), Bm), X)]
    Q = [[_as_poly(grid, e) for e in row] for row in mat_mul(mat_mul(X, Binv), transpose(X))]
    zp, dp = _form_conditions(P, Bm, symmetric)
    zq, dq = _form_conditions(Q, Binv, symmetric)
    return _independent([p.primitive() for p in zp + zq + dp + dq])


def orthogonal_generators(n: int, B: FormMatrix | None = None) -> list[MPoly]:
    """n^2 + n - 2 quadratics generating the ideal of the cone of O(n, B)."""
    B = FormMatrix.identity(n) if B is None else B
    if B.kind != "symmetric" or B.n != n:
        raise ValueError("orthogonal cone needs a symmetric n x n form")
    return _cone_generators(n, B)


def symplectic_generators(n: int, J: FormMatrix | None = None) -> list[MPoly]:
    """Quadratics generating the ideal of the cone of Sp(n, J)."""
    J = FormMatrix.standard_J(n) if J is None else J
    if J.kind != "skew" or J.n != n:
        raise ValueError("symplectic cone needs a skew n x n form")
    return _cone_generators(n, J)


def cone_form(name: str) -> FormMatrix:
    """Form matrix behind a CLI group name such as O3, O3beta, Sp4."""
    from .labels import GroupId

    if name.endswith("beta"):
        if name != "O3beta":
            raise ValueError("the beta form is only defined for O3")
        return FormMatrix.beta()
    G = GroupId.parse(name)
    if G.family == "O":
        return FormMatrix.identity(G.n)
    if G.family == "Sp":
        return FormMatrix.standard_J(G.n)
    raise ValueError(f"no generator set for {name}: the cone of SO(2m) is not covered")


def cone_generators(name: str) -> list[MPoly]:
    B = cone_form(name)
    if B.kind == "symmetric":
        return orthogonal_generators(B.n, B)
    return symplectic_generators(B.n, B)


# -- evaluation


@dataclass(frozen=True)
class Gaussian:
    """Exact element re + im*i of Q(i)."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _lift(x) -> "Gaussian":
        return x if isinstance(x, Gaussian) else Gaussian(Fraction(x))

    def __add__(self, other):
        o = self._lift(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Gaussian(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Gaussian(other)
        if not isinstance(other, Gaussian):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)


I_UNIT = Gaussian(0, 1)


def evaluate(f: MPoly, M: Sequence[Sequence]):
    """f with x_ij replaced by M[i-1][j-1], computed exactly."""
    n = f.grid.n
    if len(M) != n or any(len(r) != n for r in M):
        raise ValueError(f"point must be {n}x{n}")
    return f.evaluate([M[i][j] for i in range(n) for j in range(n)])


def is_form_skew(S, B: FormMatrix) -> bool:
    Bm = B.rows()
    lhs = linalg.add(linalg.matmul(linalg.transpose(S), Bm), linalg.matmul(Bm, S))
    return all(x == 0 for row in lhs for x in row)


def cayley_orthogonal(S, B: FormMatrix) -> list[list[Fraction]]:
    """(I - S)(I + S)^-1, which preserves B whenever S^T B + B S = 0."""
    S = linalg.to_fraction_matrix(S)
    if len(S) != B.n:
        raise ValueError("size mismatch between S and the form")
    if not is_form_skew(S, B):
        raise ValueError("S is not skew with respect to the form")
    n = B.n
    Id = linalg.identity(n)
    plus = linalg.add(Id, S)
    if linalg.det(plus) == 0:
        raise ValueError("I + S is singular")
    return linalg.matmul(linalg.add(Id, S, -1), linalg.inverse(plus))


def random_form_skew(B: FormMatrix, rng: random.Random, bound: int = 3) -> list[list[Fraction]]:
    """Random S with S^T B + B S = 0, as B^-1 K with K (skew-)symmetric integer."""
    n = B.n
    K = [[Fraction(0)] * n for _ in range(n)]
    # K skew for symmetric B, symmetric for skew B
    sgn = -1 if B.kind == "symmetric" else 1
    for i in range(n):
        for j in range(i, n):
            if i == j and sgn == -1:
                continue
            v = Fraction(rng.randint(-bound, bound))
            K[i][j] = v
            K[j][i] = sgn * v
    return linalg.matmul(linalg.inverse(B.rows()), K)


def random_cone_point(B: FormMatrix, rng: random.Random, bound: int = 3):
    """c * M with M in the group of B (Cayley) and a random rational scalar c."""
    while True:
        S = random_form_skew(B, rng, bound)
        try:
            M = cayley_orthogonal(S, B)
        except ValueError:
            continue
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return linalg.scale(M, c)


# -- Lie algebra action


def infinitesimal_action(f: MPoly, u, side: str) -> MPoly:
    """Derivation of f along u for (g, h).M = g M h^-1.

    left:  x_ij -> -(uX)_ij;  right: x_ij -> (Xu)_ij.
    """
    grid = f.grid
    n = grid.n
    u = linalg.to_fraction_matrix(u)
    if len(u) != n:
        raise ValueError("Lie element size does not match the grid")
    X = generic_matrix(grid)
    if side == "left":
        image = [[-_as_poly(grid, e) for e in row] for row in mat_mul(u, X)]
    elif side == "right":
        image = [[_as_poly(grid, e) for e in row] for row in mat_mul(X, u)]
    else:
        raise ValueError("side must be 'left' or 'right'")
    out = MPoly(grid)
    for k in f.variables():
        i, j = grid.position(k)
        img = image[i - 1][j - 1]
        if not img.is_zero():
            out = out + f.diff(k) * img
    return out


def matrix_unit(n: int, i: int, j: int) -> list[list[Fraction]]:
    E = [[Fraction(0)] * n for _ in range(n)]
    E[i - 1][j - 1] = Fraction(1)
    return E


def unipotent_generator_O3beta() -> list[list[Fraction]]:
    """E_12 - E_23, spanning the Lie algebra of U in SO(3, beta)."""
    return linalg.add(matrix_unit(3, 1, 2), matrix_unit(3, 2, 3), -1)


def determinant(X: Sequence[Sequence[MPoly]]) -> MPoly:
    n = len(X)
    grid = X[0][0].grid
    out = MPoly(grid)
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = MPoly.const(grid, -1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * X[i][j]
        out = out + term
    return out


def trace(A) -> MPoly:
    out = A[0][0]
    for i in range(1, len(A)):
        out = out + A[i][i]
    return out


def uxu_candidates_O3beta() -> list[MPoly]:
    """x31, x31 x22 - x21 x32, Tr(X^T beta X beta), det X."""
    grid = VarGrid(3)
    X = generic_matrix(grid)
    beta = FormMatrix.beta().rows()
    x = lambda i, j: MPoly.var(grid, i, j)  # noqa: E731
    tr = trace(mat_mul(mat_mul(mat_mul(transpose(X), beta), X), beta))
    return [x(3, 1), x(3, 1) * x(2, 2) - x(2, 1) * x(3, 2), tr, determinant(X)]
