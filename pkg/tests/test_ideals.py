import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conering import linalg
from conering.golden import Golden
from conering.groebner import buchberger
from conering.hilbert import cone_dim, uxu_series
from conering.ideals import (
    I_UNIT,
    FormMatrix,
    Gaussian,
    cayley_orthogonal,
    coefficient_rank,
    cone_form,
    cone_generators,
    evaluate,
    infinitesimal_action,
    matrix_unit,
    orthogonal_generators,
    random_cone_point,
    random_form_skew,
    symplectic_generators,
    unipotent_generator_O3beta,
    uxu_candidates_O3beta,
)
from conering.labels import GroupId
from conering.polyring import MPoly, VarGrid, generic_matrix, mat_mul, transpose

NAMES = ["O3", "O3beta", "O4", "Sp4"]


def test_counts_and_ranks():
    assert len(orthogonal_generators(3)) == 10
    assert len(orthogonal_generators(4)) == 18
    assert len(orthogonal_generators(3, FormMatrix.beta())) == 10
    assert len(symplectic_generators(4)) == 10
    for name, n in (("O3", 3), ("O4", 4)):
        assert coefficient_rank(cone_generators(name)) == n * n + n - 2
    assert coefficient_rank(cone_generators("Sp4")) == 10


def test_counts_match_dimension_count():
    from math import comb

    for name in ("O3", "O4", "Sp4"):
        G = GroupId.parse(name)
        assert coefficient_rank(cone_generators(name)) == comb(G.n**2 + 1, 2) - cone_dim(G, 2)


@pytest.mark.parametrize("name", NAMES)
def test_homogeneous_quadrics(name):
    rng = random.Random(11)
    B = cone_form(name)
    for g in cone_generators(name):
        assert g.is_homogeneous() and g.degree() == 2
    M = [[Fraction(rng.randint(-5, 5)) for _ in range(B.n)] for _ in range(B.n)]
    c = Fraction(-7, 3)
    cM = linalg.scale(M, c)
    for g in cone_generators(name):
        assert evaluate(g, cM) == c**2 * evaluate(g, M)


@pytest.mark.parametrize("name", NAMES)
def test_identity_is_on_the_cone(name):
    B = cone_form(name)
    assert all(evaluate(g, linalg.identity(B.n)) == 0 for g in cone_generators(name))


@pytest.mark.parametrize("name", NAMES)
def test_cayley_points_vanish(name):
    rng = random.Random(name)
    B = cone_form(name)
    gens = cone_generators(name)
    for _ in range(30):
        P = random_cone_point(B, rng)
        assert all(evaluate(g, P) == 0 for g in gens)


def test_cayley_transform():
    B = FormMatrix.beta()
    assert cayley_orthogonal([[0] * 3 for _ in range(3)], B) == linalg.identity(3)
    rng = random.Random(2)
    for F in (FormMatrix.identity(3), B, FormMatrix.standard_J(4)):
        for _ in range(10):
            S = random_form_skew(F, rng)
            try:
                M = cayley_orthogonal(S, F)
            except ValueError:
                continue
            Bm = F.rows()
            assert linalg.matmul(linalg.matmul(linalg.transpose(M), Bm), M) == Bm
    with pytest.raises(ValueError, match="not skew"):
        cayley_orthogonal([[1, 0, 0], [0, 0, 0], [0, 0, 0]], FormMatrix.identity(3))


def test_example_matrix_over_gaussian_rationals():
    zero = Gaussian(0)
    A = [[Gaussian(1), I_UNIT, zero], [-I_UNIT, Gaussian(1), zero], [zero, zero, zero]]
    for g in cone_generators("O3"):
        v = evaluate(g, A)
        assert v.re == 0 and v.im == 0
    # and it is not the zero matrix, so something nontrivial is being tested
    assert any(a != 0 for row in A for a in row)


def test_diagonal_non_cone_point():
    grid = VarGrid(3)
    X = generic_matrix(grid)
    XtX = mat_mul(transpose(X), X)
    M = [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert evaluate(XtX[0][1], M) == 0
    assert evaluate(XtX[0][0] - XtX[1][1], M) == -3
    assert any(evaluate(g, M) != 0 for g in cone_generators("O3"))


def _on_cone(M, F) -> bool:
    Fm = F.rows()
    Finv = linalg.inverse(Fm)
    MT = linalg.transpose(M)

    def proportional(A, R):
        i, j = next((i, j) for i in range(F.n) for j in range(F.n) if R[i][j])
        c = A[i][j] / R[i][j]
        return all(A[p][q] == c * R[p][q] for p in range(F.n) for q in range(F.n))

    return proportional(linalg.matmul(linalg.matmul(MT, Fm), M), Fm) and proportional(
        linalg.matmul(linalg.matmul(M, Finv), MT), Finv
    )


@pytest.mark.parametrize("name", NAMES)
def test_separation(name):
    rng = random.Random(f"sep-{name}")
    B = cone_form(name)
    gens = cone_generators(name)
    seen = 0
    while seen < 50:
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(B.n)] for _ in range(B.n)]
        if _on_cone(M, B):
            assert all(evaluate(g, M) == 0 for g in gens)
            continue
        assert any(evaluate(g, M) != 0 for g in gens)
        seen += 1


def test_quadratics_match_golden_after_normalization():
    golden = Golden()
    for name, rel in (("Sp4", "groebner/Sp4_degrevlex.txt"), ("O3beta", "groebner/O3beta_degrevlex.txt")):
        gens = cone_generators(name)
        golden_quadrics = [g for g in golden.basis(rel) if g.degree() == 2]
        assert coefficient_rank(gens + golden_quadrics) == coefficient_rank(gens) == len(golden_quadrics)
        ours = {g.primitive() for g in buchberger(gens) if g.degree() == 2}
        assert ours == {g.primitive() for g in golden_quadrics}


def test_form_validation():
    with pytest.raises(ValueError):
        FormMatrix([[1, 2], [3, 4]], "symmetric")
    with pytest.raises(ValueError):
        FormMatrix([[1, 0], [0, 0]], "symmetric")
    with pytest.raises(ValueError):
        FormMatrix([[0, 1], [1, 0]], "skew")
    with pytest.raises(ValueError):
        symplectic_generators(4, FormMatrix.identity(4))
    with pytest.raises(ValueError):
        cone_generators("SO4")
    with pytest.raises(ValueError):
        cone_form("O4beta")


def test_beta_is_antidiagonal():
    beta = FormMatrix.beta().rows()
    assert beta == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_uxu_candidates():
    cands = uxu_candidates_O3beta()
    assert [c.degree() for c in cands] == [1, 2, 2, 3]
    u = unipotent_generator_O3beta()
    for c in cands:
        assert infinitesimal_action(c, u, "left").is_zero()
        assert infinitesimal_action(c, u, "right").is_zero()
    # a non-invariant for contrast
    x11 = MPoly.var(VarGrid(3), 1, 1)
    assert not infinitesimal_action(x11, u, "left").is_zero()
    assert uxu_series(GroupId.parse("O3"), 3)[1:] == (1, 3, 4)


def test_infinitesimal_action_is_derivation():
    g = VarGrid(3)
    u = matrix_unit(3, 1, 2)
    f, h = MPoly.var(g, 2, 1) ** 2, MPoly.var(g, 1, 3) + MPoly.var(g, 2, 2)
    for side in ("left", "right"):
        lhs = infinitesimal_action(f * h, u, side)
        rhs = infinitesimal_action(f, u, side) * h + f * infinitesimal_action(h, u, side)
        assert lhs == rhs
    with pytest.raises(ValueError):
        infinitesimal_action(f, u, "middle")


GRID3 = VarGrid(3)
small_polys = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 9), st.integers(-3, 3).filter(bool), max_size=4).map(
    lambda d: MPoly(GRID3, d)
)


@given(small_polys, st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_left_right_actions_commute(f, i, j, k, l):
    u, v = matrix_unit(3, i, j), matrix_unit(3, k, l)
    lr = infinitesimal_action(infinitesimal_action(f, u, "left"), v, "right")
    rl = infinitesimal_action(infinitesimal_action(f, v, "right"), u, "left")
    assert lr == rl


def test_gaussian_arithmetic():
    i = I_UNIT
    assert i * i == Gaussian(-1)
    assert (Gaussian(1) + i) * (Gaussian(1) - i) == Gaussian(2)
    assert Gaussian(Fraction(1, 2)) == Fraction(1, 2)
