"""The acceptance checks, runnable from the CLI (``cone verify``) and from pytest.

Each check returns ``(passed, detail)``; ``detail`` names the first mismatch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable

from . import linalg
from .golden import Golden, GoldenError
from .groebner import buchberger, format_basis, format_monomials, leading_ideal, monomial_quotient_hilbert
from .hilbert import cone_dim, h_G, hilbert_series, uxu_series
from .ideals import (
    I_UNIT,
    Gaussian,
    coefficient_rank,
    cone_form,
    cone_generators,
    evaluate,
    infinitesimal_action,
    random_cone_point,
    unipotent_generator_O3beta,
    uxu_candidates_O3beta,
)
from .labels import GroupId
from .polyring import MPoly, normal_form, s_polynomial
from .series import IntSeries, RationalFunction, koszul_obstruction, reconstruct_rational, series_inverse

FOUR = ("O3", "O4", "SO4", "Sp4")
SERIES_ORDER = 30
STAIRCASE_ORDER = 20
KOSZUL_ORDER = 50
CAYLEY_SAMPLES = 200
NONCONE_SAMPLES = 50
SEED = 20240917


@dataclass(frozen=True)
class Check:
    number: int
    name: str
    tags: tuple[str, ...]
    run: Callable[[Golden], tuple[bool, str]]


def _group(name: str) -> GroupId:
    return GroupId.parse(name)


def _first_mismatch(got: IntSeries, want: IntSeries) -> str:
    for d, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return f"t^{d}: got {a}, expected {b}"
    return "length differs"


def check_closed_forms(golden: Golden):
    for name in FOUR:
        rel = f"series/hilbert_{name}.json"
        want = golden.rational(rel)
        got = hilbert_series(_group(name), SERIES_ORDER)
        if got != want.expand(SERIES_ORDER):
            return False, f"{rel}: {_first_mismatch(got, want.expand(SERIES_ORDER))}"
        if reconstruct_rational(got, want.a, want.b) != want:
            return False, f"{rel}: reconstructed numerator differs"
    return True, f"{len(FOUR)} groups, {SERIES_ORDER + 1} coefficients each"


def check_spot_dimensions(golden: Golden):
    spot = golden.json("spot_values.json")
    for name, d, want in spot["h_G"]:
        if h_G(_group(name), d) != want:
            return False, f"h_G({name}, {d}) = {h_G(_group(name), d)}, expected {want}"
    for name, d, want in spot["cone_dim"]:
        if cone_dim(_group(name), d) != want:
            return False, f"cone_dim({name}, {d}) = {cone_dim(_group(name), d)}, expected {want}"
    O3 = _group("O3")
    for d in range(0, 11, 2):
        if cone_dim(O3, d) != comb(2 * d + 3, 3):
            return False, f"cone_dim(O3, {d}) != C({2 * d + 3}, 3)"
    return True, "h_G, cone_dim spot values and C(2d+3,3) for even d <= 10"


def check_koszul(golden: Golden):
    rel = "series/koszul_O3.json"
    want = golden.series(rel)
    H = hilbert_series(_group("O3"), want.order)
    got = series_inverse(H.alternate())
    if got != want:
        return False, f"{rel}: {_first_mismatch(got, want)}"
    obstruction = koszul_obstruction(hilbert_series(_group("O3"), 12))
    if obstruction != (9, -7330):
        return False, f"O3 obstruction {obstruction}, expected (9, -7330)"
    for name in ("O4", "Sp4"):
        inv = series_inverse(hilbert_series(_group(name), KOSZUL_ORDER).alternate())
        bad = [d for d, c in enumerate(inv) if c < 0]
        if bad:
            return False, f"{name}: 1/H(-t) negative at t^{bad[0]}"
    return True, f"O3 obstruction at t^9 (-7330); O4, Sp4 nonnegative through t^{KOSZUL_ORDER}"


def check_uxu(golden: Golden):
    for name in FOUR:
        rel = f"series/uxu_{name}.json"
        want = golden.rational(rel).expand(SERIES_ORDER)
        got = uxu_series(_group(name), SERIES_ORDER)
        if got != want:
            return False, f"{rel}: {_first_mismatch(got, want)}"
    return True, f"{len(FOUR)} U x U series, {SERIES_ORDER + 1} coefficients each"


def _basis_for(name: str):
    return buchberger(cone_generators(name))


def check_groebner_golden(golden: Golden):
    for name, rel in (("O3beta", "groebner/O3beta_degrevlex.txt"), ("Sp4", "groebner/Sp4_degrevlex.txt")):
        want = golden.text(rel)
        got = format_basis(_basis_for(name))
        if got != want:
            got_lines, want_lines = got.splitlines(), want.splitlines()
            for k in range(max(len(got_lines), len(want_lines))):
                a = got_lines[k] if k < len(got_lines) else "<missing>"
                b = want_lines[k] if k < len(want_lines) else "<missing>"
                if a != b:
                    return False, f"{golden.path(rel)} line {k + 1}: got {a!r}, expected {b!r}"
    rel = "groebner/O3beta_leading.txt"
    G = _basis_for("O3beta")
    if format_monomials(G.grid, leading_ideal(G).generators) != golden.text(rel):
        return False, f"{golden.path(rel)}: leading monomials differ"
    return True, "O3beta: 15 elements + 15 leading monomials; Sp4: 12 elements"


def check_two_routes(golden: Golden):
    for name, group in (("O3beta", "O3"), ("Sp4", "Sp4")):
        G = _basis_for(name)
        staircase = monomial_quotient_hilbert(leading_ideal(G), G.grid.nvars, STAIRCASE_ORDER)
        rep = hilbert_series(_group(group), STAIRCASE_ORDER)
        if staircase != rep:
            return False, f"{name}: {_first_mismatch(staircase, rep)}"
    return True, f"staircase = representation theory to order {STAIRCASE_ORDER} for O3, Sp4"


def check_quadratic_counts(golden: Golden):
    spot = golden.json("spot_values.json")
    for name, want in spot["quadratic_relations"]:
        G = _group(name)
        count = comb(G.n * G.n + 1, 2) - cone_dim(G, 2)
        if count != want:
            return False, f"{name}: C(n^2+1,2) - cone_dim = {count}, expected {want}"
        gens = cone_generators(name)
        if len(gens) != want or coefficient_rank(gens) != want:
            return False, f"{name}: {len(gens)} generators of rank {coefficient_rank(gens)}, expected {want}"
    return True, "O3: 10, O4: 18, Sp4: 10 (counts and exact ranks)"


def check_recursion(golden: Golden):
    for name in FOUR:
        G = _group(name)
        for d in range(2, SERIES_ORDER + 1):
            if cone_dim(G, d) - cone_dim(G, d - 2) != h_G(G, d):
                return False, f"{name}, d={d}"
    return True, f"2 <= d <= {SERIES_ORDER}, four groups"


def _candidate_products(cands: list[MPoly], d: int) -> list[MPoly]:
    degs = [c.degree() for c in cands]
    out = []

    def walk(k, left, acc):
        if k == len(cands):
            if left == 0:
                out.append(acc)
            return
        e = 0
        while e * degs[k] <= left:
            walk(k + 1, left - e * degs[k], acc * cands[k] ** e)
            e += 1

    walk(0, d, MPoly.const(cands[0].grid, 1))
    return out


def check_invariants(golden: Golden):
    cands = uxu_candidates_O3beta()
    u = unipotent_generator_O3beta()
    for k, f in enumerate(cands):
        for side in ("left", "right"):
            if not infinitesimal_action(f, u, side).is_zero():
                return False, f"candidate {k} not annihilated on the {side}"
    GB = _basis_for("O3beta")
    uxu = uxu_series(_group("O3"), 3)
    for d in (1, 2, 3):
        prods = _candidate_products(cands, d)
        images = [normal_form(p, GB.elements, GB.order) for p in prods]
        r = coefficient_rank(images)
        if len(prods) != uxu[d] or r != uxu[d]:
            return False, f"degree {d}: {len(prods)} products of rank {r}, expected {uxu[d]}"
    return True, "4 candidates annihilated both sides; product counts 1, 3, 4 independent mod the ideal"


def _proportional(A, F) -> bool:
    """A = c F for some scalar c."""
    n = len(F)
    i0, j0 = next((i, j) for i in range(n) for j in range(n) if F[i][j] != 0)
    c = A[i0][j0] / F[i0][j0]
    return all(A[i][j] == c * F[i][j] for i in range(n) for j in range(n))


def check_membership(golden: Golden):
    rng = random.Random(SEED)
    for name in ("O3", "O3beta", "O4", "Sp4"):
        B = cone_form(name)
        gens = cone_generators(name)
        for _ in range(CAYLEY_SAMPLES):
            P = random_cone_point(B, rng)
            for g in gens:
                if evaluate(g, P) != 0:
                    return False, f"{name}: generator {g.to_text()} nonzero at a cone point"
        Bm = B.rows()
        Binv = linalg.inverse(Bm)
        separated = 0
        while separated < NONCONE_SAMPLES:
            M = [[Fraction(rng.randint(-4, 4)) for _ in range(B.n)] for _ in range(B.n)]
            MT = linalg.transpose(M)
            if _proportional(linalg.matmul(linalg.matmul(MT, Bm), M), Bm) and _proportional(
                linalg.matmul(linalg.matmul(M, Binv), MT), Binv
            ):
                continue  # on the cone (decided by matrix algebra)
            if all(evaluate(g, M) == 0 for g in gens):
                return False, f"{name}: non-cone matrix {M} not separated"
            separated += 1
    A = [[Gaussian(1), I_UNIT, Gaussian(0)], [-I_UNIT, Gaussian(1), Gaussian(0)], [Gaussian(0)] * 3]
    for g in cone_generators("O3"):
        if evaluate(g, A) != 0:
            return False, f"Example matrix A: {g.to_text()} does not vanish"
    return True, (
        f"{CAYLEY_SAMPLES} Cayley points x 4 forms vanish; {NONCONE_SAMPLES} non-cone matrices x 4 "
        "separated; Example A vanishes"
    )


def check_certificates(golden: Golden):
    for name, rel in (("O3beta", "groebner/O3beta_degrevlex.txt"), ("Sp4", "groebner/Sp4_degrevlex.txt")):
        G = golden.basis(rel)
        els = list(G.elements)
        for f, g in combinations(els, 2):
            if not normal_form(s_polynomial(f, g, G.order), els, G.order).is_zero():
                return False, f"{golden.path(rel)}: S({f.to_text()}, {g.to_text()}) does not reduce to 0"
        for g in cone_generators(name):
            if not normal_form(g, els, G.order).is_zero():
                return False, f"{golden.path(rel)}: generator {g.to_text()} does not reduce to 0"
    return True, "all S-pairs and all generators reduce to 0 for both golden bases"


def check_decomposition(golden: Golden):
    rel = "series/O3_standard_decomposition.json"
    data = golden.json(rel)
    try:
        parts = [RationalFunction.from_json(t).expand(SERIES_ORDER) for t in data["terms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GoldenError(golden.path(rel), f"bad decomposition ({exc})") from None
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    want = hilbert_series(_group("O3"), SERIES_ORDER)
    if total != want:
        return False, f"{rel}: {_first_mismatch(total, want)}"
    return True, f"four-term sum equals the O3 Hilbert series to order {SERIES_ORDER}"


CHECKS: tuple[Check, ...] = (
    Check(1, "hilbert closed forms", ("hilbert",), check_closed_forms),
    Check(2, "spot dimensions", ("hilbert", "partitions"), check_spot_dimensions),
    Check(3, "koszul obstruction", ("hilbert",), check_koszul),
    Check(4, "uxu series", ("hilbert",), check_uxu),
    Check(5, "groebner golden files", ("groebner", "polyring"), check_groebner_golden),
    Check(6, "two-route hilbert series", ("groebner", "hilbert"), check_two_routes),
    Check(7, "quadratic relation counts", ("ideals", "hilbert"), check_quadratic_counts),
    Check(8, "degree recursion", ("hilbert",), check_recursion),
    Check(9, "uxu invariants", ("ideals",), check_invariants),
    Check(10, "cone membership", ("ideals",), check_membership),
    Check(11, "buchberger certificates", ("groebner", "polyring"), check_certificates),
    Check(12, "standard monomial decomposition", ("hilbert", "groebner"), check_decomposition),
)


def select(only: list[str] | None) -> list[Check]:
    if not only:
        return list(CHECKS)
    wanted = set(only)
    out = [c for c in CHECKS if str(c.number) in wanted or wanted & set(c.tags)]
    if not out:
        raise ValueError(f"no acceptance item matches {sorted(wanted)}")
    return out


def run_check(check: Check, golden: Golden) -> dict:
    try:
        passed, detail = check.run(golden)
    except GoldenError as exc:
        passed, detail = False, str(exc)
    return {"item": check.number, "name": check.name, "passed": bool(passed), "detail": detail}


def verify_all(only: list[str] | None = None, golden_dir=None) -> dict:
    golden = Golden(golden_dir)
    results = [run_check(c, golden) for c in select(only)]
    return {"passed": all(r["passed"] for r in results), "items": results}
