"""``cone``: command-line front end."""

from __future__ import annotations

import argparse
import json
import sys

from .golden import GoldenError
from .groebner import buchberger, format_basis
from .hilbert import cone_dim, default_denominator, h_G, hilbert_series, uxu_series
from .ideals import cone_generators
from .labels import GroupId, UnsupportedGroup, dim_irrep, enum_labels, epsilon
from .polyring import ORDER_KINDS, MonomialOrder
from .series import SeriesError, find_rational, koszul_obstruction, reconstruct_rational

GROEBNER_GROUPS = ("O3", "O3beta", "O4", "Sp4")

# closed forms are fitted on a longer expansion than the one printed
_FIT_EXTRA = 40


class UsageError(Exception):
    pass


def _group(name: str) -> GroupId:
    try:
        return GroupId.parse(name)
    except UnsupportedGroup as exc:
        raise UsageError(str(exc)) from None


def _denominator(text: str | None, fallback: tuple[int, int]) -> tuple[int, int] | None:
    if text is None:
        return fallback
    if text == "auto":
        return None
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"--denominator expects a[,b], got {text!r}") from None
    if len(parts) not in (1, 2) or min(parts) < 0:
        raise UsageError(f"--denominator expects a[,b] with a, b >= 0, got {text!r}")
    return (parts[0], parts[1] if len(parts) == 2 else 0)


def _series_output(args, series_fn, kind: str) -> tuple[str, dict]:
    G = _group(args.group)
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    s = series_fn(G, args.terms - 1)
    data = {"group": str(G), "series": s.to_json()}
    lines = [f"group: {G}", "coefficients: " + " ".join(str(c) for c in s)]
    if args.closed_form:
        fallback = default_denominator(G, kind)
        den = _denominator(args.denominator, fallback)
        long = series_fn(G, args.terms + _FIT_EXTRA)
        try:
            if den is None:
                rf = find_rational(long, b=fallback[1])
            else:
                rf = reconstruct_rational(long, *den)
        except SeriesError as exc:
            raise RuntimeError(f"no closed form: {exc}") from None
        data["closed_form"] = rf.to_json()
        lines += [f"numerator: {rf.numerator_text()}", f"denominator: {rf.denominator_text()}"]
    return "\n".join(lines), data


def cmd_hilbert(args):
    return _series_output(args, hilbert_series, "hilbert")


def cmd_uxu(args):
    return _series_output(args, uxu_series, "uxu")


def cmd_koszul(args):
    G = _group(args.group)
    if args.max < 0:
        raise UsageError("--max must be nonnegative")
    s = hilbert_series(G, args.max)
    found = koszul_obstruction(s)
    data = {"group": str(G), "max": args.max, "obstruction": None}
    if found is None:
        text = f"no obstruction through t^{args.max}"
    else:
        d, c = found
        data["obstruction"] = {"degree": d, "coefficient": str(c)}
        text = f"obstruction at t^{d}, coefficient {c}"
    return text, data


def cmd_dims(args):
    G = _group(args.group)
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    rows = [(d, h_G(G, d), cone_dim(G, d)) for d in range(args.degree + 1)]
    text = "\n".join(["d h_G cone_dim"] + [f"{d} {h} {c}" for d, h, c in rows])
    data = {"group": str(G), "rows": [{"d": d, "h_G": str(h), "cone_dim": str(c)} for d, h, c in rows]}
    return text, data


def cmd_labels(args):
    G = _group(args.group)
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    labels = enum_labels(G, args.degree)
    rows = []
    for lam in labels:
        row = {"label": list(lam), "dim": str(dim_irrep(G, lam))}
        if G.family == "O" and G.n % 2 == 0:
            row["epsilon"] = epsilon(G, lam)
        rows.append(row)
    text = "\n".join(
        "(" + ",".join(map(str, r["label"])) + f") dim={r['dim']}" + (f" eps={r['epsilon']}" if "epsilon" in r else "")
        for r in rows
    )
    return text, {"group": str(G), "degree": args.degree, "labels": rows}


def _groebner_group(name: str) -> str:
    if name not in GROEBNER_GROUPS:
        if name.startswith("SO"):
            raise UsageError(f"{name}: SO(2m) has the same ideal as O(2m) in these coordinates; use O{name[2:]}")
        raise UsageError(f"--group must be one of {', '.join(GROEBNER_GROUPS)}")
    return name


def cmd_generators(args):
    name = _groebner_group(args.group)
    gens = cone_generators(name)
    text = "\n".join(g.to_text() for g in gens)
    return text, {"group": name, "generators": [g.to_text() for g in gens]}


def cmd_groebner(args):
    name = _groebner_group(args.group)
    if args.var_order != "row-major":
        raise UsageError("only --var-order row-major is supported")
    G = buchberger(cone_generators(name), MonomialOrder(args.order))
    text = format_basis(G)
    data = {
        "group": name,
        "order": args.order,
        "var_order": args.var_order,
        "basis": [g.to_text(G.order) for g in reversed(G.elements)],
    }
    return text.rstrip("\n"), data


def cmd_verify(args):
    from .verify import verify_all

    only = [s for part in (args.only or []) for s in part.split(",") if s]
    try:
        report = verify_all(only or None, args.golden_dir)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"[{'PASS' if r['passed'] else 'FAIL'}] {r['item']:2d} {r['name']}: {r['detail']}" for r in report["items"]]
    failed = [r for r in report["items"] if not r["passed"]]
    if failed:
        lines.append(f"first failure: item {failed[0]['item']} ({failed[0]['detail']})")
    return "\n".join(lines), report


COMMANDS = {
    "hilbert": cmd_hilbert,
    "uxu": cmd_uxu,
    "koszul": cmd_koszul,
    "dims": cmd_dims,
    "labels": cmd_labels,
    "generators": cmd_generators,
    "groebner": cmd_groebner,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cone", description="Exact invariants of cones over classical groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def group_cmd(name, help_, default="O3"):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("--group", default=default)
        return p

    for name, help_ in (("hilbert", "graded dimensions of the coordinate ring"), ("uxu", "U x U-invariant series")):
        p = group_cmd(name, help_)
        p.add_argument("--terms", type=int, default=10, help="number of coefficients to print")
        p.add_argument("--closed-form", action="store_true")
        p.add_argument("--denominator", help="a[,b] for (1-t)^a (1-t^2)^b, or 'auto'")

    p = group_cmd("koszul", "first negative coefficient of 1/H(-t)")
    p.add_argument("--max", type=int, default=12)

    p = group_cmd("dims", "h_G(d) and cone_dim(d) for d up to --degree")
    p.add_argument("--degree", type=int, default=6)

    p = group_cmd("labels", "irreducible labels of a given degree with their dimensions")
    p.add_argument("--degree", type=int, default=2)

    group_cmd("generators", "quadratic generators of the vanishing ideal")

    p = group_cmd("groebner", "reduced Groebner basis", default="O3beta")
    p.add_argument("--order", choices=ORDER_KINDS, default="degrevlex")
    p.add_argument("--var-order", default="row-major")

    p = sub.add_parser("verify", help="run the acceptance checks", parents=[common])
    p.add_argument("--only", action="append", help="item number or tag (hilbert, groebner, ideals, ...)")
    p.add_argument("--golden-dir", help="use golden files from this directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, data = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cone {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, GoldenError) as exc:
        print(f"cone {args.command}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)
    if args.command == "verify" and not data["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
