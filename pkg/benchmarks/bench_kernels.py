"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs in a fresh interpreter so the backend is chosen at import,
exactly as in normal use (CONERING_PURE_PYTHON=1 forces the fallback).
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "buchberger O3beta": "buchberger(cone_generators('O3beta'))",
    "buchberger Sp4": "buchberger(cone_generators('Sp4'))",
    "buchberger O4": "buchberger(cone_generators('O4'))",
    "staircase Sp4, order 40": "monomial_quotient_hilbert(LI, 16, 40)",
    "normal forms, 200 cubics mod O3beta": "[G3.reduce(f) for f in CUBICS]",
}

SETUP = """
import random
from conering.groebner import buchberger, leading_ideal, monomial_quotient_hilbert
from conering.ideals import cone_generators
from conering.polyring import MPoly, VarGrid
LI = leading_ideal(buchberger(cone_generators('Sp4')))
G3 = buchberger(cone_generators('O3beta'))
rng = random.Random(0)
grid = VarGrid(3)
CUBICS = []
for _ in range(200):
    f = MPoly(grid)
    for _ in range(6):
        e = [0] * 9
        for _ in range(3):
            e[rng.randrange(9)] += 1
        f = f + MPoly(grid, {tuple(e): rng.randint(-5, 5) or 1})
    CUBICS.append(f)
"""

RUNNER = """
import json, sys, timeit
from conering import kernels
results = {}
for name, stmt in json.loads(sys.argv[1]).items():
    results[name] = min(timeit.repeat(stmt, setup=SETUP, number=1, repeat=int(sys.argv[2])))
print(json.dumps({"backend": kernels.BACKEND, "results": results}))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("CONERING_PURE_PYTHON", None)
    if pure:
        env["CONERING_PURE_PYTHON"] = "1"
    code = f"SETUP = {SETUP!r}\n" + RUNNER
    out = subprocess.run(
        [sys.executable, "-c", code, json.dumps(WORKLOADS), str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not built; only the Python backend is available")
    width = max(map(len, WORKLOADS))
    print(f"{'workload':<{width}}  {fast['backend']:>9}  {'python':>9}  speedup")
    for name in WORKLOADS:
        a, b = fast["results"][name], slow["results"][name]
        print(f"{name:<{width}}  {a * 1e3:7.1f}ms  {b * 1e3:7.1f}ms  {b / a:6.2f}x")


if __name__ == "__main__":
    main()
