import json
import shutil
import subprocess
import sys

import pytest

from conering.cli import main
from conering.golden import default_dir
from conering.series import IntSeries, RationalFunction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hilbert_closed_form(capsys):
    code, out, _ = run(capsys, "hilbert", "--group", "O3", "--terms", "10", "--closed-form")
    assert code == 0
    assert "numerator: 1+5t+5t^2-6t^3+4t^4-t^5" in out.splitlines()
    assert "denominator: (1-t)^4" in out.splitlines()
    assert "coefficients: 1 9 35 84 165 286 455 680 969 1330" in out.splitlines()


def test_hilbert_json_round_trip(capsys):
    code, out, _ = run(capsys, "hilbert", "--group", "Sp4", "--terms", "12", "--closed-form", "--format", "json")
    assert code == 0
    data = json.loads(out)
    s = IntSeries.from_json(data["series"])
    rf = RationalFunction.from_json(data["closed_form"])
    assert s.order == 11 and rf.expand(11) == s
    assert rf.numerator == (1, 5, 5, 1) and rf.a == 11


def test_explicit_and_auto_denominators(capsys):
    code, out, _ = run(capsys, "uxu", "--group", "O3", "--closed-form", "--denominator", "1,2")
    assert code == 0 and "numerator: 1+t^3-2t^4-t^5+t^6" in out
    code, out, _ = run(capsys, "hilbert", "--group", "O4", "--closed-form", "--denominator", "auto")
    assert code == 0 and "denominator: (1-t)^7" in out


def test_wrong_denominator_fails(capsys):
    code, _, err = run(capsys, "hilbert", "--group", "O3", "--closed-form", "--denominator", "2")
    assert code == 1 and "does not terminate" in err


def test_koszul(capsys):
    code, out, _ = run(capsys, "koszul", "--group", "O3", "--max", "12")
    assert code == 0 and out.strip() == "obstruction at t^9, coefficient -7330"
    code, out, _ = run(capsys, "koszul", "--group", "Sp4", "--max", "50")
    assert code == 0 and out.strip() == "no obstruction through t^50"


def test_groebner_matches_golden(capsys):
    code, out, _ = run(capsys, "groebner", "--group", "O3beta", "--order", "degrevlex")
    assert code == 0
    assert out == (default_dir() / "groebner" / "O3beta_degrevlex.txt").read_text()
    assert len(out.splitlines()) == 16


def test_generators_and_dims(capsys):
    code, out, _ = run(capsys, "generators", "--group", "O4")
    assert code == 0 and len(out.splitlines()) == 18
    code, out, _ = run(capsys, "dims", "--group", "O4", "--degree", "4")
    assert code == 0 and out.splitlines()[-1] == "4 1707 1825"
    code, out, _ = run(capsys, "labels", "--group", "SO4", "--degree", "2")
    assert code == 0 and len(out.splitlines()) == 3


def test_large_integers_print_in_full(capsys):
    code, out, _ = run(capsys, "dims", "--group", "Sp4", "--degree", "30", "--format", "json")
    assert code == 0
    last = json.loads(out)["rows"][-1]["cone_dim"]
    assert last == "6738386424"


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "--group", "SO3"],
        ["hilbert", "--terms", "0"],
        ["hilbert", "--closed-form", "--denominator", "x"],
        ["groebner", "--group", "SO4"],
        ["groebner", "--var-order", "column-major"],
        ["groebner", "--order", "revlex"],
        ["verify", "--only", "nothing"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_determinism(capsys):
    outs = {run(capsys, "groebner", "--group", "Sp4", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "groebner")
    assert code == 0
    items = [int(line.split()[1]) for line in out.splitlines()]
    assert items == [5, 6, 11, 12]
    code, out, _ = run(capsys, "verify", "--only", "3", "--format", "json")
    report = json.loads(out)
    assert report["passed"] and [r["item"] for r in report["items"]] == [3]


def test_verify_corrupted_golden(tmp_path, capsys):
    root = tmp_path / "golden"
    shutil.copytree(default_dir(), root)
    target = root / "groebner" / "O3beta_degrevlex.txt"
    lines = target.read_text().splitlines(keepends=True)
    lines[3] = lines[3].rstrip("\n") + " + x33^2\n"
    target.write_text("".join(lines))
    code, out, _ = run(capsys, "verify", "--only", "5", "--golden-dir", str(root))
    assert code == 1
    assert "FAIL" in out and str(target) in out
    assert "first failure: item 5" in out


def test_verify_unreadable_golden(tmp_path, capsys):
    root = tmp_path / "golden"
    shutil.copytree(default_dir(), root)
    (root / "series" / "hilbert_O4.json").write_text("{not json")
    code, out, _ = run(capsys, "verify", "--only", "1", "--golden-dir", str(root))
    assert code == 1 and "hilbert_O4.json" in out


def test_console_script():
    exe = shutil.which("cone")
    cmd = [exe] if exe else [sys.executable, "-m", "conering.cli"]
    res = subprocess.run(cmd + ["koszul", "--group", "O3"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "obstruction at t^9, coefficient -7330"
