"""The twelve acceptance criteria, at exact tolerance.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""

import shutil

import pytest

from conering.golden import Golden, default_dir
from conering.verify import CHECKS, run_check, verify_all

RESULTS: dict[int, dict] = {}


@pytest.fixture(scope="module")
def golden():
    return Golden()


@pytest.mark.parametrize("check", CHECKS, ids=lambda c: f"item{c.number:02d}-{c.name.replace(' ', '-')}")
def test_criterion(check, golden):
    result = run_check(check, golden)
    RESULTS[check.number] = result
    line = f"[{'PASS' if result['passed'] else 'FAIL'}] criterion {check.number}: {check.name} ({result['detail']})"
    print(line)
    assert result["passed"], line


def test_report_covers_every_item():
    report = verify_all(only=["hilbert", "groebner", "ideals"])
    assert [r["item"] for r in report["items"]] == list(range(1, 13))


def test_negative_control(tmp_path):
    root = tmp_path / "golden"
    shutil.copytree(default_dir(), root)
    target = root / "series" / "koszul_O3.json"
    target.write_text(target.read_text().replace("-7330", "-7331"))
    report = verify_all(only=["3"], golden_dir=root)
    assert not report["passed"]
    assert "koszul_O3.json" in report["items"][0]["detail"]
