"""Acceptance criteria 1-14 at their stated bounds, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stoimenow.cli import capture
from stoimenow.verify import VerifyReport, run_suite


def _only(report: VerifyReport, keep) -> VerifyReport:
    return VerifyReport(report.suite, [c for c in report.checks if keep(c.name)])


def _conjecture() -> VerifyReport:
    report = VerifyReport("conjecture")

    def emitted() -> tuple[bool, str]:
        code, out = capture(["conjecture", "--max-n", "9", "--format", "json"])
        rows = json.loads(out)
        complete = [r["n"] for r in rows] == list(range(10)) and all(
            r["nr_M_P1"] and r["h_P_3plus1"] and r["h_Dyck"] for r in rows
        )
        # agreement is reported, never required
        agree = sum(r["agree"] for r in rows)
        return code == 0 and complete, f"{len(rows)} rows, {agree} agreeing"

    report.add("three-polynomial report for n = 0..9", (0, 9), emitted)
    return report


CRITERIA = {
    1: ("Catalan counts for P1..P5", lambda: run_suite("catalan", 9)),
    2: ("Fishburn counts for all four structures", lambda: run_suite("fishburn", 9)),
    3: ("Wilf-equivalence of P2k..P5k", lambda: run_suite("wilf", 9)),
    4: ("phi is a bijection with a working inverse", lambda: _only(run_suite("bijections", 7), lambda s: s.startswith("phi"))),
    5: ("restriction image equalities", lambda: run_suite("restrictions", 8)),
    6: ("width and height distributions coincide", lambda: run_suite("width", 8)),
    7: ("eight Narayana distributions", lambda: run_suite("narayana", 7)),
    8: ("six symmetric ballot distributions", lambda: run_suite("ballot", 7)),
    9: ("six joint distributions", lambda: run_suite("joint", 7)),
    10: (
        "pointwise statistic identities via Omega",
        lambda: _only(run_suite("remark", 7), lambda s: "on M_n(P1)" not in s),
    ),
    11: ("nr = mcr, h = mag, ssd = smc", lambda: run_suite("corollaries", 8)),
    12: ("min/zero/idr and mag/asc+1 distributions", lambda: run_suite("kitaev-remmel", 7)),
    13: ("101-avoiders: runs, Delta fixed points, 0101 = 101", lambda: run_suite("rgf", 8)),
    14: ("conjecture report emitted, not asserted", _conjecture),
}


def evaluate(number: int) -> tuple[bool, str, VerifyReport]:
    title, run = CRITERIA[number]
    start = time.perf_counter()
    report = run()
    status = "PASS" if report.passed else "FAIL"
    line = f"criterion {number}: {status} {title} ({time.perf_counter() - start:.1f}s)"
    failed = [c for c in report.checks if not c.passed]
    if failed:
        line += " | " + "; ".join(f"{c.name}: {c.detail}" for c in failed)
    return report.passed, line, report


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance_log):
    ok, line, report = evaluate(number)
    print(line)
    acceptance_log.append(line)
    assert ok, report.format_table()


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line, _ in results:
        print(line)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
