import json
import subprocess
import sys

import pytest

from stoimenow.cli import capture, main
from stoimenow.matchings import parse_matching
from stoimenow.posets import parse_poset


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["enumerate", "--structure", "matching", "--n", "3", "--count"], "5"),
        (["enumerate", "--structure", "matching", "--n", "5", "--avoid", "P3", "--count"], "42"),
        (["enumerate", "--structure", "ascent", "--n", "0", "--count"], "1"),
        (["enumerate", "--structure", "poset", "--n", "5", "--avoid", "N", "--count"], "42"),
        (["enumerate", "--structure", "fishburn-perm", "--n", "5", "--avoid", "3142", "--count"], "42"),
        (["enumerate", "--structure", "dyck", "--n", "4", "--count"], "14"),
        (["map", "--bijection", "lambda", "--input", "0,1,0,1,3,1,1,2"], "3 1 7 6 4 8 2 5"),
        (["map", "--bijection", "gamma", "--input", "UUDUUDDDUDUD"], "1-3,2-6,4-7,5-8,9-10,11-12"),
        (["map", "--bijection", "psi", "--input", "1-2"], "0"),
        (["map", "--bijection", "delta", "--input", "0,1,0,1,3,1,1,2"], "0,3,0,1,4,1,1,2"),
        (["map", "--bijection", "upsilon", "--input", "1-3,2-4"], "2 1"),
        (["map", "--bijection", "omega", "--input", "1-2,3-4,5-6"], "3:1<2,2<3"),
    ],
)
def test_examples(argv, expected):
    code, out = capture(argv)
    assert code == 0
    assert out.strip() == expected


def test_round_trip_through_map():
    start = "1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22"
    _, out = capture(["map", "--bijection", "phi", "--input", start])
    _, back = capture(["map", "--bijection", "phi-inv", "--input", out.strip()])
    assert back.strip() == start


def test_json_and_csv_round_trip():
    _, out = capture(["enumerate", "--structure", "matching", "--n", "4", "--stats", "--format", "json"])
    rows = json.loads(out)
    assert len(rows) == 15
    assert all(str(parse_matching(r["object"])) == r["object"] for r in rows)
    _, out = capture(["enumerate", "--structure", "poset", "--n", "3", "--format", "csv"])
    lines = out.strip().splitlines()
    assert lines[0] == "object" and len(lines) == 6
    import csv
    import io

    for row in csv.DictReader(io.StringIO(out)):
        parse_poset(row["object"])


def test_deterministic_output():
    argv = ["enumerate", "--structure", "ascent", "--n", "5", "--stats"]
    assert capture(argv) == capture(argv)


@pytest.mark.parametrize(
    "argv, code",
    [
        (["map", "--bijection", "psi", "--input", "1-3,2-5,4-7,6-8"], 3),
        (["map", "--bijection", "gamma", "--input", "UUD"], 3),
        (["map", "--bijection", "gamma-inv", "--input", "1-4,2-3"], 3),
        (["map", "--bijection", "lambda", "--input", "0,x"], 2),
        (["enumerate", "--structure", "poset", "--n", "3", "--avoid", "P1"], 2),
        (["enumerate", "--structure", "matching"], 2),
        (["bogus"], 2),
        (["map", "--bijection", "nope", "--input", "1-2"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_domain_error_names_the_class(capsys):
    main(["map", "--bijection", "psi", "--input", "1-3,2-5,4-7,6-8"])
    assert "PatternViolation" in capsys.readouterr().err


def test_verify_pass_and_fail():
    code, out = capture(["verify", "--suite", "catalan", "--max-n", "6"])
    assert code == 0 and "suite catalan: PASS" in out
    code, out = capture(["verify", "--suite", "remark", "--max-n", "6", "--format", "json"])
    report = json.loads(out)
    assert code == 1 and report[0]["passed"] is False


def test_verify_parallel_matches_serial():
    argv = ["verify", "--suite", "all", "--max-n", "4", "--format", "json"]
    serial = json.loads(capture(argv)[1])
    parallel = json.loads(capture(argv + ["--jobs", "2"])[1])
    strip = lambda rs: [(r["suite"], [(c["name"], c["passed"]) for c in r["checks"]]) for r in rs]
    assert strip(serial) == strip(parallel)


def test_conjecture_report():
    code, out = capture(["conjecture", "--max-n", "3", "--format", "json"])
    rows = json.loads(out)
    assert code == 0 and [r["n"] for r in rows] == [0, 1, 2, 3]
    assert rows[0]["nr_M_P1"] == rows[0]["h_Dyck"] == "1"
    assert rows[3]["nr_M_P1"] == rows[3]["h_P_3plus1"] == rows[3]["h_Dyck"]
    assert main(["conjecture", "--max-n", "12"]) == 2


def test_cache_dir(tmp_path, monkeypatch):
    argv = ["enumerate", "--structure", "matching", "--n", "4", "--count"]
    _, first = capture(argv + ["--cache-dir", str(tmp_path)])
    assert len(list(tmp_path.iterdir())) == 1
    _, second = capture(argv + ["--cache-dir", str(tmp_path)])
    assert first == second == "15\n"
    env_dir = tmp_path / "env"
    monkeypatch.setenv("STOIMENOW_CACHE_DIR", str(env_dir))
    capture(argv)
    assert env_dir.is_dir()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stoimenow", "map", "--bijection", "psi", "--input", "1-2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "0\n" and proc.stderr == ""
