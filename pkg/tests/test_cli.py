import csv
import subprocess
import sys

import pytest

from paretosum import ParetoSet, read_instance, read_result, validate_pareto_set, write_instance
from paretosum.cli import main
from paretosum.dispatch import ALGORITHMS


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.fixture
def worked(tmp_path):
    path = tmp_path / "worked.txt"
    write_instance(path, ParetoSet([(0, 2), (1, 0)]), ParetoSet([(0, 1), (2, 0)]))
    return path


def test_gen(tmp_path, capsys):
    out = tmp_path / "a.txt"
    code, text, _ = run(capsys, "gen", "--kind", "range", "--n", 1000, "--range-factor", 2, "--seed", 7, "--out", out)
    assert code == 0
    P, Q = read_instance(out)
    assert max(P.W, Q.W) <= 2000
    assert text == f"n=1000 m=1000 W={max(P.W, Q.W)}"


def test_gen_near_linear_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "b1.txt", tmp_path / "b2.txt"
    for path in (a, b):
        assert run(capsys, "gen", "--kind", "near-linear", "--n", 100, "--seed", 1, "--out", path)[0] == 0
    P, Q = read_instance(a)
    assert validate_pareto_set(P.points) and validate_pareto_set(Q.points)
    assert a.read_bytes() == b.read_bytes()


def test_gen_usage_errors(tmp_path, capsys):
    assert run(capsys, "gen", "--kind", "range", "--n", 10, "--range-factor", 0.5, "--out", tmp_path / "x")[0] == 2
    assert run(capsys, "gen", "--kind", "spiral", "--out", tmp_path / "x")[0] == 2
    assert run(capsys, "gen", "--kind", "range", "--n", 10, "--perturb-fraction", 2, "--out", tmp_path / "x")[0] == 2


def test_exact_all_algos_identical(worked, tmp_path, capsys):
    blobs = set()
    for algo in ALGORITHMS:
        out = tmp_path / f"{algo}.txt"
        code, text, _ = run(capsys, "exact", "--in", worked, "--algo", algo, "--out", out)
        assert code == 0 and text.startswith("k=3 time_ns=")
        blobs.add(out.read_bytes())
    assert blobs == {b"0 3\n1 1\n3 0\n"}


def test_exact_cdxz_flags(worked, tmp_path, capsys):
    out = tmp_path / "r.txt"
    args = ("exact", "--in", worked, "--algo", "conv-cdxz", "--out", out)
    assert run(capsys, *args, "--cdxz-scale", 25, "--cdxz-prime", 2)[0] == 0
    assert run(capsys, *args, "--cdxz-theoretical")[0] == 0
    assert run(capsys, *args, "--cdxz-scale", 0)[0] == 1


def test_exact_errors(worked, tmp_path, capsys):
    assert run(capsys, "exact", "--in", worked, "--algo", "magic", "--out", tmp_path / "r")[0] == 2
    assert run(capsys, "exact", "--in", tmp_path / "missing", "--algo", "bsc", "--out", tmp_path / "r")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("2 0\n0 1\n1 2\n")
    code, _, err = run(capsys, "exact", "--in", bad, "--algo", "bsc", "--out", tmp_path / "r")
    assert code == 1 and "InvariantError" in err
    sparse = tmp_path / "sparse.txt"
    write_instance(sparse, ParetoSet([(0, 1), (10**11, 0)]), ParetoSet([(0, 0)]))
    code, _, err = run(capsys, "exact", "--in", sparse, "--algo", "bsc", "--out", tmp_path / "r")
    assert code == 1 and "BudgetExceeded" in err


def test_approx_t1_matches_exact(tmp_path, capsys):
    inst = tmp_path / "i.txt"
    run(capsys, "gen", "--kind", "range", "--n", 300, "--seed", 3, "--out", inst)
    run(capsys, "exact", "--in", inst, "--algo", "bsc", "--out", tmp_path / "e.txt")
    code, text, _ = run(capsys, "approx", "--in", inst, "--algo", "bsc", "--t", 1, "--out", tmp_path / "a.txt")
    assert code == 0 and text.endswith("guarantee=2")
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "e.txt").read_bytes()


def test_approx_guarantee_and_eval(tmp_path, capsys):
    inst = tmp_path / "i.txt"
    run(capsys, "gen", "--kind", "range", "--n", 500, "--seed", 4, "--out", inst)
    run(capsys, "exact", "--in", inst, "--algo", "bsc", "--out", tmp_path / "e.txt")
    code, text, _ = run(capsys, "approx", "--in", inst, "--algo", "bsc", "--t", 10, "--out", tmp_path / "a.txt")
    assert code == 0 and "guarantee=20" in text
    code, text, _ = run(capsys, "eval", "--exact", tmp_path / "e.txt", "--approx", tmp_path / "a.txt")
    delta = int(text.split()[0].split("=")[1])
    assert code == 0 and 0 <= delta <= 20


def test_approx_mode_gating(worked, tmp_path, capsys):
    out = tmp_path / "r.txt"
    code, _, err = run(capsys, "approx", "--in", worked, "--algo", "conv-cdxz", "--t", 10, "--out", out)
    assert code == 2 and "witnesses" in err
    assert run(capsys, "approx", "--in", worked, "--algo", "conv-cdxz", "--t", 10, "--weak", "--out", out)[0] == 0
    assert run(capsys, "approx", "--in", worked, "--t", 0, "--out", out)[0] == 2


def test_eval(tmp_path, capsys):
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    a.write_text("0 0\n")
    b.write_text("3 1\n")
    c.write_text("0 1\n1 2\n")
    assert run(capsys, "eval", "--exact", a, "--approx", a)[1] == "delta=0 size_ratio=1"
    assert run(capsys, "eval", "--exact", a, "--approx", b)[1] == "delta=3 size_ratio=1"
    assert run(capsys, "eval", "--exact", a, "--approx", c)[0] == 1


def test_bench_cardinality(tmp_path, capsys):
    path = tmp_path / "b.csv"
    code, _, _ = run(
        capsys, "bench", "--suite", "range", "--sizes", "50,80", "--algos", "bsc,conv-cp",
        "--t-values", "1", "--repeats", 2, "--timeout-secs", 60, "--csv", path,
    )
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 4
    assert [r["algo"] for r in rows] == ["bsc", "conv-cp", "bsc", "conv-cp"]
    assert rows[0]["pruned_fraction"] == "" and rows[1]["pruned_fraction"] != ""
    assert all(r["delta_measured"] == "0" and int(r["time_nanos"]) > 0 for r in rows)


def test_bench_usage_errors(tmp_path, capsys):
    path = tmp_path / "b.csv"
    assert run(capsys, "bench", "--suite", "range", "--algos", "nope", "--csv", path)[0] == 2
    assert run(capsys, "bench", "--suite", "range", "--repeats", 0, "--csv", path)[0] == 2
    assert run(capsys, "bench", "--csv", path)[0] == 2


def test_module_entry_point(worked, tmp_path):
    out = tmp_path / "r.txt"
    proc = subprocess.run(
        [sys.executable, "-m", "paretosum", "exact", "--in", str(worked), "--algo", "sss", "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("k=3 ")
    assert read_result(out).points == [(0, 3), (1, 1), (3, 0)]
