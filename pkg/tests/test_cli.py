import json

import pytest

from cdex.cli import main
from cdex.model import from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_ref1(capsys, ref1_file):
    code, out, _ = run(capsys, "solve", ref1_file)
    assert code == 0
    assert "alpha=5 rates=3,2,0,0" in out


def test_solve_paper_trace_ref2(capsys, ref2_file):
    code, out, _ = run(capsys, "solve", ref2_file, "--tie-break", "paper-trace")
    assert code == 0
    assert "alpha=6 rates=2,2,1,1" in out


def test_solve_trace_contains_alpha_raised(capsys, ref1_file):
    code, out, _ = run(capsys, "solve", ref1_file, "--alpha", "4", "--trace")
    assert code == 0
    raised = [l for l in out.splitlines() if l.startswith("alpha_raised")]
    assert len(raised) == 1 and "old=4" in raised[0] and "new=5" in raised[0]


def test_solve_verify_json(capsys, ref1_file):
    code, out, _ = run(capsys, "solve", ref1_file, "--verify", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha"] == 5 and payload["verify"]["optimal"]


def test_verify_infeasible_exit_2(capsys, ref1_file):
    code, out, _ = run(capsys, "verify", ref1_file, "--rates", "1,2,1,1")
    assert code == 2
    assert "X={1}" in out and "required 2" in out and "actual 1" in out


def test_verify_feasible(capsys, ref1_file):
    code, out, _ = run(capsys, "verify", ref1_file, "--rates", "3,2,1,1")
    assert code == 0 and "feasible" in out


def test_oracle_alpha(capsys, ref2_file):
    code, out, _ = run(capsys, "oracle", "alpha", ref2_file)
    assert code == 0 and "alpha_star=6" in out


def test_oracle_props(capsys):
    code, out, _ = run(capsys, "oracle", "props", "--seed-range", "0..9",
                       "--clients", "4", "--packets", "7")
    assert code == 0 and "0 failures" in out


def test_dv_ref1(capsys, ref1_file):
    code, out, _ = run(capsys, "dv", ref1_file)
    assert code == 0
    assert "rates=7/3,4/3,1/3,1/3 integral=false" in out


def test_dv_trace(capsys, ref1_file):
    code, out, _ = run(capsys, "dv", ref1_file, "--trace")
    assert code == 0 and "mac([1, 2, 3, 4])" in out


def test_simulate(capsys, ref1_file):
    code, out, _ = run(capsys, "simulate", ref1_file, "--rates", "3,2,0,0",
                       "--trials", "20")
    assert code == 0 and "successes=20/20" in out
    code, out, _ = run(capsys, "simulate", ref1_file, "--rates", "1,2,1,1",
                       "--trials", "5")
    assert code == 2 and "worst" in out


def test_gen_round_trip(capsys, tmp_path):
    out_path = tmp_path / "gen.json"
    code, _, _ = run(capsys, "gen", "--clients", "4", "--packets", "7",
                     "--seed", "5", "--out", str(out_path))
    assert code == 0
    inst = from_json(out_path.read_text())
    assert inst.num_clients == 4 and inst.num_packets == 7
    # Solving the serialized instance matches solving the regenerated one.
    code, out1, _ = run(capsys, "solve", str(out_path))
    code, out2, _ = run(capsys, "solve", str(out_path))
    assert out1 == out2


def test_invalid_instance_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"L":2,"has_sets":[[1],[1]]}')
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 1 and "error" in err


def test_missing_file_exit_1(capsys):
    code, _, _ = run(capsys, "solve", "/nonexistent/x.json")
    assert code == 1


def test_bench_deterministic_csv(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        code, out, _ = run(capsys, "bench", "--packets", "10", "--clients",
                           "4..6", "--reps", "3", "--seed", "7", "--out", str(path))
        assert code == 0 and "slope" in out
    strip = lambda text: ["," .join(line.split(",")[:6]) for line in text.splitlines()]
    # Identical apart from the wall-clock column.
    assert strip(a.read_text()) == strip(b.read_text())
    header = a.read_text().splitlines()[0]
    assert header == "K,L,rep,seed,alpha_star,gamma_count,wall_ns"
    assert len(a.read_text().splitlines()) == 1 + 3 * 3


def test_bench_single_row(capsys, tmp_path):
    path = tmp_path / "one.csv"
    code, _, _ = run(capsys, "bench", "--packets", "10", "--clients", "5..5",
                     "--reps", "1", "--out", str(path))
    assert code == 0
    assert len(path.read_text().splitlines()) == 2
