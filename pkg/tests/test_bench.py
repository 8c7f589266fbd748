import pytest

from cdex import bench
from cdex.model import EvalContext, random_instance
from cdex.sumrate import lower_bound


def test_records_shape_and_invariants():
    records = list(bench.run(L=10, k_range=range(4, 7), reps=3, seed=5))
    assert len(records) == 9
    assert [(r.K, r.rep) for r in records] == [(k, rep) for k in (4, 5, 6) for rep in range(3)]
    for r in records:
        assert r.gamma_count > 0
        inst = random_instance(r.K, r.L, 0.5, r.seed)
        assert r.alpha_star >= lower_bound(EvalContext(), inst)


def test_records_deterministic_modulo_wall_time():
    a = list(bench.run(L=10, k_range=range(4, 6), reps=2, seed=1))
    b = list(bench.run(L=10, k_range=range(4, 6), reps=2, seed=1))
    key = lambda r: (r.K, r.L, r.rep, r.seed, r.alpha_star, r.gamma_count)
    assert [key(r) for r in a] == [key(r) for r in b]


def test_csv_columns(tmp_path):
    path = tmp_path / "bench.csv"
    bench.write_csv(bench.run(L=10, k_range=range(4, 5), reps=2, seed=0), str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(bench.CSV_COLUMNS)
    assert len(lines) == 3


def test_slope_requires_two_k():
    records = list(bench.run(L=10, k_range=range(5, 6), reps=2, seed=0))
    with pytest.raises(ValueError):
        bench.loglog_slope(records)


def test_slope_on_synthetic_cubic():
    # gamma = K^3 exactly should fit slope 3.
    recs = [bench.BenchRecord(k, 10, 0, 0, 1, k ** 3, 0) for k in (5, 10, 20, 40)]
    assert abs(bench.loglog_slope(recs) - 3.0) < 1e-9
