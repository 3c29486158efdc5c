import csv
import io

import pytest

from miarvelous.bench import CSV_COLUMNS, bench_scaling, successive_ratios, to_csv, to_text


def test_small_grid():
    rows = bench_scaling([20, 40], [3, 6], reps=3, seed=1)
    assert [(r.n, r.deadline) for r in rows] == [(20, 3), (20, 6), (40, 3), (40, 6)]
    for r in rows:
        assert r.plans_identical
        assert r.max_eu_gap <= 1e-9
        assert r.naive_median_s > 0 and r.incremental_median_s > 0


def test_reps_guard():
    with pytest.raises(ValueError):
        bench_scaling([10], [2], reps=2)
    with pytest.raises(ValueError):
        bench_scaling([0], [2], reps=3)


def test_output_formats():
    rows = bench_scaling([15], [2, 4], reps=3)
    parsed = list(csv.DictReader(io.StringIO(to_csv(rows))))
    assert tuple(parsed[0]) == CSV_COLUMNS
    assert [int(p["deadline"]) for p in parsed] == [2, 4]
    assert "naive[s]" in to_text(rows)
    assert len(successive_ratios(rows)) == 1
