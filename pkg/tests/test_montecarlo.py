import pytest

from jlab.graph import CapacityError, JohnsonParams
from jlab.montecarlo import (
    CSV_COLUMNS,
    CouplingViolation,
    TrialResult,
    _check_coupling,
    run_batch,
    sweep,
    wilson_interval,
    worker_count,
)

G731 = JohnsonParams(7, 3, 1)


def test_wilson_interval_frozen():
    lo, hi = wilson_interval(5, 50)
    assert (round(lo, 6), round(hi, 6)) == (0.043476, 0.213602)
    assert wilson_interval(0, 0) == (0.0, 1.0)


def test_batch_reproducible_and_worker_independent():
    a = run_batch(G731, 0.9, 40, master_seed=11, workers=1)
    b = run_batch(G731, 0.9, 40, master_seed=11, workers=2)
    assert a.results == b.results
    assert a.csv_row() == b.csv_row()
    assert a.unknowns == 0


def test_full_graph_batch_all_succeed():
    # alpha(G(7,3,1)) equals the star size 5, so p = 1 always matches
    batch = run_batch(G731, 1.0, 10, master_seed=1)
    assert batch.successes == 10 and batch.success_rate == 1.0


def test_sweep_frozen_counts():
    sw = sweep(G731, [1.0, 0.9, 0.5], 50, master_seed=2024, record_alpha=True)
    assert sw.p_grid == (0.5, 0.9, 1.0)
    assert [b.successes for b in sw.batches] == [0, 5, 50]
    assert sw.monotone_rates()
    for k in range(50):
        alphas = [b.results[k].alpha for b in sw.batches]
        assert alphas == sorted(alphas, reverse=True)


def test_sweep_csv_header():
    sw = sweep(JohnsonParams(5, 2, 0), [0.5, 1.0], 20, master_seed=3)
    lines = sw.csv().splitlines()
    assert lines[0] == "# jlab 0.1.0"
    assert lines[1].startswith("# config {") and '"master_seed": 3' in lines[1]
    assert lines[2] == ",".join(CSV_COLUMNS)
    assert len(lines) == 5
    assert sw.p0 == 0.75  # Kneser graph with n = 2r + 1


def test_coupling_violation_detected():
    rising = [[TrialResult(0, 1, False, 4, 1), TrialResult(0, 1, False, 5, 1)]]
    with pytest.raises(CouplingViolation):
        _check_coupling([0.2, 0.4], rising)
    flipped = [[TrialResult(0, 1, True, None, 1), TrialResult(0, 1, False, None, 1)]]
    with pytest.raises(CouplingViolation):
        _check_coupling([0.2, 0.4], flipped)
    _check_coupling([0.2, 0.4], [[TrialResult(0, 1, None, None, 1),
                                  TrialResult(0, 1, True, 3, 1)]])


def test_input_validation():
    with pytest.raises(ValueError):
        run_batch(G731, 1.5, 3, 0)
    with pytest.raises(ValueError):
        sweep(G731, [0.5, -0.1], 3, 0)
    with pytest.raises(CapacityError):
        run_batch(JohnsonParams(30, 5, 1), 0.5, 3, 0)


def test_worker_count_honours_env(monkeypatch):
    monkeypatch.setenv("JLAB_THREADS", "1")
    assert worker_count(8) == 1
    monkeypatch.delenv("JLAB_THREADS")
    assert worker_count(3) == 3


def test_json_detail():
    batch = run_batch(G731, 0.9, 5, master_seed=2)
    assert "per_trial" not in batch.to_json()
    detail = batch.to_json(detail=True)["per_trial"]
    assert [t["index"] for t in detail] == list(range(5))
