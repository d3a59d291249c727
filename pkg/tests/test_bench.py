import pytest

from surgekit.bench import linear_fit_r_squared, run_benchmark


def test_zero_gate_circuits_have_zero_volume():
    table = run_benchmark([5], [0], 0.5, seeds_per_config=3)
    assert len(table.rows) == 1
    assert table.rows[0].volume_mean == 0.0


def test_volume_column_deterministic():
    first = run_benchmark([4], [12, 24], 0.5, seeds_per_config=3)
    second = run_benchmark([4], [12, 24], 0.5, seeds_per_config=3)
    assert [r.volume_mean for r in first.rows] == [r.volume_mean for r in second.rows]


def test_csv_header_and_shape():
    table = run_benchmark([3], [10], 0.5, seeds_per_config=2)
    csv = table.to_csv()
    lines = csv.strip().splitlines()
    assert lines[0] == "qub,gates,volume_mean,pt_mean_seconds"
    assert len(lines) == 2
    qub, gates, volume, pt = lines[1].split(",")
    assert (int(qub), int(gates)) == (3, 10)
    assert float(volume) >= 0 and float(pt) > 0


def test_rows_cover_all_configurations():
    table = run_benchmark([2, 4], [5, 10, 15], 0.5, seeds_per_config=1)
    assert [(r.qubits, r.gates) for r in table.rows] == [
        (2, 5), (2, 10), (2, 15), (4, 5), (4, 10), (4, 15),
    ]


def test_rejects_empty_lists():
    with pytest.raises(ValueError):
        run_benchmark([], [10])
    with pytest.raises(ValueError):
        run_benchmark([5], [])


def test_linear_fit_r_squared():
    assert linear_fit_r_squared([1, 2, 3], [2.0, 4.0, 6.0]) == pytest.approx(1.0)
    assert linear_fit_r_squared([1, 2, 3, 4], [1.0, 1.0, 1.0, 1.0]) == pytest.approx(1.0)
    noisy = linear_fit_r_squared([1, 2, 3, 4], [1.0, 4.0, 2.0, 8.0])
    assert 0.0 <= noisy < 1.0
    with pytest.raises(ValueError):
        linear_fit_r_squared([1], [1.0])
