"""Random-circuit benchmark harness: mean assembly volume and mean compile
wall-clock over seeded circuits per (qubits, gates) configuration."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .circuit import generate_random_circuit
from .pipeline import compile_circuit


@dataclass(frozen=True)
class BenchRow:
    qubits: int
    gates: int
    volume_mean: float
    pt_mean_seconds: float


@dataclass(frozen=True)
class BenchFailure:
    qubits: int
    gates: int
    seed: int
    error: str


@dataclass
class BenchmarkTable:
    rows: list[BenchRow] = field(default_factory=list)
    failures: list[BenchFailure] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["qub,gates,volume_mean,pt_mean_seconds"]
        for row in self.rows:
            lines.append(
                f"{row.qubits},{row.gates},{row.volume_mean!r},{row.pt_mean_seconds!r}"
            )
        return "\n".join(lines) + "\n"


def run_benchmark(
    qubit_counts: Sequence[int],
    gate_counts: Sequence[int],
    t_fraction: float = 0.5,
    seeds_per_config: int = 10,
    progress: Callable[[int, int, int], None] | None = None,
) -> BenchmarkTable:
    """Compile `seeds_per_config` random circuits for every (qubits, gates)
    pair; seeds are 0..k-1 so volume columns reproduce across runs and
    machines. Compile failures abort their cell and are recorded."""
    if not qubit_counts or not gate_counts:
        raise ValueError("qubit_counts and gate_counts must be non-empty")
    table = BenchmarkTable()
    for qubits in qubit_counts:
        for gates in gate_counts:
            volumes: list[int] = []
            prep: list[float] = []
            failed = False
            for seed in range(seeds_per_config):
                if progress is not None:
                    progress(qubits, gates, seed)
                circuit = generate_random_circuit(qubits, gates, t_fraction, seed)
                try:
                    result = compile_circuit(circuit)
                except Exception as exc:  # recorded, cell aborted
                    table.failures.append(BenchFailure(qubits, gates, seed, str(exc)))
                    failed = True
                    break
                volumes.append(result.report.volume)
                prep.append(result.report.preparation_seconds)
            if not failed and volumes:
                table.rows.append(
                    BenchRow(
                        qubits,
                        gates,
                        sum(volumes) / len(volumes),
                        sum(prep) / len(prep),
                    )
                )
    return table


def linear_fit_r_squared(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Coefficient of determination of the least-squares line through
    (xs, ys); 1.0 when the relationship is exactly linear."""
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points")
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((x - mean_x) ** 2 for x in xs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    syy = sum((y - mean_y) ** 2 for y in ys)
    if syy == 0:
        return 1.0
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    return 1.0 - ss_res / syy
