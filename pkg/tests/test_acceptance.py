"""Acceptance suite: one test per top-level criterion, each printing a
PASS/FAIL line (run with `pytest tests/test_acceptance.py -v -s`).

Criteria and tolerances are pinned here; nothing is deferred to later
calibration. The empirical Solovay-Kitaev contraction constant recorded for
this code base is C_APPROX below, measured once over the frozen 20-angle set.
"""
import math
import random
import time

import numpy as np
import pytest

from oracles import (
    MAT,
    bfs_route_length,
    check_program_on_state,
    sk_brute_force_best,
)
from surgekit.assembler import CuboidKind
from surgekit.bench import linear_fit_r_squared, run_benchmark
from surgekit.circuit import generate_random_circuit, parse_circuit
from surgekit.estimate import physical_qubits
from surgekit.layout import CellKind, LayoutConfig, LayoutGrid, build_layout
from surgekit.lowering import LoweredProgram, PauliFrame, lower_cnot, lower_t
from surgekit.pipeline import compile_circuit
from surgekit.routing import NoRouteError, astar_route
from surgekit.synthesis import base_approximation, rz_matrix, solovay_kitaev, trace_distance
from surgekit.assembly_io import export_assembly
import json

KIND_CODE = {kind: code for code, kind in enumerate(CuboidKind)}

#: Empirically recorded contraction constant over the frozen angle set
#: (seed 424242, 20 angles in [0.05, 2pi-0.05]); measured max ratio 33.14.
C_APPROX = 34.0

FIG2_LAYOUT_CONFIG = LayoutConfig(data_row_width=8, distillation_width=7, distillation_height=4)
FIG2_QUBITS = 16


def _corpus():
    """50 random circuits, 2-50 qubits, 10-300 gates, fixed seeds."""
    rng = random.Random(0xC0FFEE)
    for index in range(50):
        qubits = rng.randint(2, 50)
        gates = rng.randint(10, 300)
        yield generate_random_circuit(qubits, gates, 0.5, seed=index)


def _report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {status}: {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_volume_identity_over_corpus():
    started = time.perf_counter()
    checked = 0
    for circuit in _corpus():
        assembly = compile_circuit(circuit).assembly
        assert assembly.volume == assembly.footprint * assembly.num_steps
        assert assembly.volume == assembly.cuboid_count()
        checked += 1
    elapsed = time.perf_counter() - started
    _report(
        "volume identity (volume = footprint x steps = cuboid count)",
        checked == 50 and elapsed < 60.0,
        f"{checked} circuits in {elapsed:.1f}s",
    )


def test_fig2_fixture_footprint_64_and_128_cuboids(tmp_path):
    grid = build_layout(FIG2_QUBITS, FIG2_LAYOUT_CONFIG)
    result = compile_circuit(
        parse_circuit("qubits 16\nS 0\n"), layout_cfg=FIG2_LAYOUT_CONFIG
    )
    path = tmp_path / "fig2.assembly.json"
    export_assembly(result.assembly, result.report, path)
    records = len(json.loads(path.read_text())["cells"])
    _report(
        "layout fixture: footprint 64, two-step schedule exports 128 cuboids",
        grid.footprint == 64 and result.assembly.num_steps == 2 and records == 128,
        f"footprint={grid.footprint}, steps={result.assembly.num_steps}, records={records}",
    )


def test_physical_qubit_formula():
    value = physical_qubits(1, 3)
    _report("physical qubits: footprint 1 at d=3 is 25", value == 25, f"got {value}")


@pytest.mark.slow
def test_preparation_time_linearity():
    started = time.perf_counter()
    table = run_benchmark([100], [100, 200, 400, 600, 800], 0.5, seeds_per_config=10)
    elapsed = time.perf_counter() - started
    assert not table.failures, table.failures
    xs = [float(row.gates) for row in table.rows]
    ys = [row.pt_mean_seconds for row in table.rows]
    r_squared = linear_fit_r_squared(xs, ys)
    _report(
        "preparation time linear in gate count (R^2 >= 0.98)",
        r_squared >= 0.98 and elapsed < 600.0,
        f"R^2={r_squared:.4f} in {elapsed:.1f}s",
    )


def test_ancilla_overhead_band():
    ratios = {}
    for qubits in (10, 50, 100, 200):
        counts = build_layout(qubits).counts()
        ratios[qubits] = counts[CellKind.ANCILLA_ROUTE] / counts[CellKind.DATA]
    ok = all(0.35 <= r <= 0.75 for r in ratios.values())
    _report(
        "ancilla routing overhead in [0.35, 0.75] of data patches",
        ok,
        ", ".join(f"q={q}: {r:.3f}" for q, r in ratios.items()),
    )


def test_router_optimality_against_bfs():
    started = time.perf_counter()
    rng = random.Random(2024)
    agreements = 0
    for _ in range(100):
        cells = [(x, y) for y in range(20) for x in range(20)]
        src, dst = rng.sample(cells, 2)
        kinds = {c: CellKind.ANCILLA_ROUTE for c in cells}
        kinds[src] = CellKind.DATA
        kinds[dst] = CellKind.DATA
        grid = LayoutGrid(20, 20, kinds, {0: src, 1: dst}, src)
        occupied = {c for c in cells if rng.random() < 0.30 and c not in (src, dst)}

        def ok(cell):
            return kinds.get(cell) is CellKind.ANCILLA_ROUTE and cell not in occupied

        oracle = bfs_route_length(ok, 20, 20, src, dst)
        try:
            path = astar_route(grid, src, dst, occupied)
        except NoRouteError:
            assert oracle is None
        else:
            assert oracle is not None and len(path.cells) == oracle
        agreements += 1
    elapsed = time.perf_counter() - started
    _report(
        "router optimality matches BFS oracle on 100 random 20x20 grids",
        agreements == 100 and elapsed < 10.0,
        f"{agreements}/100 in {elapsed:.2f}s",
    )


def test_lowering_correctness_all_branches():
    started = time.perf_counter()
    rng = np.random.default_rng(99)

    def random_state(n):
        v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        return v / np.linalg.norm(v)

    cnot = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
    worst = 0.0
    prog = LoweredProgram(2, tuple(lower_cnot(0, 1)), PauliFrame.identity(2), 0)
    for _ in range(5):
        worst = max(worst, check_program_on_state(prog, cnot, random_state(2)))
    prog_t = LoweredProgram(1, tuple(lower_t(0)), PauliFrame.identity(1), 1)
    prog_td = LoweredProgram(1, tuple(lower_t(0, adjoint=True)), PauliFrame.identity(1), 1)
    for _ in range(5):
        worst = max(worst, check_program_on_state(prog_t, MAT["T"], random_state(1)))
        worst = max(worst, check_program_on_state(prog_td, MAT["TDG"], random_state(1)))
    elapsed = time.perf_counter() - started
    _report(
        "lowered CNOT and T reproduce their gates on every outcome branch",
        worst < 1e-9 and elapsed < 10.0,
        f"max fidelity deviation {worst:.2e} in {elapsed:.2f}s",
    )


def test_solovay_kitaev_contraction_and_base_oracle():
    started = time.perf_counter()
    rng = random.Random(424242)
    angles = [rng.uniform(0.05, 2 * math.pi - 0.05) for _ in range(20)]
    monotone = True
    ratio_ok = True
    for angle in angles:
        u = rz_matrix(angle)
        distances = [trace_distance(solovay_kitaev(u, depth).matrix, u) for depth in (0, 1, 2)]
        if not (distances[1] <= distances[0] + 1e-15 and distances[2] <= distances[1] + 1e-15):
            monotone = False
        for d_n, d_next in zip(distances, distances[1:]):
            if d_n > 1e-12 and d_next > C_APPROX * d_n**1.5:
                ratio_ok = False
    base_ok = True
    for angle in angles[:10]:
        u = rz_matrix(angle)
        word, _ = sk_brute_force_best(u, 6)
        if base_approximation(u, 6).gates != word:
            base_ok = False
    elapsed = time.perf_counter() - started
    _report(
        "SK distance non-increasing over depths 0-2; base search matches brute force",
        monotone and base_ok and ratio_ok and elapsed < 300.0,
        f"20 angles, c_approx<={C_APPROX}, {elapsed:.1f}s",
    )


def test_scheduler_constraints_over_corpus():
    route_code = KIND_CODE[CuboidKind.ROUTE_ACTIVE]
    dist_code = KIND_CODE[CuboidKind.DISTILLATION_ACTIVE]
    vacant_code = KIND_CODE[CuboidKind.VACANT]
    for circuit in _corpus():
        result = compile_circuit(circuit)
        assembly = result.assembly
        kind, op = assembly.kind_grid, assembly.op_grid
        for t in range(assembly.num_steps):
            route_ops = set(op[t][(kind[t] == route_code) & (op[t] >= 0)].tolist())
            assert len(route_ops) <= 1, (t, route_ops)
            dist_ops = set(op[t][kind[t] == dist_code].tolist())
            assert len(dist_ops) <= 1, t
        for x, y in assembly.layout.qubit_to_cell.values():
            assert not (kind[:, y, x] == vacant_code).any()
        completions = sorted(
            s.start + s.duration for s in assembly.schedule if s.label == "Distillation"
        )
        consumptions = sorted(s.start for s in assembly.schedule if s.label == "MeasurePatchX")
        assert len(completions) == len(consumptions) == result.program.magic_requests
        for done, used in zip(completions, consumptions):
            assert done <= used
    _report(
        "scheduler constraints: one route, one distillation, live data, magic conservation",
        True,
        "50 circuits",
    )


def test_s_gate_duration():
    steps = compile_circuit(parse_circuit("qubits 1\nS 0\n")).assembly.num_steps
    _report("a lone S gate schedules to exactly 2 steps", steps == 2, f"got {steps}")
