from collections import deque

import pytest

from surgekit.layout import (
    CellKind,
    LayoutConfig,
    LayoutGrid,
    ancilla_graph,
    build_layout,
    layout_ascii,
    layout_to_doc,
)

FIG2_CONFIG = LayoutConfig(data_row_width=8, distillation_width=7, distillation_height=4)
FIG2_QUBITS = 16


def flood_fill(grid: LayoutGrid, start, allowed) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        cell = queue.popleft()
        for n in grid.neighbors(cell):
            if n in allowed and n not in seen:
                seen.add(n)
                queue.append(n)
    return seen


def check_invariants(grid: LayoutGrid):
    route = set(grid.route_cells())
    # unique data cell per qubit
    cells = list(grid.qubit_to_cell.values())
    assert len(set(cells)) == len(cells)
    for cell in cells:
        assert grid.kind(cell) is CellKind.DATA
    # every data cell adjacent to a routing cell
    for cell in grid.data_cells():
        assert any(n in route for n in grid.neighbors(cell)), cell
    # routing subgraph connected (flood-fill oracle)
    start = sorted(route, key=lambda c: (c[1], c[0]))[0]
    assert flood_fill(grid, start, route) == route
    # distillation output touches routing
    anchor = grid.distillation_anchor
    assert grid.kind(anchor) is CellKind.DISTILLATION
    assert any(n in route for n in grid.neighbors(anchor))


@pytest.mark.parametrize("num_qubits", [1, 2, 3, 5, 8, 10, 16, 17, 33, 50, 100, 200])
def test_layout_invariants(num_qubits):
    check_invariants(build_layout(num_qubits))


def test_single_qubit_layout():
    grid = build_layout(1)
    data = grid.data_cells()
    assert len(data) == 1
    route = set(grid.route_cells())
    assert any(n in route for n in grid.neighbors(data[0]))
    assert any(grid.kind(c) is CellKind.DISTILLATION for c in grid.cell_kinds)


def test_rejects_zero_qubits():
    with pytest.raises(ValueError):
        build_layout(0)


def test_fig2_fixture_footprint_64():
    grid = build_layout(FIG2_QUBITS, FIG2_CONFIG)
    assert grid.footprint == 64
    assert len(grid.data_cells()) == FIG2_QUBITS
    counts = grid.counts()
    assert counts[CellKind.DISTILLATION] == 28
    check_invariants(grid)


def test_ancilla_overhead_band():
    for num_qubits in (10, 50, 100, 200):
        counts = build_layout(num_qubits).counts()
        ratio = counts[CellKind.ANCILLA_ROUTE] / counts[CellKind.DATA]
        assert 0.35 <= ratio <= 0.75, (num_qubits, ratio)


def test_ancilla_overhead_band_full_sweep():
    for num_qubits in range(10, 201):
        counts = build_layout(num_qubits).counts()
        ratio = counts[CellKind.ANCILLA_ROUTE] / counts[CellKind.DATA]
        assert 0.35 <= ratio <= 0.75, (num_qubits, ratio)


def test_footprint_monotone():
    previous = 0
    for num_qubits in range(1, 241):
        footprint = build_layout(num_qubits).footprint
        assert footprint >= previous, num_qubits
        previous = footprint


def test_build_layout_deterministic():
    a, b = build_layout(23), build_layout(23)
    assert a.cell_kinds == b.cell_kinds and a.qubit_to_cell == b.qubit_to_cell


def test_ancilla_graph_connected_and_four_adjacent():
    grid = build_layout(37)
    graph = ancilla_graph(grid)
    route = set(grid.route_cells())
    assert set(graph) == route
    for cell, neighbors in graph.items():
        for n in neighbors:
            assert n in route
            assert abs(n[0] - cell[0]) + abs(n[1] - cell[1]) == 1
    start = next(iter(graph))
    assert flood_fill(grid, start, route) == route


def test_ancilla_graph_single_qubit():
    graph = ancilla_graph(build_layout(1))
    assert len(graph) >= 1


def test_layout_doc_and_ascii():
    grid = build_layout(5)
    doc = layout_to_doc(grid)
    assert doc["version"] == 1
    assert doc["dims"] == [grid.width, grid.height]
    assert len(doc["cells"]) == grid.footprint
    assert set(doc["qubits"]) == {str(q) for q in range(5)}
    art = layout_ascii(grid)
    assert art.count("D") == 5
    assert len(art.splitlines()) == grid.height


def test_data_cells_count_equals_qubits():
    for num_qubits in (1, 4, 9, 31, 64):
        grid = build_layout(num_qubits)
        assert len(grid.data_cells()) == num_qubits


def test_config_validation():
    with pytest.raises(ValueError):
        LayoutConfig(data_row_width=0)
