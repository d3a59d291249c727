"""2D patch layout: data rows, shared ancilla routing rows, and the
distillation region, sized dynamically from the qubit count.

Geometry (x grows right, y grows down):

* Data rows come in pairs that sandwich one ancilla routing row, three grid
  rows per pair; pairs stack vertically. Odd pair populations park the spare
  qubit as an end cap on the routing row itself.
* A vertical trunk of routing cells at x = distillation_width links every
  routing row, and the distillation block sits left of the trunk with its
  output cell touching the trunk's top joint.
* Remaining cells are Unused filler; they still count toward the footprint.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

Cell = tuple[int, int]


class CellKind(Enum):
    DATA = "Data"
    ANCILLA_ROUTE = "AncillaRoute"
    DISTILLATION = "Distillation"
    UNUSED = "Unused"


@dataclass(frozen=True)
class LayoutConfig:
    data_row_width: int = 8
    distillation_width: int = 4
    distillation_height: int = 2

    def __post_init__(self):
        if min(self.data_row_width, self.distillation_width, self.distillation_height) < 1:
            raise ValueError("layout dimensions must be >= 1")


DEFAULT_LAYOUT_CONFIG = LayoutConfig()


@dataclass(frozen=True)
class LayoutGrid:
    width: int
    height: int
    cell_kinds: dict[Cell, CellKind]
    qubit_to_cell: dict[int, Cell]
    distillation_anchor: Cell

    @property
    def footprint(self) -> int:
        return self.width * self.height

    def kind(self, cell: Cell) -> CellKind:
        return self.cell_kinds[cell]

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def neighbors(self, cell: Cell) -> tuple[Cell, ...]:
        x, y = cell
        return tuple(
            c for c in ((x, y - 1), (x + 1, y), (x, y + 1), (x - 1, y)) if self.in_bounds(c)
        )

    def route_cells(self) -> tuple[Cell, ...]:
        return tuple(
            c for c, k in sorted(self.cell_kinds.items(), key=lambda it: (it[0][1], it[0][0]))
            if k is CellKind.ANCILLA_ROUTE
        )

    def data_cells(self) -> tuple[Cell, ...]:
        return tuple(
            c for c, k in sorted(self.cell_kinds.items(), key=lambda it: (it[0][1], it[0][0]))
            if k is CellKind.DATA
        )

    def counts(self) -> dict[CellKind, int]:
        out = {k: 0 for k in CellKind}
        for kind in self.cell_kinds.values():
            out[kind] += 1
        return out


def _pair_populations(num_qubits: int, row_width: int) -> list[int]:
    # Two data rows per pair; an odd population parks its spare on the route
    # row as an end cap, which never widens the grid past the row width.
    capacity = 2 * row_width
    num_pairs = math.ceil(num_qubits / capacity)
    base, extra = divmod(num_qubits, num_pairs)
    return [base + 1 if p < extra else base for p in range(num_pairs)]


def build_layout(num_qubits: int, cfg: LayoutConfig = DEFAULT_LAYOUT_CONFIG) -> LayoutGrid:
    """Construct the grid for `num_qubits` logical patches.

    Pure function of its arguments; every data cell touches a routing cell,
    the routing cells form one connected component, and the distillation
    output cell touches the routing trunk.
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    populations = _pair_populations(num_qubits, cfg.data_row_width)
    num_pairs = len(populations)
    dw, dh = cfg.distillation_width, cfg.distillation_height

    trunk_x = dw
    data_x0 = dw + 1
    spans = []
    for pop in populations:
        half, cap = divmod(pop, 2)
        spans.append(half + cap)
    width = data_x0 + max(spans)
    height = max(3 * num_pairs, dh)

    kinds: dict[Cell, CellKind] = {
        (x, y): CellKind.UNUSED for y in range(height) for x in range(width)
    }
    for y in range(dh):
        for x in range(dw):
            kinds[(x, y)] = CellKind.DISTILLATION
    anchor_y = min(1, dh - 1)
    anchor = (dw - 1, anchor_y)

    # Trunk: joins every routing row to the distillation output.
    trunk_top = anchor_y
    trunk_bottom = 3 * (num_pairs - 1) + 1
    for y in range(trunk_top, trunk_bottom + 1):
        kinds[(trunk_x, y)] = CellKind.ANCILLA_ROUTE

    qubit_to_cell: dict[int, Cell] = {}
    q = 0
    for p, pop in enumerate(populations):
        y_top, y_route, y_bottom = 3 * p, 3 * p + 1, 3 * p + 2
        half, cap = divmod(pop, 2)
        for x in range(data_x0, data_x0 + half):
            kinds[(x, y_route)] = CellKind.ANCILLA_ROUTE
        for x in range(data_x0, data_x0 + half):
            kinds[(x, y_top)] = CellKind.DATA
            qubit_to_cell[q] = (x, y_top)
            q += 1
        for x in range(data_x0, data_x0 + half):
            kinds[(x, y_bottom)] = CellKind.DATA
            qubit_to_cell[q] = (x, y_bottom)
            q += 1
        if cap:
            cap_cell = (data_x0 + half, y_route)
            kinds[cap_cell] = CellKind.DATA
            qubit_to_cell[q] = cap_cell
            q += 1
    assert q == num_qubits

    return LayoutGrid(width, height, kinds, qubit_to_cell, anchor)


def ancilla_graph(grid: LayoutGrid) -> dict[Cell, tuple[Cell, ...]]:
    """Adjacency over routing cells (4-neighborhood), neighbor lists sorted
    (y, x) for deterministic traversal."""
    route = set(grid.route_cells())
    return {
        cell: tuple(sorted((n for n in grid.neighbors(cell) if n in route), key=lambda c: (c[1], c[0])))
        for cell in sorted(route, key=lambda c: (c[1], c[0]))
    }


def layout_to_doc(grid: LayoutGrid) -> dict:
    """Structured dump (same container style as the assembly export) for
    debugging and for the viewer's ground plane."""
    cells = [
        {"x": x, "y": y, "kind": grid.cell_kinds[(x, y)].value}
        for y in range(grid.height)
        for x in range(grid.width)
    ]
    return {
        "version": 1,
        "dims": [grid.width, grid.height],
        "cells": cells,
        "qubits": {str(q): list(c) for q, c in sorted(grid.qubit_to_cell.items())},
        "distillation_anchor": list(grid.distillation_anchor),
    }


_ASCII = {
    CellKind.DATA: "D",
    CellKind.ANCILLA_ROUTE: "a",
    CellKind.DISTILLATION: "M",
    CellKind.UNUSED: ".",
}


def layout_ascii(grid: LayoutGrid) -> str:
    rows = []
    for y in range(grid.height):
        rows.append("".join(_ASCII[grid.cell_kinds[(x, y)]] for x in range(grid.width)))
    return "\n".join(rows)
