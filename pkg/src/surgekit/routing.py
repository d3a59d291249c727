"""Shortest ancilla paths between patch cells, via A* on the layout grid.

Paths are the interior routing cells a merge consumes; the endpoint patches
themselves are not part of the path. Unit edge costs on the 4-neighborhood
with a Manhattan heuristic keep A* optimal, and ties expand the lower (y, x)
cell first so identical inputs always produce the identical path.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .layout import Cell, CellKind, LayoutGrid


class NoRouteError(Exception):
    """No free ancilla path exists between the endpoints right now."""


@dataclass(frozen=True)
class RoutePath:
    """Interior routing cells from `src` to `dst`, in walk order; empty when
    the endpoints are already 4-adjacent."""

    src: Cell
    dst: Cell
    cells: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)


def _manhattan(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def _adjacent(a: Cell, b: Cell) -> bool:
    return _manhattan(a, b) == 1


def astar_route(
    grid: LayoutGrid, src: Cell, dst: Cell, occupied: Iterable[Cell] = ()
) -> RoutePath:
    """Minimum-length path of free AncillaRoute cells whose ends touch `src`
    and `dst`; raises NoRouteError when none exists under `occupied`."""
    if src == dst:
        raise ValueError("src and dst must differ")
    blocked = set(occupied) | {src, dst}
    if _adjacent(src, dst):
        return RoutePath(src, dst, ())

    def free_route(cell: Cell) -> bool:
        return (
            grid.in_bounds(cell)
            and grid.kind(cell) is CellKind.ANCILLA_ROUTE
            and cell not in blocked
        )

    # Seed with the free routing cells touching src; goal is any cell touching dst.
    open_heap: list[tuple[int, int, int, Cell]] = []
    g_score: dict[Cell, int] = {}
    came_from: dict[Cell, Cell | None] = {}
    for cell in sorted((c for c in grid.neighbors(src) if free_route(c)), key=lambda c: (c[1], c[0])):
        g_score[cell] = 1
        came_from[cell] = None
        h = max(0, _manhattan(cell, dst) - 1)
        heapq.heappush(open_heap, (1 + h, cell[1], cell[0], cell))

    while open_heap:
        _, _, _, current = heapq.heappop(open_heap)
        g = g_score[current]
        if _adjacent(current, dst):
            path = [current]
            while came_from[path[-1]] is not None:
                path.append(came_from[path[-1]])
            path.reverse()
            return RoutePath(src, dst, tuple(path))
        x, y = current
        for nxt in ((x, y - 1), (x + 1, y), (x, y + 1), (x - 1, y)):
            if not free_route(nxt):
                continue
            tentative = g + 1
            if tentative < g_score.get(nxt, 1 << 30):
                g_score[nxt] = tentative
                came_from[nxt] = current
                h = max(0, _manhattan(nxt, dst) - 1)
                heapq.heappush(open_heap, (tentative + h, nxt[1], nxt[0], nxt))
    raise NoRouteError(f"no free ancilla path between {src} and {dst}")


def validate_path(grid: LayoutGrid, path: RoutePath, occupied: Iterable[Cell] = ()) -> None:
    """Assert all RoutePath invariants; raises ValueError on violation."""
    blocked = set(occupied)
    cells = path.cells
    if not cells:
        if not _adjacent(path.src, path.dst):
            raise ValueError("empty interior but endpoints are not adjacent")
        return
    for cell in cells:
        if grid.kind(cell) is not CellKind.ANCILLA_ROUTE:
            raise ValueError(f"interior cell {cell} is not a routing cell")
        if cell in blocked:
            raise ValueError(f"interior cell {cell} is occupied")
    if not _adjacent(cells[0], path.src):
        raise ValueError("path start does not touch src")
    if not _adjacent(cells[-1], path.dst):
        raise ValueError("path end does not touch dst")
    for a, b in zip(cells, cells[1:]):
        if not _adjacent(a, b):
            raise ValueError(f"cells {a} and {b} are not adjacent")
