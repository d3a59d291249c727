"""Scheduling of lowered instruction streams onto the layout.

Instructions execute strictly one at a time (single multi-body measurement in
flight); the magic-state factory is the only concurrent activity and is
prefetched greedily: a distillation round starts as soon as its output cell is
free and an unserved RequestMagicState exists downstream. The result is the
dense 3D cuboid record (footprint x steps) plus the per-instruction schedule.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from .boundaries import (
    DEFAULT_ORIENTATION,
    BoundaryType,
    PatchOrientation,
    Side,
    ensure_orientation,
    required_boundary,
)
from .layout import Cell, CellKind, LayoutGrid
from .lowering import (
    LoweredProgram,
    Patch,
    PatchKind,
    SurgeryOp,
    SurgeryOpKind,
)
from .routing import NoRouteError, RoutePath, astar_route


class CompileError(Exception):
    def __init__(self, message: str, op_index: int | None = None):
        self.op_index = op_index
        if op_index is not None:
            message = f"instruction {op_index}: {message}"
        super().__init__(message)


class CuboidKind(Enum):
    DATA_IDLE = "DataIdle"
    DATA_ACTIVE = "DataActive"
    ROUTE_ACTIVE = "RouteActive"
    DISTILLATION_ACTIVE = "DistillationActive"
    MAGIC_BUFFER = "MagicBuffer"
    VACANT = "Vacant"


_KIND_CODES = {kind: code for code, kind in enumerate(CuboidKind)}
_CODE_KINDS = {code: kind for kind, code in _KIND_CODES.items()}


@dataclass(frozen=True)
class Cuboid:
    x: int
    y: int
    t: int
    kind: CuboidKind
    op_id: int | None
    side_boundaries: tuple[BoundaryType, BoundaryType, BoundaryType, BoundaryType] | None


@dataclass(frozen=True)
class ScheduledOp:
    op_index: int | None
    label: str
    start: int
    duration: int
    route: tuple[Cell, ...] = ()


@dataclass
class MagicStateBuffer:
    """Single-slot factory output: at most one distilled state exists, and
    production implies the slot is empty."""

    available: int = 0
    producing: bool = False
    steps_remaining: int = 0

    def check(self):
        assert self.available <= 1
        assert not (self.producing and self.available)


@dataclass(frozen=True)
class ScheduleConfig:
    distillation_steps: int = 10
    measure_steps: int = 1
    h_steps: int = 1
    s_steps: int = 2
    init_steps: int = 1
    rotation_steps: int = 1

    def __post_init__(self):
        if min(
            self.distillation_steps,
            self.measure_steps,
            self.h_steps,
            self.s_steps,
            self.init_steps,
            self.rotation_steps,
        ) < 1:
            raise ValueError("all step counts must be >= 1")


DEFAULT_SCHEDULE_CONFIG = ScheduleConfig()

_SIDE_BY_DELTA = {(0, -1): Side.N, (1, 0): Side.E, (0, 1): Side.S, (-1, 0): Side.W}


@dataclass
class Assembly:
    layout: LayoutGrid
    num_steps: int
    schedule: tuple[ScheduledOp, ...]
    kind_grid: np.ndarray  # uint8 [steps, height, width]
    op_grid: np.ndarray  # int32 [steps, height, width], -1 for none
    orientation_history: dict[int, tuple[tuple[int, PatchOrientation], ...]]

    @property
    def footprint(self) -> int:
        return self.layout.footprint

    @property
    def volume(self) -> int:
        return self.footprint * self.num_steps

    def cuboid_count(self) -> int:
        return int(self.kind_grid.size)

    def kind_at(self, x: int, y: int, t: int) -> CuboidKind:
        return _CODE_KINDS[int(self.kind_grid[t, y, x])]

    def op_at(self, x: int, y: int, t: int) -> int | None:
        op = int(self.op_grid[t, y, x])
        return None if op < 0 else op

    def orientation_at(self, qubit: int, t: int) -> PatchOrientation:
        history = self.orientation_history[qubit]
        current = history[0][1]
        for eff_step, orientation in history:
            if eff_step <= t:
                current = orientation
            else:
                break
        return current

    def iter_cuboids(self) -> Iterator[Cuboid]:
        """All footprint x steps cuboids in (t, y, x) order."""
        cell_qubit = {cell: q for q, cell in self.layout.qubit_to_cell.items()}
        for t in range(self.num_steps):
            for y in range(self.layout.height):
                for x in range(self.layout.width):
                    kind = _CODE_KINDS[int(self.kind_grid[t, y, x])]
                    op = int(self.op_grid[t, y, x])
                    sides = None
                    qubit = cell_qubit.get((x, y))
                    if qubit is not None:
                        sides = self.orientation_at(qubit, t).sides()
                    yield Cuboid(x, y, t, kind, None if op < 0 else op, sides)


def assembly_volume(assembly: Assembly) -> int:
    """footprint x num_steps; identical to the cuboid count by construction."""
    return assembly.volume


@dataclass
class _Event:
    start: int
    end: int
    cell: Cell
    kind: CuboidKind
    op_id: int | None


class _Scheduler:
    def __init__(self, prog: LoweredProgram, grid: LayoutGrid, cfg: ScheduleConfig):
        self.prog = prog
        self.grid = grid
        self.cfg = cfg
        self.ops = prog.ops
        self.events: list[_Event] = []
        self.sched: list[ScheduledOp] = []
        self.live: dict[Patch, Cell] = {}
        self.orient: dict[int, PatchOrientation] = {
            q: DEFAULT_ORIENTATION for q in grid.qubit_to_cell
        }
        self.history: dict[int, list[tuple[int, PatchOrientation]]] = {
            q: [(0, DEFAULT_ORIENTATION)] for q in grid.qubit_to_cell
        }
        self.t_free = 0
        self.anchor_free_at = 0
        self.buffer = MagicStateBuffer()
        # Per live magic patch: (request op index, next uncovered step).
        self.magic_state: dict[Patch, tuple[int, int]] = {}
        self.dist_cells = tuple(
            sorted(
                (c for c, k in grid.cell_kinds.items() if k is CellKind.DISTILLATION),
                key=lambda c: (c[1], c[0]),
            )
        )

    # -- resolution helpers ------------------------------------------------

    def cell_of(self, patch: Patch, op_index: int) -> Cell:
        if patch.is_data:
            cell = self.grid.qubit_to_cell.get(patch.index)
            if cell is None:
                raise CompileError(f"qubit {patch.index} is not mapped in the layout", op_index)
            return cell
        cell = self.live.get(patch)
        if cell is None:
            raise CompileError(f"patch {patch} is not alive", op_index)
        return cell

    def occupied_except(self, endpoints: set[Patch]) -> set[Cell]:
        return {cell for p, cell in self.live.items() if p not in endpoints}

    def facing_side(self, own: Cell, toward: Cell) -> Side:
        delta = (toward[0] - own[0], toward[1] - own[1])
        side = _SIDE_BY_DELTA.get(delta)
        if side is None:
            raise CompileError(f"cells {own} and {toward} are not adjacent")
        return side

    def measure_sides(self, cells: tuple[Cell, Cell], route: RoutePath) -> tuple[Side, Side]:
        first = route.cells[0] if route.cells else cells[1]
        last = route.cells[-1] if route.cells else cells[0]
        return self.facing_side(cells[0], first), self.facing_side(cells[1], last)

    def scratch_for(self, cell: Cell, blocked: set[Cell]) -> Cell | None:
        taken = set(self.live.values()) | blocked
        for n in sorted(self.grid.neighbors(cell), key=lambda c: (c[1], c[0])):
            if self.grid.kind(n) is CellKind.ANCILLA_ROUTE and n not in taken:
                return n
        return None

    # -- primitive emitters --------------------------------------------------

    def rotate(self, qubit: int, trigger: int, blocked: set[Cell] = frozenset()) -> None:
        cell = self.grid.qubit_to_cell[qubit]
        scratch = self.scratch_for(cell, set(blocked))
        if scratch is None:
            raise CompileError(f"no free ancilla cell to rotate qubit {qubit}", trigger)
        start = self.t_free
        dur = self.cfg.rotation_steps
        self.t_free = start + dur
        self.events.append(_Event(start, start + dur, cell, CuboidKind.DATA_ACTIVE, trigger))
        self.events.append(_Event(start, start + dur, scratch, CuboidKind.ROUTE_ACTIVE, trigger))
        self.orient[qubit] = self.orient[qubit].rotated()
        self.history[qubit].append((start + dur, self.orient[qubit]))
        self.sched.append(ScheduledOp(trigger, "rotate", start, dur, (scratch,)))

    def rotations_for(
        self,
        op_index: int,
        op: SurgeryOp,
        cells: tuple[Cell, Cell],
        route: RoutePath,
        orientations: dict[int, PatchOrientation],
    ) -> list[int]:
        """Qubits (in endpoint order) whose boundary must rotate before this
        measurement, updating `orientations` in place."""
        needed = required_boundary(op.kind)
        sides = self.measure_sides(cells, route)
        todo: list[int] = []
        for patch, side in zip(op.patches, sides):
            if not patch.is_data:
                continue
            new_orientation, rotate = ensure_orientation(orientations[patch.index], side, needed)
            if rotate:
                orientations[patch.index] = new_orientation
                todo.append(patch.index)
        return todo

    # -- instruction handlers ------------------------------------------------

    def handle_init(self, i: int, op: SurgeryOp) -> None:
        patch = op.patches[0]
        block = self.ancilla_block(i, patch)
        chosen, rotation_plan = self.place_ancilla(i, patch, block)
        for qubit, trigger in rotation_plan:
            self.rotate(qubit, trigger, blocked={chosen})
        start = self.t_free
        dur = self.cfg.init_steps
        self.t_free = start + dur
        self.live[patch] = chosen
        self.events.append(_Event(start, start + dur, chosen, CuboidKind.ROUTE_ACTIVE, i))
        self.sched.append(ScheduledOp(i, op.kind.value, start, dur, ()))

    def ancilla_block(self, i: int, patch: Patch) -> list[tuple[int, SurgeryOp]]:
        """Two-patch measurements touching `patch` up to its readout."""
        block: list[tuple[int, SurgeryOp]] = []
        for j in range(i + 1, len(self.ops)):
            oj = self.ops[j]
            if patch not in oj.patches:
                continue
            if oj.kind in (SurgeryOpKind.MEASURE_ZZ, SurgeryOpKind.MEASURE_XX):
                block.append((j, oj))
            elif oj.kind in (SurgeryOpKind.MEASURE_PATCH_Z, SurgeryOpKind.MEASURE_PATCH_X):
                break
        return block

    def place_ancilla(
        self, i: int, patch: Patch, block: list[tuple[int, SurgeryOp]]
    ) -> tuple[Cell, list[tuple[int, int]]]:
        """Pick the ancilla's cell and the boundary rotations its merges will
        need. Candidates are tried nearest-to-first-partner first; a candidate
        is rejected when any merge cannot route or a needed rotation has no
        free scratch cell (the q=2 column layout makes this a real constraint).
        """
        partner_cell: Cell | None = None
        for j, oj in block:
            other = next((p for p in oj.patches if p != patch), None)
            if other is not None and other.is_data:
                partner_cell = self.cell_of(other, j)
                break
        taken = set(self.live.values())
        candidates = [c for c in self.grid.route_cells() if c not in taken]
        if partner_cell is not None:
            px, py = partner_cell
            candidates.sort(key=lambda c: (abs(c[0] - px) + abs(c[1] - py), c[1], c[0]))
        for cand in candidates:
            rotation_plan: list[tuple[int, int]] = []
            sim_orient = dict(self.orient)
            feasible = True
            for j, oj in block:
                cells = tuple(
                    cand if p == patch else self.cell_of(p, j) for p in oj.patches
                )
                occupied = self.occupied_except(set(oj.patches))
                try:
                    route = astar_route(self.grid, cells[0], cells[1], occupied)
                except NoRouteError:
                    feasible = False
                    break
                for qubit in self.rotations_for(j, oj, cells, route, sim_orient):
                    scratch = self.scratch_for(self.grid.qubit_to_cell[qubit], {cand})
                    if scratch is None:
                        feasible = False
                        break
                    rotation_plan.append((qubit, j))
                if not feasible:
                    break
            if feasible:
                return cand, rotation_plan
        raise CompileError("no feasible cell for ancilla patch", i)

    def handle_two_patch_measure(self, i: int, op: SurgeryOp) -> None:
        cells = (self.cell_of(op.patches[0], i), self.cell_of(op.patches[1], i))
        occupied = self.occupied_except(set(op.patches))
        try:
            route = astar_route(self.grid, cells[0], cells[1], occupied)
        except NoRouteError:
            # Occupancy cannot change while this instruction waits (nothing
            # else is in flight), so a deferred retry would spin forever.
            raise CompileError("no ancilla route available for measurement", i) from None
        for qubit in self.rotations_for(i, op, cells, route, dict(self.orient)):
            self.rotate(qubit, i)
        start = self.t_free
        dur = self.cfg.measure_steps
        self.t_free = start + dur
        for patch, cell in zip(op.patches, cells):
            self.mark_patch(patch, cell, start, dur, i)
        for cell in route.cells:
            self.events.append(_Event(start, start + dur, cell, CuboidKind.ROUTE_ACTIVE, i))
        self.sched.append(ScheduledOp(i, op.kind.value, start, dur, route.cells))

    def mark_patch(self, patch: Patch, cell: Cell, start: int, dur: int, op_id: int) -> None:
        if patch.is_data:
            kind = CuboidKind.DATA_ACTIVE
        elif patch.kind is PatchKind.MAGIC:
            kind = CuboidKind.MAGIC_BUFFER
            self.cover_magic(patch, start)
            request, _ = self.magic_state[patch]
            self.magic_state[patch] = (request, start + dur)
        else:
            kind = CuboidKind.ROUTE_ACTIVE
        self.events.append(_Event(start, start + dur, cell, kind, op_id))

    def cover_magic(self, patch: Patch, until: int) -> None:
        """Fill the buffered-state gap [covered_so_far, until) on the anchor."""
        request, covered = self.magic_state[patch]
        if until > covered:
            self.events.append(
                _Event(covered, until, self.grid.distillation_anchor, CuboidKind.MAGIC_BUFFER, request)
            )
            self.magic_state[patch] = (request, until)

    def handle_patch_measure(self, i: int, op: SurgeryOp) -> None:
        patch = op.patches[0]
        cell = self.cell_of(patch, i)
        start = self.t_free
        dur = self.cfg.measure_steps
        self.t_free = start + dur
        self.mark_patch(patch, cell, start, dur, i)
        self.sched.append(ScheduledOp(i, op.kind.value, start, dur, ()))
        if patch.kind is PatchKind.ANCILLA:
            del self.live[patch]
        elif patch.kind is PatchKind.MAGIC:
            del self.live[patch]
            del self.magic_state[patch]
            self.anchor_free_at = start + dur
            self.buffer.available = 0
            self.buffer.check()

    def handle_request(self, i: int, op: SurgeryOp) -> None:
        patch = op.patches[0]
        if any(p.kind is PatchKind.MAGIC for p in self.live):
            raise CompileError("magic buffer already claimed by a live magic state", i)
        start = self.anchor_free_at
        completion = start + self.cfg.distillation_steps
        self.buffer.producing = True
        self.buffer.check()
        for cell in self.dist_cells:
            self.events.append(_Event(start, completion, cell, CuboidKind.DISTILLATION_ACTIVE, i))
        self.sched.append(ScheduledOp(i, "Distillation", start, self.cfg.distillation_steps, ()))
        # Completed output is claimed immediately by this blocked request.
        self.buffer.producing = False
        self.buffer.check()
        self.t_free = max(self.t_free, completion)
        self.live[patch] = self.grid.distillation_anchor
        self.magic_state[patch] = (i, completion)
        self.sched.append(ScheduledOp(i, op.kind.value, self.t_free, 0, ()))

    def handle_direct(self, i: int, op: SurgeryOp, dur: int) -> None:
        patch = op.patches[0]
        cell = self.cell_of(patch, i)
        start = self.t_free
        self.t_free = start + dur
        self.mark_patch(patch, cell, start, dur, i)
        self.sched.append(ScheduledOp(i, op.kind.value, start, dur, ()))
        if op.kind is SurgeryOpKind.DIRECT_H and patch.is_data:
            self.orient[patch.index] = self.orient[patch.index].toggled()
            self.history[patch.index].append((start + dur, self.orient[patch.index]))

    def handle_noop(self, i: int, op: SurgeryOp) -> None:
        self.sched.append(ScheduledOp(i, op.kind.value, self.t_free, 0, ()))

    def run(self) -> Assembly:
        for i, op in enumerate(self.ops):
            kind = op.kind
            if kind in (SurgeryOpKind.INIT_ANCILLA_PLUS, SurgeryOpKind.INIT_ANCILLA_ZERO):
                self.handle_init(i, op)
            elif kind in (SurgeryOpKind.MEASURE_ZZ, SurgeryOpKind.MEASURE_XX):
                self.handle_two_patch_measure(i, op)
            elif kind in (SurgeryOpKind.MEASURE_PATCH_Z, SurgeryOpKind.MEASURE_PATCH_X):
                self.handle_patch_measure(i, op)
            elif kind is SurgeryOpKind.REQUEST_MAGIC_STATE:
                self.handle_request(i, op)
            elif kind is SurgeryOpKind.DIRECT_H:
                self.handle_direct(i, op, self.cfg.h_steps)
            elif kind in (SurgeryOpKind.DIRECT_S, SurgeryOpKind.CONDITIONAL_S):
                self.handle_direct(i, op, self.cfg.s_steps)
            elif kind is SurgeryOpKind.ROTATE_PATCH:
                if not op.patches[0].is_data:
                    raise CompileError("only data patches rotate", i)
                self.rotate(op.patches[0].index, i)
            else:  # conditional Paulis and raw frame tracks: classical, zero volume
                self.handle_noop(i, op)
        # Defensive: a magic state never consumed stays on the anchor.
        num_steps = max((e.end for e in self.events), default=0)
        for patch in list(self.magic_state):
            self.cover_magic(patch, num_steps)
        return self.materialize(num_steps)

    def materialize(self, num_steps: int) -> Assembly:
        h, w = self.grid.height, self.grid.width
        kind_grid = np.full((num_steps, h, w), _KIND_CODES[CuboidKind.VACANT], dtype=np.uint8)
        op_grid = np.full((num_steps, h, w), -1, dtype=np.int32)
        for (x, y) in self.grid.qubit_to_cell.values():
            kind_grid[:, y, x] = _KIND_CODES[CuboidKind.DATA_IDLE]
        for ev in self.events:
            if ev.start >= ev.end:
                continue
            kind_grid[ev.start : ev.end, ev.cell[1], ev.cell[0]] = _KIND_CODES[ev.kind]
            op_grid[ev.start : ev.end, ev.cell[1], ev.cell[0]] = -1 if ev.op_id is None else ev.op_id
        history = {q: tuple(hist) for q, hist in self.history.items()}
        return Assembly(
            layout=self.grid,
            num_steps=num_steps,
            schedule=tuple(self.sched),
            kind_grid=kind_grid,
            op_grid=op_grid,
            orientation_history=history,
        )


def schedule(
    prog: LoweredProgram, grid: LayoutGrid, cfg: ScheduleConfig = DEFAULT_SCHEDULE_CONFIG
) -> Assembly:
    """Schedule `prog` onto `grid`: boundary rotations inserted as needed, one
    route-consuming instruction at a time, greedy distillation prefetch."""
    for q in range(prog.num_qubits):
        if q not in grid.qubit_to_cell:
            raise CompileError(f"qubit {q} has no cell in the layout")
    return _Scheduler(prog, grid, cfg).run()
