"""End-to-end compilation: circuit -> lowered program -> layout -> assembly
-> resource report."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .assembler import Assembly, DEFAULT_SCHEDULE_CONFIG, ScheduleConfig, schedule
from .circuit import Circuit
from .estimate import DEFAULT_ESTIMATOR_CONFIG, EstimatorConfig, ResourceReport, execution_time, physical_qubits
from .layout import DEFAULT_LAYOUT_CONFIG, LayoutConfig, LayoutGrid, build_layout
from .lowering import DEFAULT_LOWERING_CONFIG, LoweredProgram, LoweringConfig, lower_circuit


@dataclass(frozen=True)
class CompileResult:
    circuit: Circuit
    program: LoweredProgram
    layout: LayoutGrid
    assembly: Assembly
    report: ResourceReport


def compile_circuit(
    circuit: Circuit,
    layout_cfg: LayoutConfig = DEFAULT_LAYOUT_CONFIG,
    schedule_cfg: ScheduleConfig = DEFAULT_SCHEDULE_CONFIG,
    lowering_cfg: LoweringConfig = DEFAULT_LOWERING_CONFIG,
    estimator_cfg: EstimatorConfig = DEFAULT_ESTIMATOR_CONFIG,
    layout: LayoutGrid | None = None,
) -> CompileResult:
    """Compile a circuit end to end; preparation_seconds is this call's own
    wall-clock time. A prebuilt `layout` overrides layout_cfg."""
    started = time.perf_counter()
    program = lower_circuit(circuit, lowering_cfg)
    grid = layout if layout is not None else build_layout(max(circuit.num_qubits, 1), layout_cfg)
    assembly = schedule(program, grid, schedule_cfg)
    prep = time.perf_counter() - started
    report = ResourceReport(
        footprint=assembly.footprint,
        num_steps=assembly.num_steps,
        volume=assembly.volume,
        code_distance=estimator_cfg.code_distance,
        physical_qubits=physical_qubits(assembly.footprint, estimator_cfg.code_distance),
        est_execution_seconds=execution_time(assembly, estimator_cfg),
        preparation_seconds=prep,
        qubit_count=circuit.num_qubits,
        gate_count=len(circuit.gates),
        t_count=program.magic_requests,
    )
    return CompileResult(circuit, program, grid, assembly, report)
