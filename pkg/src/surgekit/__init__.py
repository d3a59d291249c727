"""surgekit: compiles Clifford+T circuits to surface-code lattice-surgery
assemblies and estimates the physical resources they need."""

from .circuit import (
    Circuit,
    CircuitFormatError,
    Gate,
    GateKind,
    generate_random_circuit,
    parse_circuit,
    serialize_circuit,
)
from .synthesis import (
    GateSequence,
    SynthesisError,
    base_approximation,
    group_commutator,
    solovay_kitaev,
    trace_distance,
)
from .lowering import (
    Condition,
    LoweredProgram,
    LoweringConfig,
    Patch,
    PauliFrame,
    SurgeryOp,
    SurgeryOpKind,
    lower_circuit,
    lower_cnot,
    lower_gate,
    lower_t,
)
from .boundaries import (
    BoundaryType,
    PatchOrientation,
    Side,
    apply_direct_h,
    ensure_orientation,
    required_boundary,
)
from .layout import CellKind, LayoutConfig, LayoutGrid, ancilla_graph, build_layout
from .routing import NoRouteError, RoutePath, astar_route
from .assembler import (
    Assembly,
    CompileError,
    Cuboid,
    CuboidKind,
    ScheduleConfig,
    assembly_volume,
    schedule,
)
from .estimate import EstimatorConfig, ResourceReport, execution_time, physical_qubits
from .assembly_io import AssemblyDocument, export_assembly, import_assembly
from .bench import BenchmarkTable, run_benchmark
from .pipeline import CompileResult, compile_circuit

__version__ = "0.1.0"

__all__ = [
    "Assembly",
    "AssemblyDocument",
    "BenchmarkTable",
    "BoundaryType",
    "CellKind",
    "Circuit",
    "CircuitFormatError",
    "CompileError",
    "CompileResult",
    "Condition",
    "Cuboid",
    "CuboidKind",
    "EstimatorConfig",
    "Gate",
    "GateKind",
    "GateSequence",
    "LayoutConfig",
    "LayoutGrid",
    "LoweredProgram",
    "LoweringConfig",
    "NoRouteError",
    "Patch",
    "PatchOrientation",
    "PauliFrame",
    "ResourceReport",
    "RoutePath",
    "ScheduleConfig",
    "Side",
    "SurgeryOp",
    "SurgeryOpKind",
    "SynthesisError",
    "ancilla_graph",
    "apply_direct_h",
    "assembly_volume",
    "astar_route",
    "base_approximation",
    "build_layout",
    "compile_circuit",
    "ensure_orientation",
    "execution_time",
    "export_assembly",
    "generate_random_circuit",
    "group_commutator",
    "import_assembly",
    "lower_circuit",
    "lower_cnot",
    "lower_gate",
    "lower_t",
    "parse_circuit",
    "physical_qubits",
    "required_boundary",
    "run_benchmark",
    "schedule",
    "serialize_circuit",
    "solovay_kitaev",
    "trace_distance",
]
