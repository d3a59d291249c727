import math
import random

import numpy as np
import pytest

from oracles import MAT, check_program_on_state, circuit_unitary
from surgekit.circuit import Circuit, Gate, GateKind, generate_random_circuit
from surgekit.lowering import (
    Condition,
    LoweredProgram,
    LoweringError,
    Patch,
    PauliFrame,
    SurgeryOp,
    SurgeryOpKind,
    lower_circuit,
    lower_cnot,
    lower_gate,
    lower_t,
)

CNOT_MATRIX = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
RNG = np.random.default_rng(20240809)


def random_state(n: int) -> np.ndarray:
    v = RNG.normal(size=2**n) + 1j * RNG.normal(size=2**n)
    return v / np.linalg.norm(v)


def as_program(ops, num_qubits, magic=0) -> LoweredProgram:
    return LoweredProgram(num_qubits, tuple(ops), PauliFrame.identity(num_qubits), magic)


# -- structure -----------------------------------------------------------


def test_lower_cnot_shape():
    ops = lower_cnot(0, 1)
    kinds = [op.kind for op in ops]
    assert kinds == [
        SurgeryOpKind.INIT_ANCILLA_PLUS,
        SurgeryOpKind.MEASURE_ZZ,
        SurgeryOpKind.MEASURE_XX,
        SurgeryOpKind.MEASURE_PATCH_Z,
        SurgeryOpKind.CONDITIONAL_PAULI,
        SurgeryOpKind.CONDITIONAL_PAULI,
    ]
    ancilla = ops[0].patches[0]
    assert not ancilla.is_data
    assert ancilla in ops[1].patches and ancilla in ops[2].patches


def test_lower_cnot_rejects_equal_operands():
    with pytest.raises(LoweringError):
        lower_cnot(2, 2)


def test_lower_t_shape():
    ops = lower_t(0)
    kinds = [op.kind for op in ops]
    assert kinds.count(SurgeryOpKind.REQUEST_MAGIC_STATE) == 1
    assert kinds.count(SurgeryOpKind.MEASURE_ZZ) == 1
    assert kinds.count(SurgeryOpKind.CONDITIONAL_S) == 1


def test_lower_tdag_same_shape_adjusted_condition():
    t_ops = lower_t(0)
    td_ops = lower_t(0, adjoint=True)
    assert [op.kind for op in t_ops] == [op.kind for op in td_ops]
    assert t_ops[3].condition != td_ops[3].condition


def test_lower_gate_direct_and_tracked():
    assert [op.kind for op in lower_gate(Gate.h(0))] == [SurgeryOpKind.DIRECT_H]
    assert [op.kind for op in lower_gate(Gate.s(0))] == [SurgeryOpKind.DIRECT_S]
    assert [op.kind for op in lower_gate(Gate.sdg(0))] == [
        SurgeryOpKind.DIRECT_S,
        SurgeryOpKind.TRACK_PAULI_Z,
    ]
    assert [op.kind for op in lower_gate(Gate.x(3))] == [SurgeryOpKind.TRACK_PAULI_X]
    assert [op.kind for op in lower_gate(Gate.z(1))] == [SurgeryOpKind.TRACK_PAULI_Z]


def test_lower_gate_rz_quarter_turn_is_t():
    assert lower_gate(Gate.rz(0, math.pi / 4)) == lower_gate(Gate.t(0))


def test_lower_gate_rz_exact_multiples():
    assert lower_gate(Gate.rz(0, math.pi / 2)) == lower_gate(Gate.s(0))
    assert lower_gate(Gate.rz(0, -math.pi / 4)) == lower_gate(Gate.tdg(0))
    assert lower_gate(Gate.rz(0, 0.0)) == []


def test_condition_sources_reference_earlier_measurements():
    ops = lower_cnot(0, 1) + [op.shifted(6) for op in lower_t(1, magic_index=0, base_index=0)]
    prog = as_program(ops, 2, magic=1)
    for i, op in enumerate(prog.ops):
        if op.condition:
            for src in op.condition.sources:
                assert src < i and prog.ops[src].is_measurement


def test_invalid_condition_rejected():
    bad = SurgeryOp(
        SurgeryOpKind.CONDITIONAL_PAULI, (Patch.data(0),), pauli="X", condition=Condition((5,))
    )
    with pytest.raises(LoweringError):
        as_program([bad], 1)


def test_measure_zz_rejects_same_patch():
    with pytest.raises(LoweringError):
        SurgeryOp(SurgeryOpKind.MEASURE_ZZ, (Patch.data(0), Patch.data(0)))


# -- frame discipline ------------------------------------------------------


def test_x_circuit_folds_to_frame():
    prog = lower_circuit(Circuit(1, (Gate.x(0),)))
    assert prog.ops == ()
    assert prog.frame.x_flips == (True,)
    assert prog.frame.z_flips == (False,)


def test_no_track_ops_in_lowered_circuits():
    for seed in range(10):
        circuit = generate_random_circuit(4, 40, 0.3, seed)
        prog = lower_circuit(circuit)
        for op in prog.ops:
            assert op.kind not in (SurgeryOpKind.TRACK_PAULI_X, SurgeryOpKind.TRACK_PAULI_Z)


def test_single_cnot_circuit_is_exactly_lower_cnot():
    prog = lower_circuit(Circuit(2, (Gate.cnot(0, 1),)))
    assert list(prog.ops) == lower_cnot(0, 1)


def test_magic_request_count_matches_t_count():
    for seed in range(6):
        circuit = generate_random_circuit(5, 60, 0.5, seed)
        prog = lower_circuit(circuit)
        requests = sum(1 for op in prog.ops if op.kind is SurgeryOpKind.REQUEST_MAGIC_STATE)
        assert requests == prog.magic_requests == circuit.t_count


def test_lower_circuit_deterministic():
    circuit = generate_random_circuit(6, 50, 0.5, 123)
    assert lower_circuit(circuit) == lower_circuit(circuit)


# -- branch-exhaustive correctness ----------------------------------------


def test_cnot_all_eight_branches():
    prog = as_program(lower_cnot(0, 1), 2)
    for _ in range(3):
        deviation = check_program_on_state(prog, CNOT_MATRIX, random_state(2))
        assert deviation < 1e-9


def test_cnot_reversed_direction():
    swap_cnot = np.eye(4, dtype=complex)[[0, 3, 2, 1]]  # control on qubit 1
    prog = as_program(lower_cnot(1, 0), 2)
    deviation = check_program_on_state(prog, swap_cnot, random_state(2))
    assert deviation < 1e-9


def test_t_all_branches_ideal_magic():
    prog = as_program(lower_t(0), 1, magic=1)
    for _ in range(3):
        assert check_program_on_state(prog, MAT["T"], random_state(1)) < 1e-9


def test_tdag_all_branches_ideal_magic():
    prog = as_program(lower_t(0, adjoint=True), 1, magic=1)
    for _ in range(3):
        assert check_program_on_state(prog, MAT["TDG"], random_state(1)) < 1e-9


def test_random_clifford_word_matches_unitary():
    rng = random.Random(31)
    kinds = [GateKind.H, GateKind.S, GateKind.SDAG, GateKind.X, GateKind.Z]
    for trial in range(5):
        gates = tuple(Gate(rng.choice(kinds), (0,)) for _ in range(20))
        circuit = Circuit(1, gates)
        prog = lower_circuit(circuit)
        deviation = check_program_on_state(prog, circuit_unitary(circuit), random_state(1))
        assert deviation < 1e-9, trial


def test_random_mixed_circuits_all_branches():
    rng = random.Random(77)
    kinds = [GateKind.H, GateKind.S, GateKind.SDAG, GateKind.X, GateKind.Z, GateKind.T, GateKind.TDAG]
    for trial in range(12):
        n = rng.choice([1, 2, 2, 3])
        gates = []
        measurements = 0
        for _ in range(rng.randrange(1, 7)):
            if n >= 2 and rng.random() < 0.3 and measurements <= 6:
                gates.append(Gate.cnot(*rng.sample(range(n), 2)))
                measurements += 3
            else:
                kind = rng.choice(kinds)
                if kind in (GateKind.T, GateKind.TDAG):
                    if measurements > 6:
                        kind = GateKind.S
                    else:
                        measurements += 2
                gates.append(Gate(kind, (rng.randrange(n),)))
        circuit = Circuit(n, tuple(gates))
        prog = lower_circuit(circuit)
        deviation = check_program_on_state(prog, circuit_unitary(circuit), random_state(n))
        assert deviation < 1e-9, (trial, gates)


def test_x_then_t_uses_frame_adjusted_teleportation():
    circuit = Circuit(1, (Gate.x(0), Gate.t(0)))
    prog = lower_circuit(circuit)
    target = MAT["T"] @ MAT["X"]
    assert check_program_on_state(prog, target, random_state(1)) < 1e-9


def test_rz_pi4_circuit_consumes_magic():
    circuit = Circuit(1, (Gate.rz(0, math.pi / 4),))
    prog = lower_circuit(circuit)
    assert prog.magic_requests == 1
    assert check_program_on_state(prog, MAT["T"], random_state(1)) < 1e-9
