import math

import pytest

from surgekit.circuit import (
    Circuit,
    CircuitFormatError,
    Gate,
    GateKind,
    generate_random_circuit,
    parse_circuit,
    serialize_circuit,
)


def test_parse_basic():
    c = parse_circuit("qubits 2\nH 0\nCNOT 0 1")
    assert c.num_qubits == 2
    assert c.gates == (Gate.h(0), Gate.cnot(0, 1))


def test_parse_empty_circuit():
    assert parse_circuit("qubits 1\n") == Circuit(1, ())


def test_parse_comments_and_blanks():
    text = "# header comment\n\nqubits 3\nT 2  # a t gate\n\nSDG 1\nRZ 0 0.25\n"
    c = parse_circuit(text)
    assert [g.kind for g in c.gates] == [GateKind.T, GateKind.SDAG, GateKind.RZ]
    assert c.gates[2].angle == pytest.approx(0.25)


def test_parse_duplicate_cnot_operands_rejected():
    with pytest.raises(CircuitFormatError, match="line 2"):
        parse_circuit("qubits 1\nCNOT 0 0")


def test_parse_missing_header():
    with pytest.raises(CircuitFormatError, match="header"):
        parse_circuit("H 0\n")


def test_parse_out_of_range_index_reports_line():
    with pytest.raises(CircuitFormatError, match="line 3"):
        parse_circuit("qubits 2\nH 0\nX 2\n")


def test_parse_malformed_lines():
    for text, fragment in [
        ("qubits 2\nH\n", "operand"),
        ("qubits 2\nFOO 0\n", "unknown gate"),
        ("qubits 2\nRZ 0 abc\n", "bad angle"),
        ("qubits two\n", "integer"),
        ("qubits 2\nCNOT 0\n", "operand"),
    ]:
        with pytest.raises(CircuitFormatError, match=fragment):
            parse_circuit(text)


def test_serialize_examples():
    assert serialize_circuit(Circuit(1, ())) == "qubits 1\n"
    assert serialize_circuit(Circuit(2, (Gate.t(1),))) == "qubits 2\nT 1\n"


def test_round_trip_on_random_circuits():
    for seed in range(100):
        c = generate_random_circuit(1 + seed % 12, 30, 0.4, seed)
        assert parse_circuit(serialize_circuit(c)) == c


def test_round_trip_preserves_rz_angle():
    c = Circuit(1, (Gate.rz(0, 0.12345678901234567),))
    assert parse_circuit(serialize_circuit(c)) == c


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate(GateKind.CNOT, (1, 1))
    with pytest.raises(ValueError):
        Gate(GateKind.H, (0, 1))
    with pytest.raises(ValueError):
        Gate(GateKind.H, (0,), angle=1.0)
    with pytest.raises(ValueError):
        Gate(GateKind.RZ, (0,))


def test_rz_angle_normalized_into_range():
    g = Gate.rz(0, 9.0)  # outside (-2pi, 2pi]
    assert -2 * math.pi < g.angle <= 2 * math.pi


def test_circuit_rejects_out_of_range_gate():
    with pytest.raises(ValueError):
        Circuit(1, (Gate.h(1),))


def test_generator_exact_t_quota():
    c = generate_random_circuit(100, 100, 0.5, seed=7)
    assert len(c.gates) == 100
    assert sum(1 for g in c.gates if g.kind is GateKind.T) == 50


def test_generator_round_half_up():
    c = generate_random_circuit(4, 5, 0.5, seed=0)  # 2.5 -> 3
    assert sum(1 for g in c.gates if g.kind is GateKind.T) == 3


def test_generator_empty():
    assert generate_random_circuit(5, 0, 0.5, seed=3) == Circuit(5, ())


def test_generator_deterministic():
    a = serialize_circuit(generate_random_circuit(10, 200, 0.5, 42))
    b = serialize_circuit(generate_random_circuit(10, 200, 0.5, 42))
    assert a == b


def test_generator_seeds_differ():
    a = generate_random_circuit(10, 50, 0.5, 1)
    b = generate_random_circuit(10, 50, 0.5, 2)
    assert a != b


def test_generator_cnot_operands_distinct_and_in_range():
    for seed in range(20):
        c = generate_random_circuit(7, 80, 0.25, seed)
        for g in c.gates:
            assert len(set(g.qubits)) == len(g.qubits)
            assert all(q < 7 for q in g.qubits)


def test_generator_single_qubit_never_emits_cnot():
    c = generate_random_circuit(1, 60, 0.5, seed=5)
    assert all(g.kind is not GateKind.CNOT for g in c.gates)


def test_generator_rejects_bad_args():
    with pytest.raises(ValueError):
        generate_random_circuit(0, 10, 0.5, 0)
    with pytest.raises(ValueError):
        generate_random_circuit(3, 10, 1.5, 0)
    with pytest.raises(ValueError):
        generate_random_circuit(3, 10, -0.1, 0)


def test_generator_never_emits_rz():
    c = generate_random_circuit(9, 120, 0.5, seed=11)
    assert all(g.kind is not GateKind.RZ for g in c.gates)
