"""Gate-level circuit model: the text format, a parser/serializer pair, and the
seeded random-circuit generator used for benchmarking.

Circuit files are line oriented: a `qubits <n>` header followed by one gate per
line (`H 0`, `CNOT 0 1`, `RZ 2 0.7853981633974483`, ...). `#` starts a comment
and blank lines are ignored.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum

TWO_PI = 2.0 * math.pi


class CircuitFormatError(ValueError):
    """Raised on malformed circuit text; the message carries the line number."""


class GateKind(Enum):
    H = "H"
    S = "S"
    SDAG = "SDG"
    T = "T"
    TDAG = "TDG"
    X = "X"
    Z = "Z"
    CNOT = "CNOT"
    RZ = "RZ"

    @property
    def num_qubits(self) -> int:
        return 2 if self is GateKind.CNOT else 1

    @property
    def has_angle(self) -> bool:
        return self is GateKind.RZ


_TOKEN_TO_KIND = {k.value: k for k in GateKind}


def _normalize_angle(angle: float) -> float:
    # RZ has period 4*pi as a matrix; fold into (-2*pi, 2*pi].
    folded = math.remainder(angle, 2.0 * TWO_PI)
    if folded <= -TWO_PI:
        folded += 2.0 * TWO_PI
    return folded


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if len(self.qubits) != self.kind.num_qubits:
            raise ValueError(f"{self.kind.value} expects {self.kind.num_qubits} qubit(s), got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit operands in {self.kind.value}: {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if self.kind.has_angle:
            if self.angle is None:
                raise ValueError("RZ requires an angle")
            object.__setattr__(self, "angle", _normalize_angle(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{self.kind.value} carries no angle")

    @classmethod
    def h(cls, q: int) -> "Gate":
        return cls(GateKind.H, (q,))

    @classmethod
    def s(cls, q: int) -> "Gate":
        return cls(GateKind.S, (q,))

    @classmethod
    def sdg(cls, q: int) -> "Gate":
        return cls(GateKind.SDAG, (q,))

    @classmethod
    def t(cls, q: int) -> "Gate":
        return cls(GateKind.T, (q,))

    @classmethod
    def tdg(cls, q: int) -> "Gate":
        return cls(GateKind.TDAG, (q,))

    @classmethod
    def x(cls, q: int) -> "Gate":
        return cls(GateKind.X, (q,))

    @classmethod
    def z(cls, q: int) -> "Gate":
        return cls(GateKind.Z, (q,))

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def rz(cls, q: int, angle: float) -> "Gate":
        return cls(GateKind.RZ, (q,), angle)


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.num_qubits < 0:
            raise ValueError("num_qubits must be non-negative")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in g.qubits:
                if q >= self.num_qubits:
                    raise ValueError(f"qubit index {q} out of range for {self.num_qubits}-qubit circuit")

    @property
    def t_count(self) -> int:
        return sum(1 for g in self.gates if g.kind in (GateKind.T, GateKind.TDAG))


def parse_circuit(text: str) -> Circuit:
    """Parse the line format into a Circuit; errors report 1-based line numbers."""
    num_qubits: int | None = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if num_qubits is None:
            if parts[0] != "qubits" or len(parts) != 2:
                raise CircuitFormatError(f"line {lineno}: expected 'qubits <n>' header, got {raw!r}")
            try:
                num_qubits = int(parts[1])
            except ValueError:
                raise CircuitFormatError(f"line {lineno}: qubit count {parts[1]!r} is not an integer") from None
            if num_qubits < 0:
                raise CircuitFormatError(f"line {lineno}: qubit count must be non-negative")
            continue
        kind = _TOKEN_TO_KIND.get(parts[0])
        if kind is None:
            raise CircuitFormatError(f"line {lineno}: unknown gate {parts[0]!r}")
        expected = kind.num_qubits + (1 if kind.has_angle else 0)
        if len(parts) - 1 != expected:
            raise CircuitFormatError(f"line {lineno}: {kind.value} expects {expected} operand(s)")
        try:
            qubits = tuple(int(p) for p in parts[1 : 1 + kind.num_qubits])
        except ValueError:
            raise CircuitFormatError(f"line {lineno}: non-integer qubit operand in {raw!r}") from None
        angle = None
        if kind.has_angle:
            try:
                angle = float(parts[-1])
            except ValueError:
                raise CircuitFormatError(f"line {lineno}: bad angle {parts[-1]!r}") from None
        for q in qubits:
            if q < 0 or q >= num_qubits:
                raise CircuitFormatError(f"line {lineno}: qubit index {q} out of range (qubits {num_qubits})")
        try:
            gates.append(Gate(kind, qubits, angle))
        except ValueError as exc:
            raise CircuitFormatError(f"line {lineno}: {exc}") from None
    if num_qubits is None:
        raise CircuitFormatError("missing 'qubits <n>' header")
    return Circuit(num_qubits, tuple(gates))


def serialize_circuit(circuit: Circuit) -> str:
    """Inverse of parse_circuit: parse_circuit(serialize_circuit(c)) == c."""
    lines = [f"qubits {circuit.num_qubits}"]
    for g in circuit.gates:
        parts = [g.kind.value, *map(str, g.qubits)]
        if g.kind.has_angle:
            parts.append(repr(g.angle))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


_CLIFFORD_POOL = (GateKind.H, GateKind.S, GateKind.X, GateKind.Z, GateKind.CNOT)


def generate_random_circuit(num_qubits: int, num_gates: int, t_fraction: float, seed: int) -> Circuit:
    """Seeded random Clifford+T circuit with an exact T-gate quota.

    round(t_fraction * num_gates) gates (round-half-up) are T; the rest are
    drawn uniformly from {H, S, X, Z, CNOT} with uniform distinct operands.
    Uses random.Random (MT19937) so identical arguments reproduce the circuit
    byte-for-byte on any platform.
    """
    if num_qubits < 1:
        raise ValueError("num_qubits must be >= 1")
    if not 0.0 <= t_fraction <= 1.0:
        raise ValueError(f"t_fraction must lie in [0, 1], got {t_fraction}")
    rng = random.Random(seed)
    t_quota = math.floor(t_fraction * num_gates + 0.5)
    t_slots = set(rng.sample(range(num_gates), t_quota)) if num_gates else set()
    pool = _CLIFFORD_POOL if num_qubits >= 2 else tuple(k for k in _CLIFFORD_POOL if k is not GateKind.CNOT)
    gates = []
    for i in range(num_gates):
        if i in t_slots:
            gates.append(Gate.t(rng.randrange(num_qubits)))
            continue
        kind = pool[rng.randrange(len(pool))]
        if kind is GateKind.CNOT:
            control, target = rng.sample(range(num_qubits), 2)
            gates.append(Gate.cnot(control, target))
        else:
            gates.append(Gate(kind, (rng.randrange(num_qubits),)))
    return Circuit(num_qubits, tuple(gates))
