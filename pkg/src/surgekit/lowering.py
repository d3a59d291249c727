"""Translation of circuit gates into lattice-surgery instructions.

CNOT becomes the ancilla-mediated merge/split sequence, T consumes a distilled
magic state through a ZZ merge, H and S act directly on the patch, and X/Z
live purely in the classical Pauli frame. Conditional corrections reference
earlier measurement outcomes as XOR parities (optionally inverted), which is
enough to express both the T and T-dagger teleportation wirings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .circuit import Circuit, Gate, GateKind
from . import synthesis

QUARTER_TURN = math.pi / 4


class LoweringError(ValueError):
    pass


class PatchKind(Enum):
    DATA = "data"
    ANCILLA = "ancilla"
    MAGIC = "magic"


@dataclass(frozen=True)
class Patch:
    kind: PatchKind
    index: int

    @classmethod
    def data(cls, qubit: int) -> "Patch":
        return cls(PatchKind.DATA, qubit)

    @classmethod
    def ancilla(cls, index: int) -> "Patch":
        return cls(PatchKind.ANCILLA, index)

    @classmethod
    def magic(cls, index: int) -> "Patch":
        return cls(PatchKind.MAGIC, index)

    @property
    def is_data(self) -> bool:
        return self.kind is PatchKind.DATA


class SurgeryOpKind(Enum):
    INIT_ANCILLA_PLUS = "InitAncillaPlus"
    INIT_ANCILLA_ZERO = "InitAncillaZero"
    MEASURE_ZZ = "MeasureZZ"
    MEASURE_XX = "MeasureXX"
    MEASURE_PATCH_Z = "MeasurePatchZ"
    MEASURE_PATCH_X = "MeasurePatchX"
    DIRECT_H = "DirectH"
    DIRECT_S = "DirectS"
    REQUEST_MAGIC_STATE = "RequestMagicState"
    ROTATE_PATCH = "RotatePatch"
    TRACK_PAULI_X = "TrackPauliX"
    TRACK_PAULI_Z = "TrackPauliZ"
    CONDITIONAL_S = "ConditionalS"
    CONDITIONAL_PAULI = "ConditionalPauli"


MEASUREMENT_KINDS = frozenset(
    {
        SurgeryOpKind.MEASURE_ZZ,
        SurgeryOpKind.MEASURE_XX,
        SurgeryOpKind.MEASURE_PATCH_Z,
        SurgeryOpKind.MEASURE_PATCH_X,
    }
)


@dataclass(frozen=True)
class Condition:
    """Classical control bit: XOR of the referenced measurement outcomes,
    inverted when `invert` is set. Sources are instruction indices."""

    sources: tuple[int, ...]
    invert: bool = False

    def shifted(self, offset: int) -> "Condition":
        return Condition(tuple(s + offset for s in self.sources), self.invert)


@dataclass(frozen=True)
class SurgeryOp:
    kind: SurgeryOpKind
    patches: tuple[Patch, ...] = ()
    pauli: str | None = None
    condition: Condition | None = None

    def __post_init__(self):
        if self.kind in (SurgeryOpKind.MEASURE_ZZ, SurgeryOpKind.MEASURE_XX):
            if len(self.patches) != 2 or self.patches[0] == self.patches[1]:
                raise LoweringError(f"{self.kind.value} needs two distinct patches")
        if self.kind is SurgeryOpKind.CONDITIONAL_PAULI and self.pauli not in ("X", "Z"):
            raise LoweringError("ConditionalPauli needs pauli 'X' or 'Z'")
        if self.kind in (SurgeryOpKind.CONDITIONAL_S, SurgeryOpKind.CONDITIONAL_PAULI):
            if self.condition is None:
                raise LoweringError(f"{self.kind.value} needs a condition")

    @property
    def is_measurement(self) -> bool:
        return self.kind in MEASUREMENT_KINDS

    def shifted(self, offset: int) -> "SurgeryOp":
        if self.condition is None:
            return self
        return SurgeryOp(self.kind, self.patches, self.pauli, self.condition.shifted(offset))


@dataclass(frozen=True)
class PauliFrame:
    """Pending classical X/Z corrections per logical qubit."""

    x_flips: tuple[bool, ...]
    z_flips: tuple[bool, ...]

    @classmethod
    def identity(cls, num_qubits: int) -> "PauliFrame":
        return cls((False,) * num_qubits, (False,) * num_qubits)


@dataclass(frozen=True)
class LoweredProgram:
    num_qubits: int
    ops: tuple[SurgeryOp, ...]
    frame: PauliFrame
    magic_requests: int

    def __post_init__(self):
        for i, op in enumerate(self.ops):
            if op.condition is not None:
                for src in op.condition.sources:
                    if not (0 <= src < i) or not self.ops[src].is_measurement:
                        raise LoweringError(
                            f"op {i} condition source {src} is not an earlier measurement"
                        )


@dataclass(frozen=True)
class LoweringConfig:
    sk_depth: int = synthesis.DEFAULT_DEPTH
    sk_base_len: int = synthesis.DEFAULT_BASE_LEN
    exact_angle_tol: float = 1e-12


DEFAULT_LOWERING_CONFIG = LoweringConfig()


def lower_cnot(control: int, target: int, ancilla_index: int = 0, base_index: int = 0) -> list[SurgeryOp]:
    """Ancilla-mediated CNOT: |+> ancilla, ZZ with the control, XX with the
    target, Z readout; then X on target iff m_zz ^ m_z, Z on control iff m_xx.
    Condition indices are absolute assuming the block starts at `base_index`.
    """
    if control == target:
        raise LoweringError("CNOT control and target must differ")
    a = Patch.ancilla(ancilla_index)
    c, t = Patch.data(control), Patch.data(target)
    i = base_index
    return [
        SurgeryOp(SurgeryOpKind.INIT_ANCILLA_PLUS, (a,)),
        SurgeryOp(SurgeryOpKind.MEASURE_ZZ, (c, a)),
        SurgeryOp(SurgeryOpKind.MEASURE_XX, (a, t)),
        SurgeryOp(SurgeryOpKind.MEASURE_PATCH_Z, (a,)),
        SurgeryOp(SurgeryOpKind.CONDITIONAL_PAULI, (t,), pauli="X", condition=Condition((i + 1, i + 3))),
        SurgeryOp(SurgeryOpKind.CONDITIONAL_PAULI, (c,), pauli="Z", condition=Condition((i + 2,))),
    ]


def lower_t(qubit: int, magic_index: int = 0, base_index: int = 0, adjoint: bool = False) -> list[SurgeryOp]:
    """Teleported T (or T†) consuming one magic state via a ZZ merge.

    T:  S on m_zz, Z on m_x.
    T†: S on not(m_zz), Z on not(m_zz ^ m_x) — the S† correction realized as
    S plus a conditioned Z folded into the parity.
    """
    q = Patch.data(qubit)
    m = Patch.magic(magic_index)
    i = base_index
    if not adjoint:
        s_cond = Condition((i + 1,))
        z_cond = Condition((i + 2,))
    else:
        s_cond = Condition((i + 1,), invert=True)
        z_cond = Condition((i + 1, i + 2), invert=True)
    return [
        SurgeryOp(SurgeryOpKind.REQUEST_MAGIC_STATE, (m,)),
        SurgeryOp(SurgeryOpKind.MEASURE_ZZ, (q, m)),
        SurgeryOp(SurgeryOpKind.MEASURE_PATCH_X, (m,)),
        SurgeryOp(SurgeryOpKind.CONDITIONAL_S, (q,), condition=s_cond),
        SurgeryOp(SurgeryOpKind.CONDITIONAL_PAULI, (q,), pauli="Z", condition=z_cond),
    ]


_EXACT_QUARTER_EXPANSIONS: dict[int, tuple[GateKind, ...]] = {
    0: (),
    1: (GateKind.T,),
    2: (GateKind.S,),
    3: (GateKind.S, GateKind.T),
    4: (GateKind.Z,),
    5: (GateKind.Z, GateKind.T),
    6: (GateKind.SDAG,),
    7: (GateKind.TDAG,),
}


def _rz_to_gates(qubit: int, angle: float, cfg: LoweringConfig) -> list[Gate]:
    """Exact Clifford+T expansion for multiples of pi/4, Solovay-Kitaev for
    everything else."""
    ratio = angle / QUARTER_TURN
    nearest = round(ratio)
    if abs(angle - nearest * QUARTER_TURN) <= cfg.exact_angle_tol:
        return [Gate(kind, (qubit,)) for kind in _EXACT_QUARTER_EXPANSIONS[nearest % 8]]
    seq = synthesis.solovay_kitaev(synthesis.rz_matrix(angle), cfg.sk_depth, cfg.sk_base_len)
    return [Gate(kind, (qubit,)) for kind in seq.gates]


def lower_gate(gate: Gate, cfg: LoweringConfig = DEFAULT_LOWERING_CONFIG) -> list[SurgeryOp]:
    """Context-free lowering of a single gate (conditions indexed from 0).

    In a full-circuit lowering the Pauli frame is threaded through the stream
    instead; see lower_circuit.
    """
    kind = gate.kind
    q = gate.qubits[0]
    if kind is GateKind.H:
        return [SurgeryOp(SurgeryOpKind.DIRECT_H, (Patch.data(q),))]
    if kind is GateKind.S:
        return [SurgeryOp(SurgeryOpKind.DIRECT_S, (Patch.data(q),))]
    if kind is GateKind.SDAG:
        return [
            SurgeryOp(SurgeryOpKind.DIRECT_S, (Patch.data(q),)),
            SurgeryOp(SurgeryOpKind.TRACK_PAULI_Z, (Patch.data(q),)),
        ]
    if kind is GateKind.X:
        return [SurgeryOp(SurgeryOpKind.TRACK_PAULI_X, (Patch.data(q),))]
    if kind is GateKind.Z:
        return [SurgeryOp(SurgeryOpKind.TRACK_PAULI_Z, (Patch.data(q),))]
    if kind is GateKind.T:
        return lower_t(q)
    if kind is GateKind.TDAG:
        return lower_t(q, adjoint=True)
    if kind is GateKind.CNOT:
        return lower_cnot(gate.qubits[0], gate.qubits[1])
    if kind is GateKind.RZ:
        ops: list[SurgeryOp] = []
        for sub in _rz_to_gates(q, gate.angle, cfg):
            block = lower_gate(sub, cfg)
            offset = len(ops)
            ops.extend(op.shifted(offset) for op in block)
        return ops
    raise LoweringError(f"unknown gate kind {kind}")


class _FrameLowerer:
    """Single pass over a circuit that emits surgery ops while threading the
    Pauli frame, so no TrackPauli instruction survives into the stream."""

    def __init__(self, circuit: Circuit, cfg: LoweringConfig):
        self.cfg = cfg
        self.num_qubits = circuit.num_qubits
        self.x = [False] * circuit.num_qubits
        self.z = [False] * circuit.num_qubits
        self.ops: list[SurgeryOp] = []
        self.next_ancilla = 0
        self.next_magic = 0

    def emit_gate(self, gate: Gate) -> None:
        kind = gate.kind
        q = gate.qubits[0]
        if kind is GateKind.X:
            self.x[q] = not self.x[q]
        elif kind is GateKind.Z:
            self.z[q] = not self.z[q]
        elif kind is GateKind.H:
            self.ops.append(SurgeryOp(SurgeryOpKind.DIRECT_H, (Patch.data(q),)))
            self.x[q], self.z[q] = self.z[q], self.x[q]
        elif kind is GateKind.S:
            self.ops.append(SurgeryOp(SurgeryOpKind.DIRECT_S, (Patch.data(q),)))
            if self.x[q]:
                self.z[q] = not self.z[q]
        elif kind is GateKind.SDAG:
            # S† = S with a tracked Z; the frame X still picks up a Z when
            # pushed through the physical S.
            self.ops.append(SurgeryOp(SurgeryOpKind.DIRECT_S, (Patch.data(q),)))
            if self.x[q]:
                self.z[q] = not self.z[q]
            self.z[q] = not self.z[q]
        elif kind in (GateKind.T, GateKind.TDAG):
            # A pending X frame conjugates T into T† (up to global phase), so
            # swap the teleportation wiring instead of touching the frame.
            adjoint = (kind is GateKind.TDAG) != self.x[q]
            block = lower_t(q, self.next_magic, base_index=len(self.ops), adjoint=adjoint)
            self.next_magic += 1
            self.ops.extend(block)
        elif kind is GateKind.CNOT:
            c, t = gate.qubits
            block = lower_cnot(c, t, self.next_ancilla, base_index=len(self.ops))
            self.next_ancilla += 1
            self.ops.extend(block)
            self.x[t] = self.x[t] != self.x[c]
            self.z[c] = self.z[c] != self.z[t]
        elif kind is GateKind.RZ:
            for sub in _rz_to_gates(q, gate.angle, self.cfg):
                self.emit_gate(sub)
        else:
            raise LoweringError(f"unknown gate kind {kind}")


def lower_circuit(circuit: Circuit, cfg: LoweringConfig = DEFAULT_LOWERING_CONFIG) -> LoweredProgram:
    """Lower a whole circuit: gate blocks concatenate in order, X/Z gates fold
    into the Pauli frame, and the residue lands in the final frame."""
    lo = _FrameLowerer(circuit, cfg)
    for gate in circuit.gates:
        lo.emit_gate(gate)
    return LoweredProgram(
        num_qubits=circuit.num_qubits,
        ops=tuple(lo.ops),
        frame=PauliFrame(tuple(lo.x), tuple(lo.z)),
        magic_requests=lo.next_magic,
    )
