"""Discrete synthesis of single-qubit rotations over Clifford+T.

Arbitrary rotations are approximated by the Solovay-Kitaev recursion on top of
an enumerated base library of {H, T, T†} words. Distances are measured in the
global-phase-invariant trace metric after projecting to determinant one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .circuit import GateKind

DEFAULT_BASE_LEN = 6
DEFAULT_DEPTH = 2

#: Distances closer than this count as equal in the base search tie-break.
TIE_TOLERANCE = 1e-12

_SQRT2_INV = 1.0 / math.sqrt(2.0)
_OMEGA = np.exp(1j * math.pi / 4)

GATE_MATRICES: dict[GateKind, np.ndarray] = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDAG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, _OMEGA]], dtype=complex),
    GateKind.TDAG: np.array([[1, 0], [0, np.conj(_OMEGA)]], dtype=complex),
}

# Enumeration order of the base alphabet; fixes tie-breaking everywhere.
BASE_ALPHABET: tuple[GateKind, ...] = (GateKind.H, GateKind.T, GateKind.TDAG)

_ADJOINT = {
    GateKind.H: GateKind.H,
    GateKind.T: GateKind.TDAG,
    GateKind.TDAG: GateKind.T,
    GateKind.S: GateKind.SDAG,
    GateKind.SDAG: GateKind.S,
}

IDENTITY2 = np.eye(2, dtype=complex)


class SynthesisError(ValueError):
    """Raised on non-unitary input or when the recursion cannot refine."""


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


def rx_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _check_unitary(u: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise SynthesisError(f"expected a 2x2 matrix, got shape {u.shape}")
    if not np.allclose(u @ u.conj().T, IDENTITY2, atol=tol):
        raise SynthesisError("matrix is not unitary within 1e-10")
    return u


def to_special_unitary(u: np.ndarray) -> np.ndarray:
    """Project onto determinant 1, picking the branch with Re(trace) >= 0."""
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    su = u / np.sqrt(det)
    if su[0, 0].real + su[1, 1].real < 0:
        su = -su
    return su


def trace_distance(u: np.ndarray, v: np.ndarray) -> float:
    """sqrt(max(0, 2 - |tr(u† v)|) / 2); zero iff u == v up to global phase."""
    su = to_special_unitary(_check_unitary(u))
    sv = to_special_unitary(_check_unitary(v))
    overlap = abs(np.trace(su.conj().T @ sv))
    return math.sqrt(max(0.0, 2.0 - overlap) / 2.0)


@dataclass(frozen=True)
class GateSequence:
    """A qubit-free Clifford+T word; `gates` are listed in application order
    (leftmost applied first) and `matrix` is their composition."""

    gates: tuple[GateKind, ...]
    matrix: np.ndarray

    @classmethod
    def from_gates(cls, gates: tuple[GateKind, ...]) -> "GateSequence":
        mat = IDENTITY2
        for g in gates:
            mat = GATE_MATRICES[g] @ mat
        return cls(gates, mat)

    def adjoint(self) -> "GateSequence":
        gates = tuple(_ADJOINT[g] for g in reversed(self.gates))
        return GateSequence(gates, self.matrix.conj().T)

    def distance_to(self, u: np.ndarray) -> float:
        return trace_distance(self.matrix, u)

    def __len__(self) -> int:
        return len(self.gates)


@lru_cache(maxsize=8)
def _base_library(max_len: int) -> tuple[tuple[tuple[GateKind, ...], ...], np.ndarray]:
    """All {H,T,T†} words of length <= max_len in (length, lexicographic)
    order, with their det-1 projected matrices stacked for vectorized search."""
    words: list[tuple[GateKind, ...]] = [()]
    matrices: list[np.ndarray] = [IDENTITY2]
    frontier: list[tuple[tuple[GateKind, ...], np.ndarray]] = [((), IDENTITY2)]
    for _ in range(max_len):
        nxt = []
        for gates, mat in frontier:
            for g in BASE_ALPHABET:
                # New gate applied last, i.e. multiplied on the left; iterating
                # prefixes lexicographically keeps each length class in
                # itertools.product order.
                nxt.append((gates + (g,), GATE_MATRICES[g] @ mat))
        frontier = nxt
        words.extend(g for g, _ in nxt)
        matrices.extend(m for _, m in nxt)
    stacked = np.stack([to_special_unitary(m) for m in matrices])
    return tuple(words), stacked


def base_approximation(u: np.ndarray, max_len: int = DEFAULT_BASE_LEN) -> GateSequence:
    """Best {H,T,T†} word of length <= max_len under the trace metric.

    Ties resolve to the shorter word, then the lexicographically first in the
    (H, T, T†) alphabet order; the search is a deterministic argmin over the
    enumeration, so equal inputs always return the identical sequence.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    su = to_special_unitary(_check_unitary(u))
    words, stacked = _base_library(max_len)
    overlaps = np.abs(np.einsum("nij,ij->n", stacked.conj(), su))
    distances = np.sqrt(np.maximum(0.0, 2.0 - overlaps) / 2.0)
    # Words that are projectively the same matrix tie up to float noise;
    # resolve within a tolerance toward the first enumerated (shortest, then
    # lexicographic). Distinct words in the net sit far above the tolerance.
    best = int(np.argmax(distances <= distances.min() + TIE_TOLERANCE))
    return GateSequence.from_gates(words[best])


def _bloch_components(su: np.ndarray) -> tuple[float, np.ndarray]:
    """Decompose det-1 su = cos(a/2) I - i sin(a/2) n·sigma; returns
    (cos(a/2), sin(a/2) * n)."""
    c = 0.5 * (su[0, 0] + su[1, 1]).real
    s_vec = np.array(
        [-su[0, 1].imag - su[1, 0].imag, su[1, 0].real - su[0, 1].real, -su[0, 0].imag + su[1, 1].imag]
    ) * 0.5
    return c, s_vec


def _rotation_between(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """SU(2) element whose conjugation rotates Bloch axis a onto axis b."""
    dot = float(np.clip(np.dot(a, b), -1.0, 1.0))
    cross = np.cross(a, b)
    norm = float(np.linalg.norm(cross))
    if norm < 1e-14:
        if dot > 0:
            return IDENTITY2
        # Antiparallel: rotate by pi about any axis orthogonal to a.
        probe = np.array([1.0, 0.0, 0.0]) if abs(a[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        axis = np.cross(a, probe)
        axis /= np.linalg.norm(axis)
        angle = math.pi
    else:
        axis = cross / norm
        angle = math.atan2(norm, dot)
    return _axis_rotation(axis, angle)


def _axis_rotation(axis: np.ndarray, angle: float) -> np.ndarray:
    nx, ny, nz = axis
    sigma = np.array([[nz, nx - 1j * ny], [nx + 1j * ny, -nz]], dtype=complex)
    return math.cos(angle / 2) * IDENTITY2 - 1j * math.sin(angle / 2) * sigma


class GroupCommutatorError(SynthesisError):
    """The correction is too far from the identity for the balanced split."""


def group_commutator(delta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Balanced commutator split: returns (v, w) with v w v† w† == delta.

    Both factors are rotations by the same angle (about conjugated x/y axes),
    the standard construction that gives the eps^(3/2) contraction. Requires
    delta within trace distance 0.5 of the identity.
    """
    d = to_special_unitary(_check_unitary(delta))
    if trace_distance(d, IDENTITY2) >= 0.5:
        raise GroupCommutatorError("correction too far from identity for a balanced split")
    _, s_vec = _bloch_components(d)
    sin_half = float(np.linalg.norm(s_vec))
    if sin_half < 1e-12:
        return IDENTITY2.copy(), IDENTITY2.copy()
    axis = s_vec / sin_half
    # Solve sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)) for phi.
    w_root = (1.0 - math.sqrt(max(0.0, 1.0 - sin_half * sin_half))) / 2.0
    sin_phi_half = math.sqrt(math.sqrt(w_root))
    phi = 2.0 * math.asin(min(1.0, sin_phi_half))
    v0 = rx_matrix(phi)
    w0 = ry_matrix(phi)
    u0 = v0 @ w0 @ v0.conj().T @ w0.conj().T
    _, s0_vec = _bloch_components(to_special_unitary(u0))
    n0 = float(np.linalg.norm(s0_vec))
    if n0 < 1e-14:
        return IDENTITY2.copy(), IDENTITY2.copy()
    sim = _rotation_between(s0_vec / n0, axis)
    v = sim @ v0 @ sim.conj().T
    w = sim @ w0 @ sim.conj().T
    return v, w


def _peephole(gates: tuple[GateKind, ...]) -> tuple[GateKind, ...]:
    """Rewrite adjacent T,T -> S and T†,T† -> S† (exact matrix identities)."""
    out: list[GateKind] = []
    i = 0
    while i < len(gates):
        g = gates[i]
        if i + 1 < len(gates) and gates[i + 1] is g and g is GateKind.T:
            out.append(GateKind.S)
            i += 2
        elif i + 1 < len(gates) and gates[i + 1] is g and g is GateKind.TDAG:
            out.append(GateKind.SDAG)
            i += 2
        else:
            out.append(g)
            i += 1
    return tuple(out)


def _sk_recurse(u: np.ndarray, depth: int, base_len: int) -> GateSequence:
    if depth == 0:
        return base_approximation(u, base_len)
    prev = _sk_recurse(u, depth - 1, base_len)
    delta = u @ prev.matrix.conj().T
    try:
        v, w = group_commutator(delta)
    except GroupCommutatorError as exc:
        raise SynthesisError(
            "base approximation too coarse to refine (insufficient base accuracy)"
        ) from exc
    v_seq = _sk_recurse(v, depth - 1, base_len)
    w_seq = _sk_recurse(w, depth - 1, base_len)
    gates = (
        prev.gates
        + w_seq.adjoint().gates
        + v_seq.adjoint().gates
        + w_seq.gates
        + v_seq.gates
    )
    candidate = GateSequence.from_gates(gates)
    # Keep whichever of {refined, previous} is closer: guards against the rare
    # regime where the base net is too coarse for the commutator to contract,
    # and makes the error non-increasing in depth by construction.
    if candidate.distance_to(u) <= prev.distance_to(u):
        return candidate
    return prev


def solovay_kitaev(u: np.ndarray, depth: int = DEFAULT_DEPTH, base_len: int = DEFAULT_BASE_LEN) -> GateSequence:
    """Approximate u by a Clifford+T word; depth 0 is the base search and each
    extra level applies one commutator refinement round."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    _check_unitary(u)
    raw = _sk_recurse(u, depth, base_len)
    return GateSequence.from_gates(_peephole(raw.gates))
