"""Physical-resource estimation for compiled assemblies."""
from __future__ import annotations

from dataclasses import dataclass

from .assembler import Assembly


@dataclass(frozen=True)
class EstimatorConfig:
    code_distance: int = 3
    cycle_seconds: float = 1e-6
    cycles_per_step: int | None = None  # defaults to the code distance

    def __post_init__(self):
        if self.code_distance < 1 or self.code_distance % 2 == 0:
            raise ValueError("code distance must be odd and >= 1")
        if self.cycle_seconds <= 0:
            raise ValueError("cycle_seconds must be positive")
        if self.cycles_per_step is not None and self.cycles_per_step < 1:
            raise ValueError("cycles_per_step must be >= 1")

    @property
    def effective_cycles_per_step(self) -> int:
        return self.code_distance if self.cycles_per_step is None else self.cycles_per_step


DEFAULT_ESTIMATOR_CONFIG = EstimatorConfig()


@dataclass(frozen=True)
class ResourceReport:
    footprint: int
    num_steps: int
    volume: int
    code_distance: int
    physical_qubits: int
    est_execution_seconds: float
    preparation_seconds: float
    qubit_count: int
    gate_count: int
    t_count: int  # magic states consumed, i.e. T gates after rotation synthesis

    def __post_init__(self):
        if self.volume != self.footprint * self.num_steps:
            raise ValueError("volume must equal footprint * num_steps")
        if self.physical_qubits != physical_qubits(self.footprint, self.code_distance):
            raise ValueError("physical_qubits inconsistent with footprint and distance")

    def to_dict(self) -> dict:
        return {
            "footprint": self.footprint,
            "num_steps": self.num_steps,
            "volume": self.volume,
            "code_distance": self.code_distance,
            "physical_qubits": self.physical_qubits,
            "est_execution_seconds": self.est_execution_seconds,
            "preparation_seconds": self.preparation_seconds,
            "qubit_count": self.qubit_count,
            "gate_count": self.gate_count,
            "t_count": self.t_count,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ResourceReport":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})


def physical_qubits(footprint: int, distance: int) -> int:
    """footprint x (2d-1)^2: each patch is a (2d-1)-wide square of the three
    physical-qubit roles, 25 qubits at d=3."""
    if distance < 1 or distance % 2 == 0:
        raise ValueError("code distance must be odd and >= 1")
    side = 2 * distance - 1
    return footprint * side * side


def execution_time(assembly: Assembly, cfg: EstimatorConfig = DEFAULT_ESTIMATOR_CONFIG) -> float:
    """Wall-clock estimate: steps x cycles-per-step x cycle time."""
    return assembly.num_steps * cfg.effective_cycles_per_step * cfg.cycle_seconds
