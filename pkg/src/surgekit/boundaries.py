"""Patch boundary bookkeeping: which sides expose X-type vs Z-type edges, and
when a merge forces a 90-degree patch rotation."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class BoundaryType(Enum):
    X = "X"
    Z = "Z"

    def flipped(self) -> "BoundaryType":
        return BoundaryType.Z if self is BoundaryType.X else BoundaryType.X


class Side(Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"


_SIDE_ORDER = (Side.N, Side.E, Side.S, Side.W)


@dataclass(frozen=True)
class PatchOrientation:
    """Boundary type per side; opposite sides always match, adjacent differ."""

    north: BoundaryType
    east: BoundaryType
    south: BoundaryType
    west: BoundaryType

    def __post_init__(self):
        if self.north is not self.south or self.east is not self.west:
            raise ValueError("opposite sides must share a boundary type")
        if self.north is self.east:
            raise ValueError("adjacent sides must differ")

    def side(self, side: Side) -> BoundaryType:
        return {Side.N: self.north, Side.E: self.east, Side.S: self.south, Side.W: self.west}[side]

    def sides(self) -> tuple[BoundaryType, BoundaryType, BoundaryType, BoundaryType]:
        """(N, E, S, W)."""
        return (self.north, self.east, self.south, self.west)

    def rotated(self) -> "PatchOrientation":
        # 90-degree rotation; with the two-type invariant this just swaps the
        # N/S and E/W classes.
        return PatchOrientation(self.east, self.north, self.west, self.south)

    def toggled(self) -> "PatchOrientation":
        return PatchOrientation(
            self.north.flipped(), self.east.flipped(), self.south.flipped(), self.west.flipped()
        )


#: Every data patch starts with Z edges facing north/south.
DEFAULT_ORIENTATION = PatchOrientation(BoundaryType.Z, BoundaryType.X, BoundaryType.Z, BoundaryType.X)


def required_boundary(op_kind) -> BoundaryType:
    """Boundary type that must face the route: ZZ merges touch Z edges, XX
    merges touch X edges."""
    from .lowering import SurgeryOpKind

    if op_kind is SurgeryOpKind.MEASURE_ZZ:
        return BoundaryType.Z
    if op_kind is SurgeryOpKind.MEASURE_XX:
        return BoundaryType.X
    raise ValueError(f"{op_kind} is not a two-patch measurement")


def ensure_orientation(
    orientation: PatchOrientation, side: Side, needed: BoundaryType
) -> tuple[PatchOrientation, bool]:
    """Return (orientation', rotation_needed); rotates once when the requested
    side does not already expose `needed`."""
    if orientation.side(side) is needed:
        return orientation, False
    return orientation.rotated(), True


def apply_direct_h(orientation: PatchOrientation) -> PatchOrientation:
    """A transversal H exchanges the logical X and Z edges of the patch."""
    return orientation.toggled()
