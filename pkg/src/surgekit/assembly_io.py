"""Assembly file export/import.

The on-disk format is JSON with a fixed field set: `version` (1), `dims` =
[width, height, num_steps], `distance`, `cells` (one record per cuboid, sorted
by (t, y, x)), and the embedded `report`. Cell records carry x/y/t, the kind
string, the originating instruction index (`op`, nullable) and, for data
cells, the four boundary sides as "X"/"Z" in N, E, S, W order. Export is
byte-deterministic for a given assembly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .assembler import Assembly, CuboidKind
from .estimate import ResourceReport

FORMAT_VERSION = 1

_KIND_NAMES = {kind.value for kind in CuboidKind}


class AssemblyFormatError(ValueError):
    pass


@dataclass(frozen=True)
class AssemblyDocument:
    """Parsed assembly file: what the viewer (and re-export) consumes."""

    version: int
    dims: tuple[int, int, int]
    distance: int
    cells: tuple[dict, ...]
    report: dict


def assembly_to_doc(assembly: Assembly, report: ResourceReport) -> AssemblyDocument:
    cells = []
    for cuboid in assembly.iter_cuboids():
        sides = None
        if cuboid.side_boundaries is not None:
            sides = [b.value for b in cuboid.side_boundaries]
        cells.append(
            {
                "x": cuboid.x,
                "y": cuboid.y,
                "t": cuboid.t,
                "kind": cuboid.kind.value,
                "op": cuboid.op_id,
                "sides": sides,
            }
        )
    return AssemblyDocument(
        version=FORMAT_VERSION,
        dims=(assembly.layout.width, assembly.layout.height, assembly.num_steps),
        distance=report.code_distance,
        cells=tuple(cells),
        report=report.to_dict(),
    )


def _doc_to_json(doc: AssemblyDocument) -> str:
    payload = {
        "version": doc.version,
        "dims": list(doc.dims),
        "distance": doc.distance,
        "cells": list(doc.cells),
        "report": doc.report,
    }
    return json.dumps(payload, indent=None, separators=(",", ":")) + "\n"


def export_assembly(assembly: Assembly, report: ResourceReport, path: str | Path) -> None:
    """Write the assembly file; cuboids sorted (t, y, x), byte-deterministic."""
    path = Path(path)
    doc = assembly_to_doc(assembly, report)
    try:
        path.write_text(_doc_to_json(doc), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write assembly file {path}: {exc}") from exc


def export_document(doc: AssemblyDocument, path: str | Path) -> None:
    path = Path(path)
    try:
        path.write_text(_doc_to_json(doc), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write assembly file {path}: {exc}") from exc


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise AssemblyFormatError(message)


def parse_assembly_document(payload: dict) -> AssemblyDocument:
    """Validate a decoded assembly JSON object; error messages name the
    offending field."""
    _require(isinstance(payload, dict), "top level must be an object")
    for key in ("version", "dims", "distance", "cells", "report"):
        _require(key in payload, f"missing field '{key}'")
    _require(payload["version"] == FORMAT_VERSION, f"unsupported version {payload['version']!r}")
    dims = payload["dims"]
    _require(
        isinstance(dims, list) and len(dims) == 3 and all(isinstance(v, int) and v >= 0 for v in dims),
        "field 'dims' must be [width, height, num_steps]",
    )
    width, height, num_steps = dims
    cells = payload["cells"]
    _require(isinstance(cells, list), "field 'cells' must be an array")
    _require(
        len(cells) == width * height * num_steps,
        f"field 'cells' must hold footprint x steps = {width * height * num_steps} records, got {len(cells)}",
    )
    previous = None
    for idx, cell in enumerate(cells):
        _require(isinstance(cell, dict), f"cells[{idx}] must be an object")
        for key in ("x", "y", "t", "kind", "op", "sides"):
            _require(key in cell, f"cells[{idx}] missing field '{key}'")
        _require(
            isinstance(cell["x"], int) and 0 <= cell["x"] < width,
            f"cells[{idx}].x out of range",
        )
        _require(
            isinstance(cell["y"], int) and 0 <= cell["y"] < height,
            f"cells[{idx}].y out of range",
        )
        _require(
            isinstance(cell["t"], int) and 0 <= cell["t"] < num_steps,
            f"cells[{idx}].t out of range",
        )
        _require(cell["kind"] in _KIND_NAMES, f"cells[{idx}].kind {cell['kind']!r} is unknown")
        _require(
            cell["op"] is None or (isinstance(cell["op"], int) and cell["op"] >= 0),
            f"cells[{idx}].op must be null or a non-negative integer",
        )
        sides = cell["sides"]
        if sides is not None:
            _require(
                isinstance(sides, list) and len(sides) == 4 and all(s in ("X", "Z") for s in sides),
                f"cells[{idx}].sides must be a 4-array of 'X'/'Z'",
            )
        key = (cell["t"], cell["y"], cell["x"])
        _require(previous is None or key > previous, f"cells[{idx}] out of (t, y, x) order")
        previous = key
    _require(isinstance(payload["report"], dict), "field 'report' must be an object")
    _require(isinstance(payload["distance"], int), "field 'distance' must be an integer")
    return AssemblyDocument(
        version=payload["version"],
        dims=(width, height, num_steps),
        distance=payload["distance"],
        cells=tuple(cells),
        report=payload["report"],
    )


def import_assembly(path: str | Path) -> AssemblyDocument:
    """Read and validate an assembly file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read assembly file {path}: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AssemblyFormatError(f"{path}: not valid JSON: {exc}") from exc
    return parse_assembly_document(payload)
