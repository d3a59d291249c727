/**
 * Pure viewer model: assembly-file validation, the scene state, and the
 * time-window scrubbing logic. No DOM or WebGL here so every behaviour is
 * unit-testable.
 */

export const CUBOID_KINDS = [
  "DataIdle",
  "DataActive",
  "RouteActive",
  "DistillationActive",
  "MagicBuffer",
  "Vacant",
] as const;

export type CuboidKind = (typeof CUBOID_KINDS)[number];

export type BoundarySide = "X" | "Z";

export interface CellRecord {
  x: number;
  y: number;
  t: number;
  kind: CuboidKind;
  op: number | null;
  /** N, E, S, W boundary types; present only for data cells. */
  sides: [BoundarySide, BoundarySide, BoundarySide, BoundarySide] | null;
}

export interface AssemblyDoc {
  version: 1;
  dims: [number, number, number];
  distance: number;
  cells: CellRecord[];
  report: Record<string, unknown>;
}

export class SchemaError extends Error {
  readonly field: string;

  constructor(field: string, message: string) {
    super(`${field}: ${message}`);
    this.field = field;
    this.name = "SchemaError";
  }
}

function isInt(value: unknown): value is number {
  return typeof value === "number" && Number.isInteger(value);
}

/** Validate a decoded assembly JSON document; throws SchemaError naming the
 * offending field. */
export function validateAssembly(data: unknown): AssemblyDoc {
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new SchemaError("document", "must be a JSON object");
  }
  const doc = data as Record<string, unknown>;
  for (const field of ["version", "dims", "distance", "cells", "report"]) {
    if (!(field in doc)) throw new SchemaError(field, "missing");
  }
  if (doc.version !== 1) {
    throw new SchemaError("version", `unsupported value ${JSON.stringify(doc.version)}`);
  }
  const dims = doc.dims;
  if (!Array.isArray(dims) || dims.length !== 3 || !dims.every((v) => isInt(v) && v >= 0)) {
    throw new SchemaError("dims", "must be [width, height, num_steps]");
  }
  const [width, height, numSteps] = dims as [number, number, number];
  if (!isInt(doc.distance)) throw new SchemaError("distance", "must be an integer");
  if (!Array.isArray(doc.cells)) throw new SchemaError("cells", "must be an array");
  const expected = width * height * numSteps;
  if (doc.cells.length !== expected) {
    throw new SchemaError("cells", `expected ${expected} records, got ${doc.cells.length}`);
  }
  doc.cells.forEach((cell, index) => validateCell(cell, index, width, height, numSteps));
  if (typeof doc.report !== "object" || doc.report === null) {
    throw new SchemaError("report", "must be an object");
  }
  return doc as unknown as AssemblyDoc;
}

function validateCell(
  cell: unknown,
  index: number,
  width: number,
  height: number,
  numSteps: number,
): void {
  const field = `cells[${index}]`;
  if (typeof cell !== "object" || cell === null) throw new SchemaError(field, "must be an object");
  const record = cell as Record<string, unknown>;
  for (const key of ["x", "y", "t", "kind", "op", "sides"]) {
    if (!(key in record)) throw new SchemaError(`${field}.${key}`, "missing");
  }
  if (!isInt(record.x) || record.x < 0 || record.x >= width) {
    throw new SchemaError(`${field}.x`, "out of range");
  }
  if (!isInt(record.y) || record.y < 0 || record.y >= height) {
    throw new SchemaError(`${field}.y`, "out of range");
  }
  if (!isInt(record.t) || record.t < 0 || record.t >= numSteps) {
    throw new SchemaError(`${field}.t`, "out of range");
  }
  if (!CUBOID_KINDS.includes(record.kind as CuboidKind)) {
    throw new SchemaError(`${field}.kind`, `unknown kind ${JSON.stringify(record.kind)}`);
  }
  if (record.op !== null && (!isInt(record.op) || record.op < 0)) {
    throw new SchemaError(`${field}.op`, "must be null or a non-negative integer");
  }
  const sides = record.sides;
  if (sides !== null) {
    const ok =
      Array.isArray(sides) && sides.length === 4 && sides.every((s) => s === "X" || s === "Z");
    if (!ok) throw new SchemaError(`${field}.sides`, "must be a 4-array of 'X'/'Z'");
  }
}

export interface ViewerScene {
  doc: AssemblyDoc;
  /** Inclusive time window. */
  t0: number;
  t1: number;
  /** True when the last scrub request was clamped into range. */
  clamped: boolean;
  selection: CellRecord | null;
}

/** Validate and wrap a document; the window starts at the full time range. */
export function loadAssembly(data: unknown): ViewerScene {
  const doc = validateAssembly(data);
  const numSteps = doc.dims[2];
  return { doc, t0: 0, t1: Math.max(0, numSteps - 1), clamped: false, selection: null };
}

/** Restrict the rendered window to [t0, t1]; out-of-range values clamp and
 * set the `clamped` indicator. */
export function scrubTime(scene: ViewerScene, t0: number, t1: number): ViewerScene {
  const numSteps = scene.doc.dims[2];
  const last = Math.max(0, numSteps - 1);
  const clampStep = (v: number) => Math.min(last, Math.max(0, Math.trunc(v)));
  let lo = clampStep(t0);
  let hi = clampStep(t1);
  if (lo > hi) [lo, hi] = [hi, lo];
  const clamped = lo !== t0 || hi !== t1;
  return { ...scene, t0: lo, t1: hi, clamped, selection: scene.selection };
}

/** Cells rendered for the current window: t inside [t0, t1], kind not Vacant. */
export function renderedCells(scene: ViewerScene): CellRecord[] {
  if (scene.doc.dims[2] === 0) return [];
  return scene.doc.cells.filter(
    (cell) => cell.kind !== "Vacant" && cell.t >= scene.t0 && cell.t <= scene.t1,
  );
}

export function renderedCount(scene: ViewerScene): number {
  return renderedCells(scene).length;
}

export function withSelection(scene: ViewerScene, selection: CellRecord | null): ViewerScene {
  return { ...scene, selection };
}

/** Human-readable summary for the selection panel. */
export function describeCell(cell: CellRecord): string {
  const parts = [`cell (${cell.x}, ${cell.y})`, `step ${cell.t}`, cell.kind];
  parts.push(cell.op === null ? "no instruction" : `instruction #${cell.op}`);
  if (cell.sides) {
    parts.push(`sides N=${cell.sides[0]} E=${cell.sides[1]} S=${cell.sides[2]} W=${cell.sides[3]}`);
  }
  return parts.join(" | ");
}
