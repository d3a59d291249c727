/**
 * Ray picking over cuboids, as pure math so it can be tested headlessly.
 *
 * World mapping: grid x -> world x, time t -> world y (time flows upward),
 * grid y -> world z. Every cuboid is the unit axis-aligned box
 * [x, x+1) x [t, t+1) x [y, y+1) in that frame.
 */
import type { CellRecord } from "./model.js";

export interface Ray {
  origin: [number, number, number];
  direction: [number, number, number];
}

export interface PickHit {
  cell: CellRecord;
  distance: number;
}

function slab(
  origin: number,
  direction: number,
  lo: number,
  hi: number,
): [number, number] | null {
  if (Math.abs(direction) < 1e-12) {
    return origin >= lo && origin <= hi ? [-Infinity, Infinity] : null;
  }
  const a = (lo - origin) / direction;
  const b = (hi - origin) / direction;
  return a <= b ? [a, b] : [b, a];
}

/** Entry distance of the ray into the cuboid's unit box, or null on a miss. */
export function rayCuboidDistance(ray: Ray, cell: CellRecord): number | null {
  const bounds: Array<[number, number]> = [
    [cell.x, cell.x + 1],
    [cell.t, cell.t + 1],
    [cell.y, cell.y + 1],
  ];
  let tMin = 0;
  let tMax = Infinity;
  for (let axis = 0; axis < 3; axis += 1) {
    const [lo, hi] = bounds[axis]!;
    const range = slab(ray.origin[axis]!, ray.direction[axis]!, lo, hi);
    if (range === null) return null;
    tMin = Math.max(tMin, range[0]);
    tMax = Math.min(tMax, range[1]);
    if (tMin > tMax) return null;
  }
  return tMin;
}

/** Nearest rendered cuboid the ray enters, or null when it misses them all. */
export function pickCuboid(cells: CellRecord[], ray: Ray): PickHit | null {
  let best: PickHit | null = null;
  for (const cell of cells) {
    const distance = rayCuboidDistance(ray, cell);
    if (distance !== null && (best === null || distance < best.distance)) {
      best = { cell, distance };
    }
  }
  return best;
}
