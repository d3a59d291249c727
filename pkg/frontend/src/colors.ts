/** Color palette: red data patches, yellow routing ancillas, magenta
 * distillation; boundary sides are red (X) and black (Z). Vacant cells are
 * never rendered. */
import type { BoundarySide, CuboidKind } from "./model.js";

export const KIND_COLORS: Record<Exclude<CuboidKind, "Vacant">, number> = {
  DataIdle: 0xb03034,
  DataActive: 0xe8444a,
  RouteActive: 0xe6c229,
  DistillationActive: 0xc743c7,
  MagicBuffer: 0x8a4fd1,
};

export const BOUNDARY_COLORS: Record<BoundarySide, number> = {
  X: 0xd32f2f,
  Z: 0x111111,
};

export const SELECTION_COLOR = 0x37d0ee;
