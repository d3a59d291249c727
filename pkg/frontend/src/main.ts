/**
 * Browser wiring: file loading, the three.js scene, camera controls, the
 * time-window scrubber, and click picking. All decisions that can be wrong
 * live in model.ts/pick.ts and are unit-tested there; this file only renders.
 */
import * as THREE from "three";
import { OrbitControls } from "three/examples/jsm/controls/OrbitControls.js";

import { BOUNDARY_COLORS, KIND_COLORS, SELECTION_COLOR } from "./colors.js";
import {
  CellRecord,
  CuboidKind,
  SchemaError,
  ViewerScene,
  describeCell,
  loadAssembly,
  renderedCells,
  scrubTime,
  withSelection,
} from "./model.js";
import { pickCuboid } from "./pick.js";

const canvasHost = document.getElementById("canvas-host") as HTMLDivElement;
const fileInput = document.getElementById("file-input") as HTMLInputElement;
const statusLine = document.getElementById("status") as HTMLDivElement;
const windowLine = document.getElementById("window-line") as HTMLDivElement;
const clampNote = document.getElementById("clamp-note") as HTMLSpanElement;
const selectionPanel = document.getElementById("selection") as HTMLDivElement;
const sliderT0 = document.getElementById("t0") as HTMLInputElement;
const sliderT1 = document.getElementById("t1") as HTMLInputElement;

const renderer = new THREE.WebGLRenderer({ antialias: true });
renderer.setPixelRatio(window.devicePixelRatio);
canvasHost.appendChild(renderer.domElement);

const threeScene = new THREE.Scene();
threeScene.background = new THREE.Color(0x1c1e24);
const camera = new THREE.PerspectiveCamera(45, 1, 0.1, 4000);
const controls = new OrbitControls(camera, renderer.domElement);
controls.enableDamping = true;

threeScene.add(new THREE.AmbientLight(0xffffff, 0.55));
const keyLight = new THREE.DirectionalLight(0xffffff, 1.1);
keyLight.position.set(1.5, 3, 2);
threeScene.add(keyLight);

let scene: ViewerScene | null = null;
let cuboidGroup = new THREE.Group();
let selectionGroup = new THREE.Group();
threeScene.add(cuboidGroup);
threeScene.add(selectionGroup);

function resize(): void {
  const rect = canvasHost.getBoundingClientRect();
  renderer.setSize(rect.width, rect.height);
  camera.aspect = rect.width / rect.height;
  camera.updateProjectionMatrix();
}
window.addEventListener("resize", resize);

function worldCenter(cell: CellRecord): THREE.Vector3 {
  return new THREE.Vector3(cell.x + 0.5, cell.t + 0.5, cell.y + 0.5);
}

function rebuildCuboids(): void {
  threeScene.remove(cuboidGroup);
  cuboidGroup = new THREE.Group();
  if (scene) {
    const byKind = new Map<CuboidKind, CellRecord[]>();
    for (const cell of renderedCells(scene)) {
      const bucket = byKind.get(cell.kind) ?? [];
      bucket.push(cell);
      byKind.set(cell.kind, bucket);
    }
    const geometry = new THREE.BoxGeometry(0.92, 0.92, 0.92);
    for (const [kind, cells] of byKind) {
      const color = KIND_COLORS[kind as Exclude<CuboidKind, "Vacant">];
      const material = new THREE.MeshLambertMaterial({ color });
      const mesh = new THREE.InstancedMesh(geometry, material, cells.length);
      const matrix = new THREE.Matrix4();
      cells.forEach((cell, index) => {
        matrix.setPosition(worldCenter(cell));
        mesh.setMatrixAt(index, matrix);
      });
      mesh.instanceMatrix.needsUpdate = true;
      cuboidGroup.add(mesh);
    }
  }
  threeScene.add(cuboidGroup);
  updateHud();
}

function rebuildSelection(): void {
  threeScene.remove(selectionGroup);
  selectionGroup = new THREE.Group();
  const selected = scene?.selection ?? null;
  if (selected) {
    const outline = new THREE.Mesh(
      new THREE.BoxGeometry(1.0, 1.0, 1.0),
      new THREE.MeshBasicMaterial({ color: SELECTION_COLOR, wireframe: true }),
    );
    outline.position.copy(worldCenter(selected));
    selectionGroup.add(outline);
    if (selected.sides) {
      // Side plates in boundary colors: N/E/S/W on the grid plane.
      const offsets: Array<[number, number, number, number]> = [
        [0, -0.5, 0, 0], // N: -z
        [0.5, 0, 1, Math.PI / 2], // E: +x
        [0, 0.5, 0, 0], // S: +z
        [-0.5, 0, 1, Math.PI / 2], // W: -x
      ];
      selected.sides.forEach((side, index) => {
        const [dx, dz] = [offsets[index]![0], offsets[index]![1]];
        const plate = new THREE.Mesh(
          new THREE.PlaneGeometry(0.96, 0.96),
          new THREE.MeshBasicMaterial({
            color: BOUNDARY_COLORS[side],
            side: THREE.DoubleSide,
          }),
        );
        plate.position.copy(worldCenter(selected)).add(new THREE.Vector3(dx, 0, dz));
        plate.rotation.y = offsets[index]![3];
        if (offsets[index]![2] === 0) plate.rotation.y = 0;
        selectionGroup.add(plate);
      });
    }
    selectionPanel.textContent = describeCell(selected);
  } else {
    selectionPanel.textContent = "nothing selected";
  }
  threeScene.add(selectionGroup);
}

function frameCamera(): void {
  if (!scene) return;
  const [width, , numSteps] = scene.doc.dims;
  const height = scene.doc.dims[1];
  const center = new THREE.Vector3(width / 2, Math.max(numSteps, 1) / 2, height / 2);
  const radius = Math.max(width, height, numSteps, 4);
  camera.position.copy(center.clone().add(new THREE.Vector3(radius, radius * 0.9, radius * 1.4)));
  controls.target.copy(center);
  controls.update();
}

function addGroundGrid(): void {
  if (!scene) return;
  const [width, height] = [scene.doc.dims[0], scene.doc.dims[1]];
  const grid = new THREE.GridHelper(Math.max(width, height), Math.max(width, height), 0x555555, 0x333333);
  grid.position.set(width / 2, 0, height / 2);
  cuboidGroup.add(grid);
}

function updateHud(): void {
  if (!scene) {
    statusLine.textContent = "no assembly loaded";
    windowLine.textContent = "";
    return;
  }
  const [width, height, numSteps] = scene.doc.dims;
  statusLine.textContent =
    `${width}x${height} cells, ${numSteps} steps, distance ${scene.doc.distance}, ` +
    `${renderedCells(scene).length} cuboids rendered`;
  windowLine.textContent = `window [${scene.t0}, ${scene.t1}]`;
  clampNote.textContent = scene.clamped ? " (clamped)" : "";
}

function applyScrub(): void {
  if (!scene) return;
  scene = scrubTime(scene, Number(sliderT0.value), Number(sliderT1.value));
  sliderT0.value = String(scene.t0);
  sliderT1.value = String(scene.t1);
  rebuildCuboids();
  rebuildSelection();
}

sliderT0.addEventListener("input", applyScrub);
sliderT1.addEventListener("input", applyScrub);

fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  const reader = new FileReader();
  reader.onload = () => {
    try {
      scene = loadAssembly(JSON.parse(String(reader.result)));
    } catch (error) {
      scene = null;
      const message =
        error instanceof SchemaError
          ? `load error in field ${error.field}: ${error.message}`
          : `load error: ${error}`;
      statusLine.textContent = message;
      rebuildCuboids();
      rebuildSelection();
      return;
    }
    const last = Math.max(0, scene.doc.dims[2] - 1);
    sliderT0.max = String(last);
    sliderT1.max = String(last);
    sliderT0.value = "0";
    sliderT1.value = String(last);
    rebuildCuboids();
    addGroundGrid();
    rebuildSelection();
    frameCamera();
  };
  reader.readAsText(file);
});

renderer.domElement.addEventListener("click", (event) => {
  if (!scene) return;
  const rect = renderer.domElement.getBoundingClientRect();
  const ndc = new THREE.Vector2(
    ((event.clientX - rect.left) / rect.width) * 2 - 1,
    -((event.clientY - rect.top) / rect.height) * 2 + 1,
  );
  const raycaster = new THREE.Raycaster();
  raycaster.setFromCamera(ndc, camera);
  const hit = pickCuboid(renderedCells(scene), {
    origin: raycaster.ray.origin.toArray() as [number, number, number],
    direction: raycaster.ray.direction.toArray() as [number, number, number],
  });
  scene = withSelection(scene, hit?.cell ?? null);
  rebuildSelection();
});

function animate(): void {
  requestAnimationFrame(animate);
  controls.update();
  renderer.render(threeScene, camera);
}

resize();
updateHud();
rebuildSelection();
animate();
