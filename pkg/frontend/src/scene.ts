// Pure scene construction. Everything the canvas shows is derived from
// (map payload, rollout response, view transform) into a flat display list
// of pixel-space shapes, so rendering decisions stay testable without a
// canvas context. The blitter in render.ts just walks the list.

import type { MapPayload, RolloutResponse, Vec2 } from "./types";
import type { ViewTransform } from "./transform";

export type Shape =
  | {
      kind: "tile";
      x: number;
      y: number;
      w: number;
      h: number;
      color: string;
      row: number;
      col: number;
    }
  | { kind: "wall"; x1: number; y1: number; x2: number; y2: number }
  | { kind: "label"; text: string; x: number; y: number }
  | { kind: "dot"; x: number; y: number; color: string }
  | { kind: "start"; x: number; y: number }
  | { kind: "crosshair"; x: number; y: number }
  | { kind: "target"; x: number; y: number }
  | {
      kind: "polyline";
      points: Vec2[];
      color: string;
      width: number;
      emphasis: boolean;
      index: number;
    };

// Fill colors for the named floor tiles. Every name used by the service maps
// to a muted shade so trajectory strokes stay legible on top.
export const TILE_FILLS: Record<string, string> = {
  red: "#5c2e2e",
  green: "#2e5c38",
  blue: "#2e3a5c",
  yellow: "#5c552e",
  purple: "#4a2e5c",
  orange: "#5c432e",
  pink: "#5c2e4d",
  gray: "#3d3d44",
  white: "#4c4f58",
};

export const TRAJECTORY_COLORS = [
  "#4fc3f7",
  "#ffb74d",
  "#aed581",
  "#f06292",
  "#9575cd",
  "#4db6ac",
  "#fff176",
  "#ff8a65",
];

export function trajectoryColor(index: number): string {
  return TRAJECTORY_COLORS[index % TRAJECTORY_COLORS.length]!;
}

export function buildMapScene(map: MapPayload, t: ViewTransform): Shape[] {
  const shapes: Shape[] = [];
  const rows = map.tiles.length;
  for (let r = 0; r < rows; r++) {
    const row = map.tiles[r]!;
    const cols = row.length;
    const tileW = map.width / cols;
    const tileH = map.height / rows;
    for (let c = 0; c < cols; c++) {
      // Row 0 is the top of the map, i.e. the band with the largest
      // world-y values.
      const worldTopLeft: Vec2 = [c * tileW, map.height - r * tileH];
      const [px, py] = t.toPixel(worldTopLeft);
      shapes.push({
        kind: "tile",
        x: px,
        y: py,
        w: tileW * t.scale,
        h: tileH * t.scale,
        color: TILE_FILLS[row[c]!] ?? "#333333",
        row: r,
        col: c,
      });
    }
  }
  for (const [x1, y1, x2, y2] of map.walls) {
    const [px1, py1] = t.toPixel([x1, y1]);
    const [px2, py2] = t.toPixel([x2, y2]);
    shapes.push({ kind: "wall", x1: px1, y1: py1, x2: px2, y2: py2 });
  }
  for (const obj of map.objects) {
    const [px, py] = t.toPixel(obj.position);
    shapes.push({ kind: "dot", x: px, y: py, color: "#e0e0e0" });
    shapes.push({ kind: "label", text: obj.name, x: px + 6, y: py - 6 });
  }
  const [sx, sy] = t.toPixel(map.start);
  shapes.push({ kind: "start", x: sx, y: sy });
  return shapes;
}

export function buildRolloutScene(
  resp: RolloutResponse,
  t: ViewTransform,
): Shape[] {
  const shapes: Shape[] = [];
  // Draw the chosen rollout last so its stroke sits on top.
  const order = resp.trajectories
    .map((_, i) => i)
    .sort((a, b) => Number(a === resp.chosen_index) - Number(b === resp.chosen_index));
  for (const i of order) {
    const chosen = i === resp.chosen_index;
    shapes.push({
      kind: "polyline",
      points: resp.trajectories[i]!.map((p) => t.toPixel(p)),
      color: trajectoryColor(i),
      width: chosen ? 3.5 : 1.5,
      emphasis: chosen,
      index: i,
    });
  }
  const [tx, ty] = t.toPixel(resp.target_bd);
  shapes.push({ kind: "target", x: tx, y: ty });
  return shapes;
}

export function buildCrosshair(bd: Vec2, t: ViewTransform): Shape {
  const [px, py] = t.toPixel(bd);
  return { kind: "crosshair", x: px, y: py };
}
