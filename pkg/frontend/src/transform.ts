// World <-> pixel coordinate transform.
//
// World coordinates follow the simulator convention: the origin sits at the
// south-west corner and y grows northward. Canvas pixels grow downward, so
// the vertical axis is flipped. The transform keeps a uniform scale on both
// axes (the map is square) plus a small pixel margin, and must stay
// invertible to well under half a world unit even after pixel coordinates
// are rounded to integers, since click positions arrive as integers.

import type { Vec2 } from "./types";

export class ViewTransform {
  readonly scale: number;

  constructor(
    readonly worldWidth: number,
    readonly worldHeight: number,
    readonly pixelWidth: number,
    readonly pixelHeight: number,
    readonly margin = 12,
  ) {
    const sx = (pixelWidth - 2 * margin) / worldWidth;
    const sy = (pixelHeight - 2 * margin) / worldHeight;
    this.scale = Math.min(sx, sy);
    if (!(this.scale > 0)) {
      throw new Error(
        `degenerate view: ${pixelWidth}x${pixelHeight} px for ` +
          `${worldWidth}x${worldHeight} world units`,
      );
    }
  }

  toPixel(world: Vec2): Vec2 {
    const [wx, wy] = world;
    return [
      this.margin + wx * this.scale,
      this.margin + (this.worldHeight - wy) * this.scale,
    ];
  }

  toWorld(pixel: Vec2): Vec2 {
    const [px, py] = pixel;
    return [
      (px - this.margin) / this.scale,
      this.worldHeight - (py - this.margin) / this.scale,
    ];
  }

  inBounds(world: Vec2): boolean {
    const [wx, wy] = world;
    return (
      wx >= 0 && wx <= this.worldWidth && wy >= 0 && wy <= this.worldHeight
    );
  }
}
