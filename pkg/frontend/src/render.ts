// Thin canvas blitter for the display lists produced by scene.ts. All layout
// and selection logic lives in the scene builders; this file only issues
// drawing commands in list order.

import type { Shape } from "./scene";

export function drawScene(ctx: CanvasRenderingContext2D, shapes: Shape[]): void {
  for (const s of shapes) {
    switch (s.kind) {
      case "tile":
        ctx.fillStyle = s.color;
        ctx.fillRect(s.x, s.y, s.w, s.h);
        ctx.strokeStyle = "rgba(0,0,0,0.35)";
        ctx.lineWidth = 1;
        ctx.strokeRect(s.x, s.y, s.w, s.h);
        break;
      case "wall":
        ctx.strokeStyle = "#d8d8d8";
        ctx.lineWidth = 3;
        ctx.lineCap = "round";
        ctx.beginPath();
        ctx.moveTo(s.x1, s.y1);
        ctx.lineTo(s.x2, s.y2);
        ctx.stroke();
        break;
      case "dot":
        ctx.fillStyle = s.color;
        ctx.beginPath();
        ctx.arc(s.x, s.y, 3.5, 0, 2 * Math.PI);
        ctx.fill();
        break;
      case "label":
        ctx.fillStyle = "#f0f0f0";
        ctx.font = "11px system-ui, sans-serif";
        ctx.textBaseline = "bottom";
        ctx.fillText(s.text, s.x, s.y);
        break;
      case "start":
        ctx.strokeStyle = "#ffffff";
        ctx.lineWidth = 2;
        ctx.beginPath();
        ctx.arc(s.x, s.y, 6, 0, 2 * Math.PI);
        ctx.stroke();
        ctx.fillStyle = "#ffffff";
        ctx.font = "10px system-ui, sans-serif";
        ctx.textBaseline = "top";
        ctx.fillText("start", s.x + 8, s.y + 2);
        break;
      case "crosshair":
        ctx.strokeStyle = "#ff5252";
        ctx.lineWidth = 1.5;
        ctx.beginPath();
        ctx.moveTo(s.x - 9, s.y);
        ctx.lineTo(s.x + 9, s.y);
        ctx.moveTo(s.x, s.y - 9);
        ctx.lineTo(s.x, s.y + 9);
        ctx.stroke();
        break;
      case "target":
        ctx.strokeStyle = "#ff5252";
        ctx.lineWidth = 2;
        ctx.beginPath();
        ctx.arc(s.x, s.y, 7, 0, 2 * Math.PI);
        ctx.stroke();
        ctx.beginPath();
        ctx.arc(s.x, s.y, 2, 0, 2 * Math.PI);
        ctx.fillStyle = "#ff5252";
        ctx.fill();
        break;
      case "polyline": {
        if (s.points.length === 0) break;
        ctx.strokeStyle = s.color;
        ctx.lineWidth = s.width;
        ctx.globalAlpha = s.emphasis ? 1.0 : 0.75;
        ctx.lineJoin = "round";
        ctx.beginPath();
        const [x0, y0] = s.points[0]!;
        ctx.moveTo(x0, y0);
        for (let i = 1; i < s.points.length; i++) {
          const [x, y] = s.points[i]!;
          ctx.lineTo(x, y);
        }
        ctx.stroke();
        ctx.globalAlpha = 1.0;
        break;
      }
    }
  }
}
