// Unit tests for the pure playground modules: coordinate transforms,
// client-side form gating, result formatting, and session import
// validation. No server involved.

import { describe, expect, it } from "vitest";
import { formatRow, rolloutRows, validateBd, validatePrompt } from "../src/controller";
import { SessionImportError, SessionStore } from "../src/session";
import { ViewTransform } from "../src/transform";
import type { RolloutResponse } from "../src/types";

describe("view transform", () => {
  const view = new ViewTransform(200, 200, 640, 640);

  it("is invertible to well under half a world unit", () => {
    for (let wx = 0; wx <= 200; wx += 12.5) {
      for (let wy = 0; wy <= 200; wy += 12.5) {
        const [px, py] = view.toPixel([wx, wy]);
        const [rx, ry] = view.toWorld([px, py]);
        expect(Math.hypot(rx - wx, ry - wy)).toBeLessThan(1e-9);
      }
    }
  });

  it("stays within half a world unit after pixel rounding", () => {
    // Click handlers receive integer pixels; the round trip through
    // rounded coordinates must not drift more than 0.5 world units.
    for (let wx = 0.3; wx <= 200; wx += 7.7) {
      for (let wy = 0.9; wy <= 200; wy += 9.3) {
        const [px, py] = view.toPixel([wx, wy]);
        const [rx, ry] = view.toWorld([Math.round(px), Math.round(py)]);
        expect(Math.hypot(rx - wx, ry - wy)).toBeLessThan(0.5);
      }
    }
  });

  it("maps the world origin to the bottom-left of the canvas", () => {
    const [px0, py0] = view.toPixel([0, 0]);
    const [px1, py1] = view.toPixel([200, 200]);
    expect(px0).toBeLessThan(px1);
    expect(py0).toBeGreaterThan(py1); // canvas y grows downward
  });

  it("rejects degenerate viewports", () => {
    expect(() => new ViewTransform(200, 200, 10, 10, 12)).toThrow(/degenerate/);
  });

  it("checks world bounds", () => {
    expect(view.inBounds([0, 0])).toBe(true);
    expect(view.inBounds([200, 200])).toBe(true);
    expect(view.inBounds([-0.1, 50])).toBe(false);
    expect(view.inBounds([50, 200.1])).toBe(false);
  });
});

describe("form gating", () => {
  it("blocks empty prompts before any request is made", () => {
    expect(validatePrompt("")).toMatch(/must not be empty/);
    expect(validatePrompt("   \n\t")).toMatch(/must not be empty/);
    expect(validatePrompt("go north of the fridge")).toBeNull();
  });

  it("requires a target position", () => {
    expect(validateBd(null)).toMatch(/click the map/);
    expect(validateBd([10, 20])).toBeNull();
  });
});

const SAMPLE_RESPONSE: RolloutResponse = {
  prompt: "north of the fridge",
  target_bd: [40, 60],
  seed: 5,
  chosen_index: 1,
  bd_errors: [12.0, 3.0, 25.5],
  oracle_scores: [0.7, 1.0, null],
  trajectories: [
    [[15, 15], [30, 40]],
    [[15, 15], [39, 58]],
    [[15, 15], [60, 80]],
  ],
};

describe("result rows", () => {
  it("reports absolute and relative bd errors with oracle scores", () => {
    const rows = rolloutRows(SAMPLE_RESPONSE, 200 * Math.SQRT2);
    expect(rows).toHaveLength(3);
    expect(rows[1]!.chosen).toBe(true);
    expect(rows[0]!.chosen).toBe(false);
    expect(rows[1]!.bdError).toBe(3.0);
    expect(rows[1]!.bdErrorPct).toBeCloseTo((3.0 / (200 * Math.SQRT2)) * 100, 9);
    expect(rows[2]!.oracleScore).toBeNull();

    const line = formatRow(rows[1]!);
    expect(line).toContain("(chosen)");
    expect(line).toContain("3.00");
    expect(line).toContain("oracle 1.0");
    expect(formatRow(rows[2]!)).toContain("oracle n/a");
  });
});

describe("session import validation", () => {
  function validExport(): string {
    const store = new SessionStore();
    store.record(
      SAMPLE_RESPONSE.prompt,
      SAMPLE_RESPONSE.target_bd,
      SAMPLE_RESPONSE,
      new Date("2026-08-15T12:00:00Z"),
    );
    return store.exportJson();
  }

  it("accepts its own exports", () => {
    const store = new SessionStore();
    expect(store.importJson(validExport())).toBe(1);
    expect(store.get(0).prompt).toBe("north of the fridge");
  });

  it("rejects non-JSON input with a message", () => {
    const store = new SessionStore();
    expect(() => store.importJson("{half a json")).toThrow(SessionImportError);
    expect(() => store.importJson("{half a json")).toThrow(/not valid JSON/);
  });

  it.each([
    ["wrong top-level shape", JSON.stringify([1, 2, 3])],
    ["missing version", JSON.stringify({ attempts: [] })],
    ["wrong version", JSON.stringify({ version: 2, attempts: [] })],
    [
      "attempt missing fields",
      JSON.stringify({ version: 1, attempts: [{ prompt: "hi" }] }),
    ],
    [
      "chosen index out of range",
      (() => {
        const parsed = JSON.parse(validExport()) as {
          attempts: { response: { chosen_index: number } }[];
        };
        parsed.attempts[0]!.response.chosen_index = 99;
        return JSON.stringify(parsed);
      })(),
    ],
    [
      "bad timestamp",
      (() => {
        const parsed = JSON.parse(validExport()) as {
          attempts: { timestamp: string }[];
        };
        parsed.attempts[0]!.timestamp = "yesterday-ish";
        return JSON.stringify(parsed);
      })(),
    ],
  ])("rejects %s and leaves the store untouched", (_label, text) => {
    const store = new SessionStore();
    store.importJson(validExport());
    expect(() => store.importJson(text)).toThrow(SessionImportError);
    expect(store.length).toBe(1);
  });
});
