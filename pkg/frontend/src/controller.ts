// Form-level logic kept separate from DOM wiring so the gating rules are
// directly testable: prompt validation happens client-side before any
// request is sent, and result formatting is shared between the live view
// and history replay.

import type { RolloutResponse, Vec2 } from "./types";

// Returns an error message for the user, or null when the prompt may be
// submitted. The service rejects empty prompts with a 400; blocking them
// here keeps the round trip for the common slip.
export function validatePrompt(prompt: string): string | null {
  if (prompt.trim() === "") {
    return "prompt must not be empty";
  }
  return null;
}

export function validateBd(bd: Vec2 | null): string | null {
  if (bd === null) {
    return "click the map to choose a target position first";
  }
  return null;
}

export interface RolloutRowView {
  index: number;
  chosen: boolean;
  bdError: number;
  bdErrorPct: number;
  oracleScore: number | null;
}

// Per-trajectory result rows: absolute bd error, the same error as a
// percentage of the map diagonal, and the oracle score when available.
export function rolloutRows(
  resp: RolloutResponse,
  diagonal: number,
): RolloutRowView[] {
  return resp.bd_errors.map((err, i) => ({
    index: i,
    chosen: i === resp.chosen_index,
    bdError: err,
    bdErrorPct: (err / diagonal) * 100,
    oracleScore: resp.oracle_scores[i] ?? null,
  }));
}

export function formatRow(row: RolloutRowView): string {
  const score =
    row.oracleScore === null ? "n/a" : row.oracleScore.toFixed(1);
  const tag = row.chosen ? " (chosen)" : "";
  return (
    `#${row.index}${tag}  bd err ${row.bdError.toFixed(2)} ` +
    `(${row.bdErrorPct.toFixed(1)}% of diagonal)  oracle ${score}`
  );
}
