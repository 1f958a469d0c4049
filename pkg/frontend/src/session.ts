// Session history: an ordered log of rollout attempts that can be replayed
// offline, exported to JSON, and imported back. Imports are validated
// structurally before they replace anything, so a malformed file can never
// corrupt the in-memory session.

import {
  isSessionExport,
  type RolloutResponse,
  type SessionAttempt,
  type Vec2,
} from "./types";

export class SessionImportError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SessionImportError";
  }
}

export class SessionStore {
  private attempts: SessionAttempt[] = [];

  get length(): number {
    return this.attempts.length;
  }

  // Chronological order, oldest first.
  list(): readonly SessionAttempt[] {
    return this.attempts;
  }

  get(index: number): SessionAttempt {
    const a = this.attempts[index];
    if (a === undefined) {
      throw new RangeError(`no attempt at index ${index}`);
    }
    return a;
  }

  record(
    prompt: string,
    targetBd: Vec2,
    response: RolloutResponse,
    now: Date = new Date(),
  ): SessionAttempt {
    const attempt: SessionAttempt = {
      prompt,
      target_bd: targetBd,
      response,
      timestamp: now.toISOString(),
      note: "",
    };
    this.attempts.push(attempt);
    return attempt;
  }

  setNote(index: number, note: string): void {
    this.get(index).note = note;
  }

  exportJson(): string {
    return JSON.stringify({ version: 1, attempts: this.attempts }, null, 2);
  }

  // Replaces the current history with the imported one. Throws
  // SessionImportError on malformed input and leaves the store untouched.
  importJson(text: string): number {
    let parsed: unknown;
    try {
      parsed = JSON.parse(text);
    } catch (err) {
      throw new SessionImportError(`not valid JSON: ${String(err)}`);
    }
    if (!isSessionExport(parsed)) {
      throw new SessionImportError(
        "not a session export: expected {version: 1, attempts: [...]} " +
          "with well-formed rollout attempts",
      );
    }
    this.attempts = parsed.attempts;
    return this.attempts.length;
  }

  clear(): void {
    this.attempts = [];
  }
}
