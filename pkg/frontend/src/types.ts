// Payload shapes for the rollout service HTTP API. The authoritative
// contract lives in api_schema.json at the repository root; these types
// mirror it field for field, and the guards below are used to validate
// every payload that crosses the network or an import boundary.

export type Vec2 = [number, number];

export interface MapObjectPayload {
  name: string;
  alias: string | null;
  position: Vec2;
  tile: string;
}

export interface MapPayload {
  name: string;
  width: number;
  height: number;
  start: Vec2;
  diagonal: number;
  tiles: string[][];
  walls: [number, number, number, number][];
  objects: MapObjectPayload[];
}

export interface ModelPayload {
  config: Record<string, unknown>;
  parameter_count: number;
  checkpoint: string;
  vocab_entries: number;
  horizon: number;
  n_max: number;
}

export interface RolloutRequest {
  prompt: string;
  bd: Vec2;
  n_rollouts?: number;
  temperature?: number;
  seed?: number | null;
}

export interface RolloutResponse {
  prompt: string;
  target_bd: Vec2;
  seed: number;
  chosen_index: number;
  bd_errors: number[];
  oracle_scores: (number | null)[];
  trajectories: Vec2[][];
}

export interface ApiErrorBody {
  error: string;
  fields?: Record<string, string>;
  bd?: Vec2;
  bounds?: Vec2;
  max_concurrent?: number;
}

// One submitted prompt with everything needed to replay it offline.
export interface SessionAttempt {
  prompt: string;
  target_bd: Vec2;
  response: RolloutResponse;
  timestamp: string;
  note: string;
}

export interface SessionExport {
  version: number;
  attempts: SessionAttempt[];
}

function isRecord(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function isFiniteNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

export function isVec2(v: unknown): v is Vec2 {
  return (
    Array.isArray(v) &&
    v.length === 2 &&
    isFiniteNumber(v[0]) &&
    isFiniteNumber(v[1])
  );
}

function isVec2Array(v: unknown): v is Vec2[] {
  return Array.isArray(v) && v.every(isVec2);
}

export function isMapObjectPayload(v: unknown): v is MapObjectPayload {
  if (!isRecord(v)) return false;
  return (
    typeof v.name === "string" &&
    (v.alias === null || typeof v.alias === "string") &&
    isVec2(v.position) &&
    typeof v.tile === "string"
  );
}

export function isMapPayload(v: unknown): v is MapPayload {
  if (!isRecord(v)) return false;
  if (typeof v.name !== "string") return false;
  if (!isFiniteNumber(v.width) || !isFiniteNumber(v.height)) return false;
  if (!isVec2(v.start) || !isFiniteNumber(v.diagonal)) return false;
  if (
    !Array.isArray(v.tiles) ||
    !v.tiles.every(
      (row) => Array.isArray(row) && row.every((c) => typeof c === "string"),
    )
  ) {
    return false;
  }
  if (
    !Array.isArray(v.walls) ||
    !v.walls.every(
      (w) => Array.isArray(w) && w.length === 4 && w.every(isFiniteNumber),
    )
  ) {
    return false;
  }
  return Array.isArray(v.objects) && v.objects.every(isMapObjectPayload);
}

export function isModelPayload(v: unknown): v is ModelPayload {
  if (!isRecord(v)) return false;
  return (
    isRecord(v.config) &&
    isFiniteNumber(v.parameter_count) &&
    typeof v.checkpoint === "string" &&
    isFiniteNumber(v.vocab_entries) &&
    isFiniteNumber(v.horizon) &&
    isFiniteNumber(v.n_max)
  );
}

export function isRolloutResponse(v: unknown): v is RolloutResponse {
  if (!isRecord(v)) return false;
  if (typeof v.prompt !== "string") return false;
  if (!isVec2(v.target_bd)) return false;
  if (!isFiniteNumber(v.seed) || !isFiniteNumber(v.chosen_index)) return false;
  if (!Array.isArray(v.bd_errors) || !v.bd_errors.every(isFiniteNumber)) {
    return false;
  }
  if (
    !Array.isArray(v.oracle_scores) ||
    !v.oracle_scores.every((s) => s === null || isFiniteNumber(s))
  ) {
    return false;
  }
  if (!Array.isArray(v.trajectories) || !v.trajectories.every(isVec2Array)) {
    return false;
  }
  const n = v.trajectories.length;
  return (
    v.bd_errors.length === n &&
    v.oracle_scores.length === n &&
    v.chosen_index >= 0 &&
    v.chosen_index < n
  );
}

export function isSessionAttempt(v: unknown): v is SessionAttempt {
  if (!isRecord(v)) return false;
  return (
    typeof v.prompt === "string" &&
    isVec2(v.target_bd) &&
    isRolloutResponse(v.response) &&
    typeof v.timestamp === "string" &&
    !Number.isNaN(Date.parse(v.timestamp)) &&
    typeof v.note === "string"
  );
}

export function isSessionExport(v: unknown): v is SessionExport {
  if (!isRecord(v)) return false;
  return (
    v.version === 1 &&
    Array.isArray(v.attempts) &&
    v.attempts.every(isSessionAttempt)
  );
}
