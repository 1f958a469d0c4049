// HTTP client for the rollout service. Responses are validated against the
// shapes in types.ts before they reach the UI; failures surface as ApiError
// with enough context (status, parsed body) for inline diagnostics. The
// client never issues more than one rollout request at a time: the service
// bounds its admission queue, and the UI disables submission while a request
// is pending, so a second concurrent call is always a programming error.

import {
  isMapPayload,
  isModelPayload,
  isRolloutResponse,
  type ApiErrorBody,
  type MapPayload,
  type ModelPayload,
  type RolloutRequest,
  type RolloutResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number | null = null,
    readonly body: ApiErrorBody | null = null,
  ) {
    super(message);
    this.name = "ApiError";
  }

  // One-line summary suitable for an inline banner, including whatever
  // diagnostics the service attached to the failure.
  describe(): string {
    const parts: string[] = [];
    if (this.status !== null) parts.push(`HTTP ${this.status}`);
    parts.push(this.message);
    if (this.body?.fields) {
      for (const [field, msg] of Object.entries(this.body.fields)) {
        parts.push(`${field}: ${msg}`);
      }
    }
    if (this.body?.bd && this.body?.bounds) {
      parts.push(
        `bd [${this.body.bd.join(", ")}] outside [0, ${this.body.bounds[0]}] x [0, ${this.body.bounds[1]}]`,
      );
    }
    if (this.body?.max_concurrent !== undefined) {
      parts.push(`service at capacity (${this.body.max_concurrent} concurrent)`);
    }
    return parts.join(" | ");
  }
}

async function errorFromResponse(resp: Response): Promise<ApiError> {
  let body: ApiErrorBody | null = null;
  try {
    const parsed: unknown = await resp.json();
    if (typeof parsed === "object" && parsed !== null && "error" in parsed) {
      body = parsed as ApiErrorBody;
    }
  } catch {
    // Non-JSON error body; fall through with status only.
  }
  const message = body?.error ?? `request failed with status ${resp.status}`;
  return new ApiError(message, resp.status, body);
}

export class ApiClient {
  private rolloutPending = false;

  constructor(readonly baseUrl = "") {}

  get pending(): boolean {
    return this.rolloutPending;
  }

  private async getJson(path: string): Promise<unknown> {
    let resp: Response;
    try {
      resp = await fetch(this.baseUrl + path);
    } catch (err) {
      throw new ApiError(`cannot reach service: ${String(err)}`);
    }
    if (!resp.ok) throw await errorFromResponse(resp);
    return resp.json();
  }

  async getMap(): Promise<MapPayload> {
    const data = await this.getJson("/api/map");
    if (!isMapPayload(data)) {
      throw new ApiError("malformed /api/map payload");
    }
    return data;
  }

  async getModel(): Promise<ModelPayload> {
    const data = await this.getJson("/api/model");
    if (!isModelPayload(data)) {
      throw new ApiError("malformed /api/model payload");
    }
    return data;
  }

  async postRollout(req: RolloutRequest): Promise<RolloutResponse> {
    if (this.rolloutPending) {
      throw new ApiError("a rollout request is already in flight");
    }
    this.rolloutPending = true;
    try {
      let resp: Response;
      try {
        resp = await fetch(this.baseUrl + "/api/rollout", {
          method: "POST",
          headers: { "Content-Type": "application/json" },
          body: JSON.stringify(req),
        });
      } catch (err) {
        throw new ApiError(`cannot reach service: ${String(err)}`);
      }
      if (!resp.ok) throw await errorFromResponse(resp);
      const data: unknown = await resp.json();
      if (!isRolloutResponse(data)) {
        throw new ApiError("malformed /api/rollout payload");
      }
      return data;
    } finally {
      this.rolloutPending = false;
    }
  }
}
