// Playground entry point: wires the DOM to the API client, the scene
// builders, and the session store. All state lives here; the modules it
// calls into are side-effect free.

import { ApiClient, ApiError } from "./api";
import { formatRow, rolloutRows, validateBd, validatePrompt } from "./controller";
import { drawScene } from "./render";
import {
  buildCrosshair,
  buildMapScene,
  buildRolloutScene,
  trajectoryColor,
  type Shape,
} from "./scene";
import { SessionImportError, SessionStore } from "./session";
import { ViewTransform } from "./transform";
import type { MapPayload, ModelPayload, RolloutResponse, Vec2 } from "./types";

const CANVAS_SIZE = 640;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>("maze-canvas");
const banner = el<HTMLDivElement>("error-banner");
const bannerText = el<HTMLSpanElement>("error-text");
const retryButton = el<HTMLButtonElement>("retry-button");
const modelLine = el<HTMLParagraphElement>("model-line");
const promptInput = el<HTMLTextAreaElement>("prompt-input");
const bdReadout = el<HTMLSpanElement>("bd-readout");
const nInput = el<HTMLInputElement>("n-input");
const tempInput = el<HTMLInputElement>("temp-input");
const seedInput = el<HTMLInputElement>("seed-input");
const submitButton = el<HTMLButtonElement>("submit-button");
const formError = el<HTMLDivElement>("form-error");
const resultRows = el<HTMLDivElement>("result-rows");
const historyList = el<HTMLUListElement>("history-list");
const exportButton = el<HTMLButtonElement>("export-button");
const importInput = el<HTMLInputElement>("import-input");
const importStatus = el<HTMLSpanElement>("import-status");

const client = new ApiClient("");
const store = new SessionStore();

let map: MapPayload | null = null;
let view: ViewTransform | null = null;
let targetBd: Vec2 | null = null;
let lastResponse: RolloutResponse | null = null;

function render(): void {
  if (map === null || view === null) return;
  const ctx = canvas.getContext("2d");
  if (ctx === null) return;
  ctx.fillStyle = "#17181d";
  ctx.fillRect(0, 0, canvas.width, canvas.height);
  const shapes: Shape[] = buildMapScene(map, view);
  if (lastResponse !== null) {
    shapes.push(...buildRolloutScene(lastResponse, view));
  }
  if (targetBd !== null) {
    shapes.push(buildCrosshair(targetBd, view));
  }
  drawScene(ctx, shapes);
}

function showBanner(message: string): void {
  bannerText.textContent = message;
  banner.hidden = false;
}

function clearBanner(): void {
  banner.hidden = true;
}

function showFormError(message: string | null): void {
  formError.textContent = message ?? "";
  formError.hidden = message === null;
}

function renderResultRows(resp: RolloutResponse): void {
  if (map === null) return;
  resultRows.replaceChildren();
  for (const row of rolloutRows(resp, map.diagonal)) {
    const div = document.createElement("div");
    div.className = row.chosen ? "result-row chosen" : "result-row";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.backgroundColor = trajectoryColor(row.index);
    div.append(swatch, document.createTextNode(" " + formatRow(row)));
    resultRows.append(div);
  }
  const seedLine = document.createElement("div");
  seedLine.className = "seed-line";
  seedLine.textContent = `seed ${resp.seed}`;
  resultRows.append(seedLine);
}

function renderHistory(): void {
  historyList.replaceChildren();
  store.list().forEach((attempt, i) => {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.className = "replay-button";
    const when = new Date(attempt.timestamp).toLocaleTimeString();
    button.textContent =
      `${when}  "${attempt.prompt}" -> ` +
      `[${attempt.target_bd[0].toFixed(1)}, ${attempt.target_bd[1].toFixed(1)}]`;
    button.addEventListener("click", () => replay(i));
    const note = document.createElement("input");
    note.type = "text";
    note.placeholder = "note";
    note.value = attempt.note;
    note.addEventListener("change", () => store.setNote(i, note.value));
    item.append(button, note);
    historyList.append(item);
  });
}

// Replaying an attempt re-renders entirely from stored data; no request
// leaves the browser.
function replay(index: number): void {
  const attempt = store.get(index);
  promptInput.value = attempt.prompt;
  targetBd = attempt.target_bd;
  lastResponse = attempt.response;
  bdReadout.textContent =
    `[${attempt.target_bd[0].toFixed(1)}, ${attempt.target_bd[1].toFixed(1)}]`;
  renderResultRows(attempt.response);
  render();
}

async function loadMap(): Promise<void> {
  clearBanner();
  try {
    map = await client.getMap();
    view = new ViewTransform(map.width, map.height, CANVAS_SIZE, CANVAS_SIZE);
    render();
  } catch (err) {
    map = null;
    const detail = err instanceof ApiError ? err.describe() : String(err);
    showBanner(`could not load the map: ${detail}`);
  }
  try {
    const model: ModelPayload = await client.getModel();
    modelLine.textContent =
      `checkpoint ${model.checkpoint} | ${model.parameter_count.toLocaleString()} parameters | ` +
      `horizon ${model.horizon} | up to ${model.n_max} rollouts per request`;
    nInput.max = String(model.n_max);
  } catch {
    modelLine.textContent = "model info unavailable";
  }
}

canvas.addEventListener("click", (ev) => {
  if (view === null) return;
  const rect = canvas.getBoundingClientRect();
  const px = Math.round(ev.clientX - rect.left);
  const py = Math.round(ev.clientY - rect.top);
  const world = view.toWorld([px, py]);
  if (!view.inBounds(world)) return;
  targetBd = world;
  bdReadout.textContent = `[${world[0].toFixed(1)}, ${world[1].toFixed(1)}]`;
  showFormError(null);
  render();
});

submitButton.addEventListener("click", async () => {
  const promptProblem = validatePrompt(promptInput.value);
  if (promptProblem !== null) {
    showFormError(promptProblem);
    return;
  }
  const bdProblem = validateBd(targetBd);
  if (bdProblem !== null || targetBd === null) {
    showFormError(bdProblem);
    return;
  }
  if (client.pending) return;
  showFormError(null);
  submitButton.disabled = true;
  submitButton.textContent = "running...";
  try {
    const seedRaw = seedInput.value.trim();
    const resp = await client.postRollout({
      prompt: promptInput.value,
      bd: targetBd,
      n_rollouts: Number(nInput.value),
      temperature: Number(tempInput.value),
      seed: seedRaw === "" ? null : Number(seedRaw),
    });
    lastResponse = resp;
    store.record(resp.prompt, resp.target_bd, resp);
    renderResultRows(resp);
    renderHistory();
    render();
  } catch (err) {
    const detail = err instanceof ApiError ? err.describe() : String(err);
    showFormError(detail);
  } finally {
    submitButton.disabled = false;
    submitButton.textContent = "run rollouts";
  }
});

exportButton.addEventListener("click", () => {
  const blob = new Blob([store.exportJson()], { type: "application/json" });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = "promptmaze-session.json";
  a.click();
  URL.revokeObjectURL(url);
});

importInput.addEventListener("change", async () => {
  const file = importInput.files?.[0];
  if (file === undefined) return;
  try {
    const count = store.importJson(await file.text());
    importStatus.textContent = `imported ${count} attempts`;
    renderHistory();
  } catch (err) {
    const detail =
      err instanceof SessionImportError ? err.message : String(err);
    importStatus.textContent = `import failed: ${detail}`;
  } finally {
    importInput.value = "";
  }
});

retryButton.addEventListener("click", () => void loadMap());

canvas.width = CANVAS_SIZE;
canvas.height = CANVAS_SIZE;
void loadMap();
