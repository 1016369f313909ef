// Console entry point: wires the API client, round tracker, and views.
// Session parameters come from the query string:
//   ?server=http://host:8000&token=tok-a&team=alpha&round=1
//   ?server=...&token=...&practice=11

import { ApiError, DuelClient } from "./api.js";
import {
  decipher,
  normalize,
  parsePin,
  recoverAdditive,
  recoverAffine,
  recoverHill,
  rankDigraphs,
  digraphCounts,
  type Key,
} from "./engine.js";
import { RoundTracker, verdictBanner } from "./state.js";
import {
  banner,
  digraphPicker,
  letterPicker,
  renderCiphertext,
  renderDigraphHeatmap,
  renderIndicator,
  renderKeyResult,
  renderLetterChart,
  renderStopwatch,
} from "./ui.js";

const POLL_MS = 1500;

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function setupGuessForm(family: string, ciphertext: string): void {
  const form = $("guess-form");
  form.replaceChildren();
  if (family === "additive") {
    form.append(letterPicker("guess-e", "ciphertext letter for E"));
  } else if (family === "affine") {
    form.append(
      letterPicker("guess-e", "ciphertext letter for E"),
      letterPicker("guess-t", "ciphertext letter for T"),
    );
  } else {
    const suggestions = rankDigraphs(digraphCounts(ciphertext, "block-aligned"));
    form.append(
      digraphPicker("guess-th", "ciphertext digraph for TH", suggestions),
      digraphPicker("guess-he", "ciphertext digraph for HE", suggestions.slice(1)),
    );
  }
}

function readGuessKey(family: string): Key | null {
  const value = (id: string) =>
    (document.getElementById(id) as HTMLSelectElement | HTMLInputElement).value;
  if (family === "additive") return recoverAdditive(value("guess-e"));
  if (family === "affine") return recoverAffine(value("guess-e"), value("guess-t"));
  const th = normalize(value("guess-th"));
  const he = normalize(value("guess-he"));
  if (th.length !== 2 || he.length !== 2) return null;
  return recoverHill(th, he);
}

async function run(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const server = params.get("server") ?? "";
  const token = params.get("token") ?? "";
  const team = params.get("team") ?? "";
  const client = new DuelClient(server, token);

  const practiceIndex = params.get("practice");
  const roundNumber = params.get("round");

  let family = "";
  let ciphertext = "";
  const tracker = new RoundTracker(team);

  async function loadChallenge(): Promise<void> {
    if (practiceIndex !== null) {
      const entry = await client.practice(Number(practiceIndex));
      family = entry.family;
      ciphertext = entry.ciphertext;
      return;
    }
    const status = await client.roundStatus(Number(roundNumber));
    tracker.update(status);
    family = status.family;
    ciphertext = status.ciphertext;
  }

  try {
    await loadChallenge();
  } catch (err) {
    const detail =
      err instanceof ApiError ? err.message : "server unreachable — retrying...";
    banner($("banners"), "error", detail);
    setTimeout(run, 3000);
    return;
  }

  renderCiphertext($("ciphertext-pane"), family, ciphertext);
  renderLetterChart($("letter-chart"), ciphertext);
  if (family === "hill") renderDigraphHeatmap($("digraph-pane"), ciphertext);
  setupGuessForm(family, ciphertext);

  let key: Key | null = null;
  $("attack-btn").addEventListener("click", () => {
    key = readGuessKey(family);
    const trial = key === null ? null : decipher(ciphertext, key);
    renderKeyResult($("key-result"), key, trial);
    if (trial !== null) {
      const pin = parsePin(trial);
      if (pin !== null) {
        ($("pin-input") as HTMLInputElement).value = pin;
        banner($("banners"), "info", `PIN candidate found: ${pin}`);
      }
    }
  });

  if (roundNumber === null) return; // practice mode: no clock, no submission

  const fetchedAt = Date.now();
  setInterval(() => {
    renderStopwatch($("stopwatch"), tracker.elapsedMs(Date.now(), fetchedAt));
  }, 250);

  setInterval(async () => {
    try {
      const status = await client.roundStatus(Number(roundNumber));
      if (tracker.update(status)) renderIndicator($("indicator"), tracker.indicator());
    } catch {
      /* transient poll failure; next tick retries */
    }
  }, POLL_MS);

  $("submit-btn").addEventListener("click", async () => {
    const pin = ($("pin-input") as HTMLInputElement).value.trim();
    try {
      const verdict = await client.submitPin(Number(roundNumber), pin);
      banner($("banners"), verdict.correct ? "info" : "error", verdictBanner(verdict));
    } catch (err) {
      banner($("banners"), "error", err instanceof ApiError ? err.message : String(err));
    }
  });
}

run();
