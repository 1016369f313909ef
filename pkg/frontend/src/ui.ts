// DOM rendering for the hacker console. Pure views: everything shown is
// either server data or a deterministic recomputation pinned to match it.

import {
  digraphCounts,
  letterCounts,
  rankDigraphs,
  rankLetters,
  type Key,
} from "./engine.js";
import type { Indicator } from "./state.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderCiphertext(target: HTMLElement, family: string, text: string): void {
  target.replaceChildren(
    el("div", "family-label", `${family} cipher — ${text.length} letters`),
    el("pre", "ciphertext", text.replace(/(.{50})/g, "$1\n")),
  );
}

export function renderStopwatch(target: HTMLElement, elapsedMs: number): void {
  const s = Math.floor(elapsedMs / 1000);
  const mm = String(Math.floor(s / 60)).padStart(2, "0");
  const ss = String(s % 60).padStart(2, "0");
  target.textContent = `${mm}:${ss}`;
}

export function renderLetterChart(target: HTMLElement, text: string): void {
  const counts = letterCounts(text);
  const peak = Math.max(1, ...counts);
  const chart = el("div", "letter-chart");
  for (let i = 0; i < 26; i++) {
    const col = el("div", "bar-col");
    const bar = el("div", "bar");
    bar.style.height = `${Math.round((counts[i] / peak) * 100)}px`;
    bar.title = String(counts[i]);
    col.append(bar, el("div", "bar-label", String.fromCharCode(65 + i)));
    chart.append(col);
  }
  const ranked = rankLetters(counts).slice(0, 6).join(" ");
  target.replaceChildren(chart, el("div", "rank-line", `most frequent: ${ranked}`));
}

export function renderDigraphHeatmap(target: HTMLElement, text: string): void {
  const counts = digraphCounts(text, "block-aligned");
  const ranked = rankDigraphs(counts);
  const list = el("ol", "digraph-rank");
  for (const sym of ranked.slice(0, 12)) {
    const count = counts[sym.charCodeAt(0) - 65][sym.charCodeAt(1) - 65];
    if (count === 0) break;
    list.append(el("li", undefined, `${sym}: ${count}`));
  }
  target.replaceChildren(el("div", "rank-title", "top digraphs (block pairs)"), list);
}

export function letterPicker(id: string, label: string): HTMLElement {
  const wrap = el("label", "picker", `${label} `);
  const select = el("select");
  select.id = id;
  for (let i = 0; i < 26; i++) {
    select.append(new Option(String.fromCharCode(65 + i)));
  }
  wrap.append(select);
  return wrap;
}

export function digraphPicker(id: string, label: string, suggestions: string[]): HTMLElement {
  const wrap = el("label", "picker", `${label} `);
  const input = el("input");
  input.id = id;
  input.maxLength = 2;
  input.placeholder = suggestions[0] ?? "??";
  const hint = el("span", "hint", ` suggestions: ${suggestions.slice(0, 5).join(" ")}`);
  wrap.append(input, hint);
  return wrap;
}

export function renderKeyResult(target: HTMLElement, key: Key | null, trial: string | null): void {
  if (key === null) {
    target.replaceChildren(
      el("div", "no-key-banner", "No such key is possible — revise the guesses and retry."),
    );
    return;
  }
  const desc =
    key.family === "additive"
      ? `shift k = ${key.k}`
      : key.family === "affine"
        ? `a = ${key.a}, b = ${key.b}`
        : `matrix [[${key.matrix[0]}, ${key.matrix[1]}], [${key.matrix[2]}, ${key.matrix[3]}]]`;
  const nodes: HTMLElement[] = [el("div", "key-line", `recovered key: ${desc}`)];
  if (trial !== null) {
    nodes.push(el("pre", "trial", trial.slice(0, 120)));
  }
  target.replaceChildren(...nodes);
}

const INDICATOR_TEXT: Record<Indicator, string> = {
  waiting: "round in progress",
  launch: "LAUNCH",
  "no-launch": "NO LAUNCH",
  "opponent-first": "opponent was first",
};

export function renderIndicator(target: HTMLElement, state: Indicator): void {
  target.className = `indicator indicator-${state}`;
  target.textContent = INDICATOR_TEXT[state];
}

export function banner(target: HTMLElement, kind: "info" | "error", message: string): void {
  target.replaceChildren(el("div", `banner banner-${kind}`, message));
}
