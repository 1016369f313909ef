// Round-state tracking for a single console session. Status responses can
// arrive out of order when polling; the server's version counter decides
// which one is newest, and stale responses are dropped.

import type { RoundStatus, SubmitVerdict } from "./api.js";

export type Indicator =
  | "waiting" // round open, no decision yet
  | "launch" // we are offense and offense won
  | "no-launch" // we are defense and defense won (or nobody solved)
  | "opponent-first"; // the other team holds the win

export class RoundTracker {
  private status: RoundStatus | null = null;

  constructor(public readonly team: string) {}

  get current(): RoundStatus | null {
    return this.status;
  }

  /** Returns true if the update was applied (i.e. not stale). */
  update(next: RoundStatus): boolean {
    if (this.status && next.version < this.status.version) return false;
    this.status = next;
    return true;
  }

  get role(): "offense" | "defense" | null {
    if (!this.status) return null;
    if (this.status.offense === this.team) return "offense";
    if (this.status.defense === this.team) return "defense";
    return null;
  }

  /** Advisory display clock only; authoritative times come from the server. */
  elapsedMs(nowMs: number, fetchedAtMs: number): number {
    if (!this.status) return 0;
    return this.status.elapsed_ms + Math.max(0, nowMs - fetchedAtMs);
  }

  myRecordedTime(): number | null {
    return this.status?.times[this.team] ?? null;
  }

  indicator(): Indicator {
    const s = this.status;
    if (!s || s.outcome === null) return "waiting";
    const weWon = s.winner === this.team;
    if (weWon) return this.role === "offense" ? "launch" : "no-launch";
    if (s.winner === null) return "no-launch"; // finalized, nobody solved
    return "opponent-first";
  }
}

export function verdictBanner(v: SubmitVerdict): string {
  if (!v.correct) return "Incorrect PIN — the clock is still running.";
  if (v.first) {
    return v.outcome === "LAUNCH"
      ? "Correct and FIRST — LAUNCH!"
      : "Correct and FIRST — launch blocked (NO LAUNCH).";
  }
  return "Correct, but the opponent was first. Your time is recorded.";
}
