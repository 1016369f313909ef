// Thin typed client for the duel server (see docs/API.md in the repo root).
// The console never arbitrates anything client-side: every authoritative
// value (times, winner, outcome) comes from these endpoints.

export interface PracticeEntry {
  index: number;
  family: string;
  ciphertext: string;
}

export interface RoundStatus {
  number: number;
  state: "OPEN" | "DECIDED" | "FINALIZED";
  family: string;
  ciphertext: string;
  offense: string;
  defense: string;
  start_ms: number;
  clock_limit_ms: number;
  elapsed_ms: number;
  winner: string | null;
  outcome: "LAUNCH" | "NO_LAUNCH" | null;
  times: Record<string, number>;
  version: number;
}

export interface SubmitVerdict {
  team: string;
  correct: boolean;
  first: boolean;
  outcome: "LAUNCH" | "NO_LAUNCH" | null;
}

export interface Scoreboard {
  complete: boolean;
  timing?: Record<string, { offense: number; defense: number }>;
  scoresheets?: Record<string, Record<string, number>>;
  results?: Record<string, unknown>;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

export class DuelClient {
  constructor(private baseUrl: string, private token: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method,
      headers: {
        "X-Auth-Token": this.token,
        ...(body !== undefined ? { "Content-Type": "application/json" } : {}),
      },
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const text = await res.text();
    if (!res.ok) {
      let detail = text;
      try {
        detail = JSON.parse(text).detail ?? text;
      } catch {
        /* plain-text error body */
      }
      throw new ApiError(res.status, detail);
    }
    return JSON.parse(text) as T;
  }

  practice(index: number): Promise<PracticeEntry> {
    return this.request("GET", `/api/practice/${index}`);
  }

  roundStatus(round: number): Promise<RoundStatus> {
    return this.request("GET", `/api/rounds/${round}`);
  }

  submitPin(round: number, pin: string): Promise<SubmitVerdict> {
    return this.request("POST", `/api/rounds/${round}/submit`, { pin });
  }

  scoreboard(): Promise<Scoreboard> {
    return this.request("GET", "/api/scoreboard");
  }
}

export class AdminClient {
  constructor(private baseUrl: string, private token: string) {}

  private async post<T>(path: string, body?: unknown): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "X-Auth-Token": this.token, "Content-Type": "application/json" },
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    if (!res.ok) throw new ApiError(res.status, await res.text());
    return (await res.json()) as T;
  }

  createRound(number: number, offense: string, defense: string): Promise<unknown> {
    return this.post("/api/admin/rounds", { number, offense, defense });
  }

  finalize(number: number): Promise<Record<string, unknown>> {
    return this.post(`/api/admin/rounds/${number}/finalize`);
  }
}
