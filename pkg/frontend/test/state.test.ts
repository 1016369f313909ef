import { describe, expect, it } from "vitest";
import type { RoundStatus } from "../src/api";
import { RoundTracker, verdictBanner } from "../src/state";

function status(overrides: Partial<RoundStatus>): RoundStatus {
  return {
    number: 1,
    state: "OPEN",
    family: "affine",
    ciphertext: "XYZ",
    offense: "alpha",
    defense: "bravo",
    start_ms: 0,
    clock_limit_ms: 600_000,
    elapsed_ms: 0,
    winner: null,
    outcome: null,
    times: {},
    version: 0,
    ...overrides,
  };
}

describe("RoundTracker versioning", () => {
  it("drops stale out-of-order responses", () => {
    const tracker = new RoundTracker("alpha");
    expect(tracker.update(status({ version: 3, state: "DECIDED" }))).toBe(true);
    expect(tracker.update(status({ version: 1 }))).toBe(false);
    expect(tracker.current?.state).toBe("DECIDED");
  });

  it("applies equal or newer versions", () => {
    const tracker = new RoundTracker("alpha");
    tracker.update(status({ version: 2 }));
    expect(tracker.update(status({ version: 2 }))).toBe(true);
    expect(tracker.update(status({ version: 5 }))).toBe(true);
  });
});

describe("indicator states mirror the server outcome", () => {
  it("waiting while undecided", () => {
    const tracker = new RoundTracker("alpha");
    tracker.update(status({}));
    expect(tracker.indicator()).toBe("waiting");
  });

  it("offense win shows LAUNCH for offense, opponent-first for defense", () => {
    const decided = status({ state: "DECIDED", winner: "alpha", outcome: "LAUNCH", version: 1 });
    const offense = new RoundTracker("alpha");
    offense.update(decided);
    expect(offense.indicator()).toBe("launch");
    const defense = new RoundTracker("bravo");
    defense.update(decided);
    expect(defense.indicator()).toBe("opponent-first");
  });

  it("defense win shows NO LAUNCH for defense", () => {
    const decided = status({ state: "DECIDED", winner: "bravo", outcome: "NO_LAUNCH", version: 1 });
    const defense = new RoundTracker("bravo");
    defense.update(decided);
    expect(defense.indicator()).toBe("no-launch");
  });

  it("timeout with no winner shows no-launch", () => {
    const final = status({ state: "FINALIZED", winner: null, outcome: "NO_LAUNCH", version: 2 });
    const tracker = new RoundTracker("alpha");
    tracker.update(final);
    expect(tracker.indicator()).toBe("no-launch");
  });
});

describe("advisory clock", () => {
  it("extends server elapsed time with local delta", () => {
    const tracker = new RoundTracker("alpha");
    tracker.update(status({ elapsed_ms: 10_000 }));
    expect(tracker.elapsedMs(5_500, 5_000)).toBe(10_500);
  });
});

describe("verdict banners", () => {
  it("covers the four outcomes", () => {
    expect(verdictBanner({ team: "a", correct: false, first: false, outcome: null }))
      .toMatch(/Incorrect/);
    expect(verdictBanner({ team: "a", correct: true, first: true, outcome: "LAUNCH" }))
      .toMatch(/LAUNCH!/);
    expect(verdictBanner({ team: "b", correct: true, first: true, outcome: "NO_LAUNCH" }))
      .toMatch(/blocked/);
    expect(verdictBanner({ team: "a", correct: true, first: false, outcome: "NO_LAUNCH" }))
      .toMatch(/opponent was first/);
  });
});
