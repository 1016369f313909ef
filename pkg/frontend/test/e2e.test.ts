// End-to-end duel: boots the real server, then drives two console
// sessions (offense and defense) through the public API exactly as the
// browser code does.

import { spawn, execFileSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { AdminClient, DuelClient } from "../src/api";
import { decipher, letterCounts, parsePin, recoverAffine } from "../src/engine";
import { RoundTracker } from "../src/state";

const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
let workdir: string;
let sealed: { pin: string; key: { a: number; b: number } };

async function waitForHealth(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/api/health`);
      if (res.ok) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  workdir = mkdtempSync(join(tmpdir(), "duel-e2e-"));
  const contestPath = join(workdir, "contest.json");
  execFileSync("python3", [
    "-m", "cipherduel.cli", "gen",
    "--kind", "contest", "--seed", "1234", "--rounds", "1", "--out", contestPath,
  ]);
  const manifest = JSON.parse(readFileSync(contestPath, "utf-8"));
  const entry = manifest.entries[0].sealed;
  sealed = { pin: entry.pin, key: entry.key };

  const teamsPath = join(workdir, "teams.json");
  writeFileSync(
    teamsPath,
    JSON.stringify({
      admin_token: "admin-e2e",
      teams: { alpha: "tok-alpha", bravo: "tok-bravo" },
    }),
  );

  server = spawn("python3", [
    "-m", "cipherduel.cli", "serve",
    "--contest-manifest", contestPath,
    "--log", join(workdir, "events.log"),
    "--teams", teamsPath,
    "--port", String(PORT),
  ], { stdio: "ignore" });
  await waitForHealth();
}, 30_000);

afterAll(() => {
  server?.kill();
});

describe("scripted round over the live server", () => {
  const admin = new AdminClient(BASE, "admin-e2e");
  const offense = new DuelClient(BASE, "tok-alpha");
  const defense = new DuelClient(BASE, "tok-bravo");

  it("runs a full duel with matching indicators", async () => {
    await admin.createRound(1, "alpha", "bravo");

    // both consoles load the same ciphertext
    const statusA = await offense.roundStatus(1);
    const statusB = await defense.roundStatus(1);
    expect(statusA.ciphertext).toBe(statusB.ciphertext);
    expect(statusA.family).toBe("affine");

    // chart counts equal the server engine's counts exactly
    const counts = letterCounts(statusA.ciphertext);
    const serverCounts = JSON.parse(
      execFileSync("python3", [
        "-c",
        "import sys,json;from cipherduel.freq import letter_frequency;" +
          "print(json.dumps(list(letter_frequency(sys.argv[1]).counts)))",
        statusA.ciphertext,
      ]).toString(),
    );
    expect(counts).toEqual(serverCounts);
    expect(counts.reduce((a: number, b: number) => a + b, 0)).toBe(statusA.ciphertext.length);

    // correct e/t guesses (true images under the sealed key) break the cipher
    const { a, b } = sealed.key;
    const imageE = String.fromCharCode(65 + ((a * 4 + b) % 26));
    const imageT = String.fromCharCode(65 + ((a * 19 + b) % 26));
    const key = recoverAffine(imageE, imageT);
    expect(key).not.toBeNull();
    const plain = decipher(statusA.ciphertext, key!);
    const pin = parsePin(plain);
    expect(pin).toBe(sealed.pin);

    // a bad guess pair is reported as no-key, session continues
    expect(recoverAffine("A", "N")).toBeNull();

    // offense submits first and wins; defense still records a time
    const wrong = await offense.submitPin(1, pin === "0000" ? "0001" : "0000");
    expect(wrong.correct).toBe(false);

    const first = await offense.submitPin(1, pin!);
    expect(first).toMatchObject({ correct: true, first: true, outcome: "LAUNCH" });

    const second = await defense.submitPin(1, pin!);
    expect(second.correct).toBe(true);
    expect(second.first).toBe(false);

    // indicators on both consoles match the server's decision
    const trackerA = new RoundTracker("alpha");
    trackerA.update(await offense.roundStatus(1));
    expect(trackerA.indicator()).toBe("launch");

    const trackerB = new RoundTracker("bravo");
    trackerB.update(await defense.roundStatus(1));
    expect(trackerB.indicator()).toBe("opponent-first");

    // finalize: result agrees with what the consoles showed
    const result = await admin.finalize(1);
    expect(result.outcome).toBe("LAUNCH");
    expect(result.offense_time_ms).not.toBeNull();
    expect(result.defense_time_ms).not.toBeNull();
    expect(
      (result.offense_time_ms as number) <= (result.defense_time_ms as number),
    ).toBe(true);
  }, 30_000);
});
