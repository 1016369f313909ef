// Client-side mirror of the server's cipher/analysis engine. Every number
// the console displays must match the authoritative implementation exactly,
// so the rules here (tie-breaks included) are pinned by tests against
// values frozen from the server engine.

export const MOD = 26;
const A = "A".charCodeAt(0);

export function normalize(raw: string): string {
  return raw.toUpperCase().replace(/[^A-Z]/g, "");
}

export function toNums(text: string): number[] {
  return [...text].map((ch) => ch.charCodeAt(0) - A);
}

export function toLetters(nums: number[]): string {
  return nums.map((n) => String.fromCharCode(A + (((n % MOD) + MOD) % MOD))).join("");
}

function mod(n: number): number {
  return ((n % MOD) + MOD) % MOD;
}

function gcd(a: number, b: number): number {
  while (b !== 0) [a, b] = [b, a % b];
  return Math.abs(a);
}

export function modInverse(a: number): number | null {
  a = mod(a);
  for (let x = 0; x < MOD; x++) if ((a * x) % MOD === 1) return x;
  return null;
}

// --- distributions -------------------------------------------------------

export function letterCounts(text: string): number[] {
  const counts = new Array(26).fill(0);
  for (const ch of text) counts[ch.charCodeAt(0) - A]++;
  return counts;
}

export type DigraphMode = "block-aligned" | "sliding";

export function digraphCounts(text: string, dmode: DigraphMode): number[][] {
  const counts = Array.from({ length: 26 }, () => new Array(26).fill(0));
  const step = dmode === "block-aligned" ? 2 : 1;
  for (let i = 0; i + 1 < text.length; i += step) {
    counts[text.charCodeAt(i) - A][text.charCodeAt(i + 1) - A]++;
  }
  return counts;
}

// Descending count, alphabetical tie-break: identical to the server rule.
export function rankLetters(counts: number[]): string[] {
  const syms = Array.from({ length: 26 }, (_, i) => String.fromCharCode(A + i));
  return syms.sort((x, y) => {
    const d = counts[y.charCodeAt(0) - A] - counts[x.charCodeAt(0) - A];
    return d !== 0 ? d : x < y ? -1 : 1;
  });
}

export function rankDigraphs(counts: number[][]): string[] {
  const items: Array<[string, number]> = [];
  for (let i = 0; i < 26; i++)
    for (let j = 0; j < 26; j++)
      items.push([String.fromCharCode(A + i) + String.fromCharCode(A + j), counts[i][j]]);
  items.sort((x, y) => (y[1] - x[1] !== 0 ? y[1] - x[1] : x[0] < y[0] ? -1 : 1));
  return items.map(([sym]) => sym);
}

// --- keys and deciphering ------------------------------------------------

export type Family = "additive" | "affine" | "hill";

export type Key =
  | { family: "additive"; k: number }
  | { family: "affine"; a: number; b: number }
  | { family: "hill"; matrix: [number, number, number, number] }; // row-major

export function decipher(text: string, key: Key): string {
  if (key.family === "additive") {
    return toLetters(toNums(text).map((n) => n - key.k));
  }
  if (key.family === "affine") {
    const aInv = modInverse(key.a);
    if (aInv === null) throw new Error(`multiplier ${key.a} is not a unit`);
    return toLetters(toNums(text).map((n) => aInv * (n - key.b)));
  }
  const inv = matInverse(key.matrix);
  if (inv === null) throw new Error("Hill matrix is not invertible");
  if (text.length % 2) throw new Error("odd-length Hill ciphertext");
  const nums = toNums(text);
  const out: number[] = [];
  for (let i = 0; i < nums.length; i += 2) {
    const [a, b, c, d] = inv;
    out.push(mod(a * nums[i] + b * nums[i + 1]), mod(c * nums[i] + d * nums[i + 1]));
  }
  return toLetters(out);
}

function matInverse(m: [number, number, number, number]): [number, number, number, number] | null {
  const [a, b, c, d] = m.map(mod);
  const detInv = modInverse(a * d - b * c);
  if (detInv === null) return null;
  return [mod(detInv * d), mod(detInv * -b), mod(detInv * -c), mod(detInv * a)];
}

// --- crib recovery -------------------------------------------------------
// Guess vocabulary is fixed: image of E; images of E and T; images of the
// digraphs TH and HE. A null return means "no such key is possible".

const E = 4, T = 19, H = 7;
const INV15 = 7; // modInverse(T - E)

export function recoverAdditive(cForE: string): Key {
  return { family: "additive", k: mod(normalize(cForE).charCodeAt(0) - A - E) };
}

export function recoverAffine(cForE: string, cForT: string): Key | null {
  const cE = normalize(cForE).charCodeAt(0) - A;
  const cT = normalize(cForT).charCodeAt(0) - A;
  const a = mod(INV15 * (cT - cE));
  if (gcd(a, MOD) !== 1) return null;
  return { family: "affine", a, b: mod(cE - a * E) };
}

export function recoverHill(cForTH: string, cForHE: string): Key | null {
  const th = toNums(normalize(cForTH));
  const he = toNums(normalize(cForHE));
  // C * P^-1 with P = [[T, H], [H, E]] (TH and HE as columns); det(P) = 1
  const pInv = matInverse([T, H, H, E])!;
  const cMat: [number, number, number, number] = [th[0], he[0], th[1], he[1]];
  const [a, b, c, d] = cMat;
  const [p, q, r, s] = pInv;
  const k: [number, number, number, number] = [
    mod(a * p + b * r), mod(a * q + b * s),
    mod(c * p + d * r), mod(c * q + d * s),
  ];
  if (matInverse(k) === null) return null;
  return { family: "hill", matrix: k };
}

// --- PIN extraction ------------------------------------------------------

const DIGIT_WORDS = [
  "ZERO", "ONE", "TWO", "THREE", "FOUR", "FIVE", "SIX", "SEVEN", "EIGHT", "NINE",
];

export function parsePin(plaintext: string): string | null {
  let pos = 0;
  let pin = "";
  for (let i = 0; i < 4; i++) {
    const d = DIGIT_WORDS.findIndex((w) => plaintext.startsWith(w, pos));
    if (d < 0) return null;
    pin += d;
    pos += DIGIT_WORDS[d].length;
  }
  return pin;
}
