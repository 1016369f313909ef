"""Letter and digraph frequency distributions, the English reference
table, chi-square fitness scoring, and the exhaustive brute-force solver
for additive/affine ciphertexts."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd

from .ciphers import ALPHABET, MOD, AdditiveKey, AffineKey, decipher, normalize

BLOCK_ALIGNED = "block-aligned"
SLIDING = "sliding"

MIN_REFERENCE_LETTERS = 10_000
REFERENCE_FORMAT_VERSION = 1


class EmptyText(ValueError):
    """Operation needs at least one letter of text."""


class CorpusTooSmall(ValueError):
    """Reference corpus is below the minimum letter count."""


@dataclass(frozen=True)
class LetterDistribution:
    counts: tuple[int, ...]  # 26 entries
    total: int

    @classmethod
    def empty(cls) -> LetterDistribution:
        return cls((0,) * 26, 0)


@dataclass(frozen=True)
class DigraphDistribution:
    counts: tuple[tuple[int, ...], ...]  # 26x26
    mode: str
    total: int


def letter_frequency(text: str) -> LetterDistribution:
    counts = [0] * 26
    for ch in text:
        counts[ord(ch) - 65] += 1
    return LetterDistribution(tuple(counts), len(text))


def digraph_frequency(text: str, mode: str = BLOCK_ALIGNED) -> DigraphDistribution:
    """Block-aligned pairs start at offsets 0,2,4,...; sliding at 0,1,2,...

    Block-aligned is the default because Hill encryption maps blocks at
    even offsets; sliding is what plain "consecutive pairs" reading gives.
    """
    if mode not in (BLOCK_ALIGNED, SLIDING):
        raise ValueError(f"unknown digraph mode {mode!r}")
    counts = [[0] * 26 for _ in range(26)]
    step = 2 if mode == BLOCK_ALIGNED else 1
    total = 0
    for i in range(0, len(text) - 1, step):
        counts[ord(text[i]) - 65][ord(text[i + 1]) - 65] += 1
        total += 1
    return DigraphDistribution(tuple(tuple(row) for row in counts), mode, total)


def rank(dist: LetterDistribution | DigraphDistribution) -> list[str]:
    """Symbols sorted by descending count; ties broken alphabetically."""
    if isinstance(dist, LetterDistribution):
        items = [(ALPHABET[i], dist.counts[i]) for i in range(26)]
    else:
        items = [
            (ALPHABET[i] + ALPHABET[j], dist.counts[i][j])
            for i in range(26)
            for j in range(26)
        ]
    items.sort(key=lambda kv: (-kv[1], kv[0]))
    return [sym for sym, _ in items]


@dataclass(frozen=True)
class ReferenceTable:
    letter_freq: tuple[float, ...]  # 26 probabilities
    digraph_freq: tuple[tuple[float, ...], ...]  # 26x26 probabilities
    source_label: str

    def check(self) -> None:
        """Assert the invariants the reference table promises."""
        assert abs(sum(self.letter_freq) - 1.0) <= 1e-9
        assert abs(sum(map(sum, self.digraph_freq)) - 1.0) <= 1e-9
        letters = sorted(range(26), key=lambda i: -self.letter_freq[i])
        assert ALPHABET[letters[0]] == "E" and ALPHABET[letters[1]] == "T"
        pairs = sorted(
            ((i, j) for i in range(26) for j in range(26)),
            key=lambda ij: -self.digraph_freq[ij[0]][ij[1]],
        )
        top2 = [ALPHABET[i] + ALPHABET[j] for i, j in pairs[:2]]
        assert top2 == ["TH", "HE"]

    def to_text(self) -> str:
        lines = [f"reference-table v{REFERENCE_FORMAT_VERSION} {self.source_label}"]
        lines += [repr(p) for p in self.letter_freq]
        for row in self.digraph_freq:
            lines += [repr(p) for p in row]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ReferenceTable:
        lines = text.splitlines()
        header = lines[0].split(maxsplit=2)
        if header[0] != "reference-table" or header[1] != f"v{REFERENCE_FORMAT_VERSION}":
            raise ValueError(f"unrecognized reference table header: {lines[0]!r}")
        label = header[2] if len(header) > 2 else ""
        values = [float(s) for s in lines[1 : 1 + 26 + 676]]
        letter = tuple(values[:26])
        digraph = tuple(tuple(values[26 + 26 * i : 26 + 26 * (i + 1)]) for i in range(26))
        return cls(letter, digraph, label)


def build_reference(corpus: str, source_label: str = "corpus") -> ReferenceTable:
    """Letter and sliding-digraph relative frequencies of a normalized corpus."""
    text = normalize(corpus)
    if len(text) < MIN_REFERENCE_LETTERS:
        raise CorpusTooSmall(
            f"corpus has {len(text)} letters, need {MIN_REFERENCE_LETTERS}"
        )
    letters = letter_frequency(text)
    digraphs = digraph_frequency(text, SLIDING)
    letter_freq = tuple(c / letters.total for c in letters.counts)
    digraph_freq = tuple(
        tuple(c / digraphs.total for c in row) for row in digraphs.counts
    )
    return ReferenceTable(letter_freq, digraph_freq, source_label)


@lru_cache(maxsize=1)
def default_reference() -> ReferenceTable:
    """Reference table built from the bundled English corpus."""
    corpus = (
        resources.files("cipherduel.data").joinpath("reference_corpus.txt").read_text()
    )
    table = build_reference(corpus, "bundled-english-corpus")
    table.check()
    return table


def chi_square(dist: LetterDistribution, ref: ReferenceTable) -> float:
    """Sum of (observed - expected)^2 / expected over letters with nonzero
    reference frequency."""
    if dist.total == 0:
        raise EmptyText("cannot score an empty text")
    score = 0.0
    for i in range(26):
        expected = dist.total * ref.letter_freq[i]
        if expected > 0:
            score += (dist.counts[i] - expected) ** 2 / expected
    return score


def brute_force_solve(
    cipher: str, family: str, ref: ReferenceTable | None = None
) -> list[tuple[AdditiveKey | AffineKey, float]]:
    """Try every key of the family, rank by chi-square of the trial plaintext.

    Ties break toward the smaller key (shift value, or (a, b) pair).
    """
    if ref is None:
        ref = default_reference()
    if not cipher:
        raise EmptyText("cannot solve an empty ciphertext")
    if family == "additive":
        keys: list[AdditiveKey | AffineKey] = [AdditiveKey(k) for k in range(MOD)]
    elif family == "affine":
        keys = [
            AffineKey(a, b)
            for a in range(MOD)
            if gcd(a, MOD) == 1
            for b in range(MOD)
        ]
    else:
        raise ValueError(f"brute force supports additive/affine, not {family!r}")
    scored = [
        (key, chi_square(letter_frequency(decipher(cipher, key)), ref)) for key in keys
    ]
    scored.sort(key=lambda kf: (kf[1], _key_order(kf[0])))
    return scored


def _key_order(key: AdditiveKey | AffineKey) -> tuple[int, ...]:
    return (key.k,) if isinstance(key, AdditiveKey) else (key.a, key.b)
