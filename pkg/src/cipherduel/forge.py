"""Challenge plaintext generation: a four-digit PIN spelled out in words
followed by random sentences drawn from a frequency-biased corpus, plus
the PIN parser that reads the answer back out of a decryption."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .ciphers import CipherKey, encipher, normalize
from .freq import SLIDING, digraph_frequency, letter_frequency, rank

DIGIT_WORDS = (
    "ZERO", "ONE", "TWO", "THREE", "FOUR",
    "FIVE", "SIX", "SEVEN", "EIGHT", "NINE",
)


class MalformedPin(ValueError):
    """Text does not start with four spelled-out digits."""


class EmptyCorpus(ValueError):
    pass


@dataclass(frozen=True)
class Pin:
    digits: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.digits) != 4 or any(not 0 <= d <= 9 for d in self.digits):
            raise ValueError(f"PIN must be 4 digits 0-9, got {self.digits}")

    @classmethod
    def from_string(cls, s: str) -> Pin:
        s = s.strip()
        if len(s) != 4 or not s.isdigit():
            raise MalformedPin(f"expected 4 decimal digits, got {s!r}")
        return cls(tuple(int(ch) for ch in s))

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits)


def spell_pin(pin: Pin) -> str:
    """1947 -> ONENINEFOURSEVEN."""
    return "".join(DIGIT_WORDS[d] for d in pin.digits)


def parse_pin(plaintext: str) -> Pin:
    """Greedy left-to-right match of exactly four digit words at position 0.

    The ten digit words are mutually prefix-free, so greedy decoding is
    unambiguous; the remainder of the text is ignored.
    """
    digits = []
    pos = 0
    for _ in range(4):
        for d, word in enumerate(DIGIT_WORDS):
            if plaintext.startswith(word, pos):
                digits.append(d)
                pos += len(word)
                break
        else:
            raise MalformedPin(f"no digit word at position {pos}")
    return Pin(tuple(digits))


@dataclass(frozen=True)
class SentenceCorpus:
    sentences: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.sentences:
            raise EmptyCorpus("sentence corpus is empty")
        for s in self.sentences:
            if not normalize(s):
                raise ValueError(f"sentence normalizes to nothing: {s!r}")

    @classmethod
    def from_file(cls, path: str | Path) -> SentenceCorpus:
        """One sentence per line; blank lines and '#' comments ignored."""
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        sentences = tuple(
            line.strip() for line in lines if line.strip() and not line.lstrip().startswith("#")
        )
        return cls(sentences)

    @classmethod
    def default(cls) -> SentenceCorpus:
        from importlib import resources

        text = resources.files("cipherduel.data").joinpath("sentences.txt").read_text()
        sentences = tuple(
            line.strip()
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        )
        return cls(sentences)


@dataclass(frozen=True)
class ChallengeMessage:
    pin: Pin
    plaintext: str
    family: str
    key: CipherKey
    ciphertext: str
    seed: int
    sentence_count: int


def generate_message(
    pin: Pin,
    key: CipherKey,
    corpus: SentenceCorpus,
    sentence_count: int,
    seed: int,
) -> ChallengeMessage:
    """Spelled PIN + sentence_count sentences drawn uniformly with
    replacement by a PRNG seeded with ``seed``; deterministic replay."""
    if sentence_count < 1:
        raise ValueError(f"sentence_count must be >= 1, got {sentence_count}")
    rng = random.Random(seed)
    body = "".join(
        normalize(rng.choice(corpus.sentences)) for _ in range(sentence_count)
    )
    plaintext = spell_pin(pin) + body
    return ChallengeMessage(
        pin=pin,
        plaintext=plaintext,
        family=key.family,
        key=key,
        ciphertext=encipher(plaintext, key),
        seed=seed,
        sentence_count=sentence_count,
    )


@dataclass(frozen=True)
class BiasStats:
    e_share: float
    t_share: float
    th_share: float
    he_share: float
    e_rank: int
    t_rank: int
    th_rank: int
    he_rank: int


def bias_report(corpus: SentenceCorpus) -> BiasStats:
    """Measured letter shares of E/T and sliding-digraph shares of TH/HE
    over the whole corpus, with their ranks."""
    text = "".join(normalize(s) for s in corpus.sentences)
    letters = letter_frequency(text)
    digraphs = digraph_frequency(text, SLIDING)
    letter_rank = rank(letters)
    digraph_rank = rank(digraphs)
    e_idx, t_idx = ord("E") - 65, ord("T") - 65
    th = digraphs.counts[ord("T") - 65][ord("H") - 65]
    he = digraphs.counts[ord("H") - 65][ord("E") - 65]
    return BiasStats(
        e_share=letters.counts[e_idx] / letters.total,
        t_share=letters.counts[t_idx] / letters.total,
        th_share=th / digraphs.total if digraphs.total else 0.0,
        he_share=he / digraphs.total if digraphs.total else 0.0,
        e_rank=letter_rank.index("E") + 1,
        t_rank=letter_rank.index("T") + 1,
        th_rank=digraph_rank.index("TH") + 1,
        he_rank=digraph_rank.index("HE") + 1,
    )
