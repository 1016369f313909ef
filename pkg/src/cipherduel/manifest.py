"""Challenge manifests: the practice set (indices 1-30, additive/affine/
Hill by decade) and contest sets (all affine), with keys and PINs stored
sealed so the server never ships them to clients."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .ciphers import CipherKey, key_from_dict, key_to_dict, random_key
from .forge import ChallengeMessage, Pin, SentenceCorpus, generate_message

MANIFEST_FORMAT_VERSION = 1

PRACTICE_LAYOUT = (
    (range(1, 11), "additive"),
    (range(11, 21), "affine"),
    (range(21, 31), "hill"),
)


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class ManifestEntry:
    index: int
    family: str
    ciphertext: str
    # sealed answer material, server-side only
    pin: str
    key: CipherKey
    seed: int
    sentence_count: int

    def public_view(self) -> dict:
        """The only fields a client may ever see."""
        return {"index": self.index, "family": self.family, "ciphertext": self.ciphertext}

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "family": self.family,
            "ciphertext": self.ciphertext,
            "sealed": {
                "pin": self.pin,
                "key": key_to_dict(self.key),
                "seed": self.seed,
                "sentence_count": self.sentence_count,
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ManifestEntry":
        sealed = data["sealed"]
        return cls(
            index=data["index"],
            family=data["family"],
            ciphertext=data["ciphertext"],
            pin=sealed["pin"],
            key=key_from_dict(sealed["key"]),
            seed=sealed["seed"],
            sentence_count=sealed["sentence_count"],
        )


@dataclass(frozen=True)
class Manifest:
    kind: str  # "practice" | "contest"
    entries: dict[int, ManifestEntry]

    def entry(self, index: int) -> ManifestEntry:
        if index not in self.entries:
            raise KeyError(f"no manifest entry {index}")
        return self.entries[index]

    def validate_layout(self) -> None:
        if self.kind == "practice":
            expected = {i: fam for rng, fam in PRACTICE_LAYOUT for i in rng}
            if set(self.entries) != set(expected):
                raise ManifestError("practice manifest must have indices 1-30")
            for i, entry in self.entries.items():
                if entry.family != expected[i]:
                    raise ManifestError(
                        f"practice entry {i} is {entry.family}, expected {expected[i]}"
                    )
        elif self.kind == "contest":
            for i, entry in self.entries.items():
                if entry.family != "affine":
                    raise ManifestError(f"contest entry {i} is {entry.family}, not affine")
        else:
            raise ManifestError(f"unknown manifest kind {self.kind!r}")

    def save(self, path: str | Path) -> None:
        doc = {
            "format": "challenge-manifest",
            "version": MANIFEST_FORMAT_VERSION,
            "kind": self.kind,
            "entries": [self.entries[i].to_dict() for i in sorted(self.entries)],
        }
        Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "Manifest":
        doc = json.loads(Path(path).read_text())
        if doc.get("format") != "challenge-manifest":
            raise ManifestError(f"{path} is not a challenge manifest")
        if doc.get("version") != MANIFEST_FORMAT_VERSION:
            raise ManifestError(f"unsupported manifest version {doc.get('version')}")
        entries = {e["index"]: ManifestEntry.from_dict(e) for e in doc["entries"]}
        manifest = cls(kind=doc["kind"], entries=entries)
        manifest.validate_layout()
        return manifest


def _entry_from_message(index: int, msg: ChallengeMessage) -> ManifestEntry:
    return ManifestEntry(
        index=index,
        family=msg.family,
        ciphertext=msg.ciphertext,
        pin=str(msg.pin),
        key=msg.key,
        seed=msg.seed,
        sentence_count=msg.sentence_count,
    )


def _generate_entry(
    index: int, family: str, corpus: SentenceCorpus, sentence_count: int, rng: random.Random
) -> ManifestEntry:
    pin = Pin(tuple(rng.randrange(10) for _ in range(4)))
    key = random_key(family, rng)
    msg_seed = rng.randrange(2**31)
    msg = generate_message(pin, key, corpus, sentence_count, msg_seed)
    return _entry_from_message(index, msg)


def generate_practice_manifest(
    corpus: SentenceCorpus, seed: int, sentence_count: int = 8
) -> Manifest:
    """Indices 1-10 additive, 11-20 affine, 21-30 Hill; deterministic per seed."""
    rng = random.Random(seed)
    entries = {}
    for index_range, family in PRACTICE_LAYOUT:
        for i in index_range:
            entries[i] = _generate_entry(i, family, corpus, sentence_count, rng)
    manifest = Manifest(kind="practice", entries=entries)
    manifest.validate_layout()
    return manifest


def generate_contest_manifest(
    corpus: SentenceCorpus, rounds: int, seed: int, sentence_count: int = 8
) -> Manifest:
    """One affine challenge per contest round, indexed 1..rounds."""
    if rounds < 1:
        raise ManifestError(f"need at least one round, got {rounds}")
    rng = random.Random(seed)
    entries = {
        i: _generate_entry(i, "affine", corpus, sentence_count, rng)
        for i in range(1, rounds + 1)
    }
    manifest = Manifest(kind="contest", entries=entries)
    manifest.validate_layout()
    return manifest
