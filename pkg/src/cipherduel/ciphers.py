"""Encipher/decipher for the three workshop ciphers (additive, affine,
2x2 Hill) plus canonical text normalization.

All cipher text is carried as unbroken A-Z strings; ``normalize`` is the
single entry point that maps raw input onto that alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .modmath import MOD, Mat2

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
PAD_LETTER = "X"  # conventional null for odd-length Hill blocks

ENCIPHER = "encipher"
DECIPHER = "decipher"

FAMILIES = ("additive", "affine", "hill")


class InvalidKey(ValueError):
    """Key fails its family's validity rule (non-unit multiplier/determinant)."""


class OddLengthCiphertext(ValueError):
    """Hill decipher requires an even number of letters."""


def normalize(raw: str) -> str:
    """Uppercase ASCII letters, drop everything else."""
    return "".join(ch for ch in raw.upper() if "A" <= ch <= "Z")


def to_numbers(text: str) -> list[int]:
    return [ord(ch) - 65 for ch in text]


def to_letters(nums: list[int]) -> str:
    return "".join(ALPHABET[n % MOD] for n in nums)


@dataclass(frozen=True)
class AdditiveKey:
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % MOD)

    family = "additive"


@dataclass(frozen=True)
class AffineKey:
    a: int
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", self.a % MOD)
        object.__setattr__(self, "b", self.b % MOD)
        if gcd(self.a, MOD) != 1:
            raise InvalidKey(f"affine multiplier {self.a} is not a unit mod {MOD}")

    family = "affine"


@dataclass(frozen=True)
class HillKey:
    matrix: Mat2

    def __post_init__(self) -> None:
        if not self.matrix.is_invertible():
            raise InvalidKey(
                f"Hill matrix determinant {self.matrix.det()} is not a unit mod {MOD}"
            )

    family = "hill"


CipherKey = AdditiveKey | AffineKey | HillKey


def _check_direction(direction: str) -> None:
    if direction not in (ENCIPHER, DECIPHER):
        raise ValueError(f"direction must be {ENCIPHER!r} or {DECIPHER!r}")


def apply_additive(text: str, key: AdditiveKey, direction: str = ENCIPHER) -> str:
    _check_direction(direction)
    shift = key.k if direction == ENCIPHER else -key.k
    return to_letters([n + shift for n in to_numbers(text)])


def apply_affine(text: str, key: AffineKey, direction: str = ENCIPHER) -> str:
    _check_direction(direction)
    if direction == ENCIPHER:
        return to_letters([key.a * n + key.b for n in to_numbers(text)])
    from .modmath import mod_inverse

    a_inv = mod_inverse(key.a, MOD)
    return to_letters([a_inv * (n - key.b) for n in to_numbers(text)])


def apply_hill(text: str, key: HillKey, direction: str = ENCIPHER) -> str:
    """Plaintext letter pairs are column vectors; ciphertext pair = K * p.

    Encipher pads odd-length input with X; decipher refuses odd lengths.
    """
    _check_direction(direction)
    if direction == ENCIPHER:
        if len(text) % 2:
            text = text + PAD_LETTER
        matrix = key.matrix
    else:
        if len(text) % 2:
            raise OddLengthCiphertext(f"cannot decipher odd length {len(text)}")
        matrix = key.matrix.inverse()
    nums = to_numbers(text)
    out: list[int] = []
    for i in range(0, len(nums), 2):
        x, y = matrix.apply((nums[i], nums[i + 1]))
        out.append(x)
        out.append(y)
    return to_letters(out)


def encipher(text: str, key: CipherKey) -> str:
    return _apply(text, key, ENCIPHER)


def decipher(text: str, key: CipherKey) -> str:
    return _apply(text, key, DECIPHER)


def _apply(text: str, key: CipherKey, direction: str) -> str:
    if isinstance(key, AdditiveKey):
        return apply_additive(text, key, direction)
    if isinstance(key, AffineKey):
        return apply_affine(text, key, direction)
    if isinstance(key, HillKey):
        return apply_hill(text, key, direction)
    raise TypeError(f"not a cipher key: {key!r}")


def random_key(family: str, rng) -> CipherKey:
    """Draw a uniformly random valid key of the given family."""
    if family == "additive":
        return AdditiveKey(rng.randrange(MOD))
    if family == "affine":
        units = [a for a in range(MOD) if gcd(a, MOD) == 1]
        return AffineKey(rng.choice(units), rng.randrange(MOD))
    if family == "hill":
        while True:
            m = Mat2(*(rng.randrange(MOD) for _ in range(4)))
            if m.is_invertible():
                return HillKey(m)
    raise ValueError(f"unknown cipher family: {family!r}")


def key_to_dict(key: CipherKey) -> dict:
    if isinstance(key, AdditiveKey):
        return {"family": "additive", "k": key.k}
    if isinstance(key, AffineKey):
        return {"family": "affine", "a": key.a, "b": key.b}
    if isinstance(key, HillKey):
        m = key.matrix
        return {"family": "hill", "matrix": [m.a, m.b, m.c, m.d]}
    raise TypeError(f"not a cipher key: {key!r}")


def key_from_dict(data: dict) -> CipherKey:
    family = data["family"]
    if family == "additive":
        return AdditiveKey(data["k"])
    if family == "affine":
        return AffineKey(data["a"], data["b"])
    if family == "hill":
        return HillKey(Mat2(*data["matrix"]))
    raise ValueError(f"unknown cipher family: {family!r}")
