"""Crib-based key recovery: given guessed ciphertext images of the
high-frequency plaintext (E; E and T; TH and HE), solve for the key or
report that no key fits.

NoSuchKey is an expected outcome of a bad guess, not a fatal error:
interactive loops catch it and let the user revise the guess.
"""

from __future__ import annotations

from math import gcd

from .ciphers import MOD, AdditiveKey, AffineKey, HillKey, normalize
from .modmath import Mat2, mod_inverse

E, T, H = 4, 19, 7

# Plaintext crib matrix with TH and HE as columns; det is 1, so the
# plaintext side of Hill recovery can never fail.
P_TH_HE = Mat2.from_columns((T, H), (H, E))
assert P_TH_HE.det() == 1

_INV_15 = mod_inverse(T - E, MOD)  # 15 is a unit mod 26


class NoSuchKey(ValueError):
    """The guessed images admit no valid key of the family."""


def _letter(ch: str | int) -> int:
    if isinstance(ch, int):
        if not 0 <= ch < MOD:
            raise ValueError(f"letter code out of range: {ch}")
        return ch
    norm = normalize(ch)
    if len(norm) != 1:
        raise ValueError(f"expected a single letter, got {ch!r}")
    return ord(norm) - 65


def _digraph(s: str | tuple[int, int]) -> tuple[int, int]:
    if isinstance(s, tuple):
        return (_letter(s[0]), _letter(s[1]))
    norm = normalize(s)
    if len(norm) != 2:
        raise ValueError(f"expected a two-letter digraph, got {s!r}")
    return (ord(norm[0]) - 65, ord(norm[1]) - 65)


def recover_additive(c_for_e: str | int) -> AdditiveKey:
    """k = image(E) - E mod 26; always succeeds."""
    return AdditiveKey((_letter(c_for_e) - E) % MOD)


def recover_affine(c_for_e: str | int, c_for_t: str | int) -> AffineKey:
    """Solve a*E + b = c_e, a*T + b = c_t (mod 26).

    Elimination gives 15a = c_t - c_e, uniquely solvable since 15 is a
    unit; the guess fails iff the resulting multiplier is not a unit.
    """
    c_e = _letter(c_for_e)
    c_t = _letter(c_for_t)
    a = _INV_15 * (c_t - c_e) % MOD
    if gcd(a, MOD) != 1:
        raise NoSuchKey(f"derived multiplier {a} is not a unit mod {MOD}")
    b = (c_e - a * E) % MOD
    return AffineKey(a, b)


def recover_hill(
    c_for_th: str | tuple[int, int], c_for_he: str | tuple[int, int]
) -> HillKey:
    """K = C * P^-1 where P has TH, HE as columns and C the guessed images.

    Fails iff det(K) is not a unit mod 26.
    """
    c_mat = Mat2.from_columns(_digraph(c_for_th), _digraph(c_for_he))
    k = c_mat @ P_TH_HE.inverse()
    if not k.is_invertible():
        raise NoSuchKey(f"recovered matrix determinant {k.det()} is not a unit mod {MOD}")
    return HillKey(k)
