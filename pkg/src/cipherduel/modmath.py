"""Exact arithmetic over Z_m (m = 26 throughout the cipher stack):
inverses, linear congruences, and 2x2 matrix algebra."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

MOD = 26


class NotInvertible(ValueError):
    """Raised when an element (or matrix determinant) is not a unit mod m."""


def mod_inverse(a: int, m: int = MOD) -> int:
    """Return x with a*x == 1 (mod m), or raise NotInvertible."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


def solve_linear_congruence(a: int, b: int, m: int = MOD) -> set[int]:
    """All x in [0, m) with a*x == b (mod m).

    Empty set when gcd(a, m) does not divide b; otherwise exactly
    gcd(a, m) solutions.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    b %= m
    g = gcd(a, m)
    if g == 0:
        g = m  # a == 0 and m | a
    if b % g != 0:
        return set()
    m0 = m // g
    if m0 == 1:
        return set(range(m))
    x0 = (b // g) * mod_inverse(a // g, m0) % m0
    return {x0 + k * m0 for k in range(g)}


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 matrix with entries reduced mod 26."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % MOD)

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def from_columns(cls, col1: tuple[int, int], col2: tuple[int, int]) -> Mat2:
        return cls(col1[0], col2[0], col1[1], col2[1])

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % MOD

    def is_invertible(self) -> bool:
        return gcd(self.det(), MOD) == 1

    def inverse(self) -> Mat2:
        """Adjugate times mod_inverse(det); raises NotInvertible if det is not a unit."""
        inv_det = mod_inverse(self.det(), MOD)
        return Mat2(
            inv_det * self.d,
            inv_det * -self.b,
            inv_det * -self.c,
            inv_det * self.a,
        )

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, vec: tuple[int, int]) -> tuple[int, int]:
        """Matrix-times-column-vector mod 26."""
        x, y = vec
        return ((self.a * x + self.b * y) % MOD, (self.c * x + self.d * y) % MOD)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]
