"""Slow reference inverses, used only to validate the fast implementations.

Deliberately independent of the lifting code: ``oracle_inverse`` is a
two-pass extended Euclid (quotient list, then back-substitution), whereas
the lifting module tracks Bezout coefficients in a single pass.  A shared
bug between the two would have to be written twice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["NotInvertible", "oracle_inverse", "exhaustive_inverse"]

EXHAUSTIVE_LIMIT = 1 << 20


@dataclass(frozen=True)
class NotInvertible:
    """Returned when gcd(a, n) != 1; carries the offending gcd."""

    gcd: int


def oracle_inverse(a: int, n: int) -> int | NotInvertible:
    """Inverse of a modulo n in [0, n), or NotInvertible."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if a == 0:
        return NotInvertible(n)
    quotients = []
    r0, r1 = n, a
    while r1:
        q, r = divmod(r0, r1)
        quotients.append(q)
        r0, r1 = r1, r
    if r0 != 1:
        return NotInvertible(r0)
    # back-substitute: after consuming q_k..q_1, 1 = x*n + y*a
    x, y = 1, 0
    for q in reversed(quotients):
        x, y = y, x - q * y
    return y % n


def exhaustive_inverse(a: int, n: int) -> int | NotInvertible:
    """Brute-force scan for the inverse; the oracle's oracle."""
    if not 2 <= n <= EXHAUSTIVE_LIMIT:
        raise ValueError(f"modulus must be in [2, {EXHAUSTIVE_LIMIT}]")
    a %= n
    for u in range(n):
        if a * u % n == 1:
            return u
    return NotInvertible(math.gcd(a, n))
