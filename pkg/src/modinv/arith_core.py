"""Integer primitives with optional per-operation counting.

The lifting algorithms route each arithmetic step through the functions in
this module so that a tally of operations can be recorded per call.  One
convention is used throughout the package:

* every arithmetic step counts as exactly one operation in its category
  (multiply, square, add/subtract, shift, mask/or, modular reduction);
* a subtraction whose result is taken modulo 2^k or p^k is a single
  add/subtract step -- the normalisation is part of the step, not a separate
  reduction;
* a base-case inverse obtained from the extended gcd counts as one ``egcd``
  operation;
* setup work is never counted: reducing an unreduced input on entry, and
  materialising the masks ``2^i - 1`` and moduli ``p^i`` that a lift reuses.

A :class:`CountingContext` must stay private to a single lifting call;
concurrent calls each create their own.  With counting disabled every
function returns values bit-identical to the plain-operator fast paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "OpTally",
    "CountingContext",
    "mul",
    "sqr",
    "add",
    "sub",
    "sub_mask",
    "mask_neg",
    "mod_sub",
    "bit_and",
    "bit_or",
    "mask_low_bits",
    "shift",
    "mod_reduce",
    "pow_prime",
    "note_egcd",
    "trailing_zeros",
]


@dataclass
class OpTally:
    """Per-category operation counts for one algorithm run."""

    mul: int = 0
    sqr: int = 0
    add_sub: int = 0
    shift: int = 0
    mask_or: int = 0
    mod_reduce: int = 0
    egcd: int = 0

    def total(self) -> int:
        return (self.mul + self.sqr + self.add_sub + self.shift
                + self.mask_or + self.mod_reduce + self.egcd)

    def reset(self) -> None:
        self.mul = self.sqr = self.add_sub = self.shift = 0
        self.mask_or = self.mod_reduce = self.egcd = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "mul": self.mul,
            "sqr": self.sqr,
            "add_sub": self.add_sub,
            "shift": self.shift,
            "mask_or": self.mask_or,
            "mod_reduce": self.mod_reduce,
            "egcd": self.egcd,
        }


@dataclass
class CountingContext:
    """Carrier for one call's tally.

    ``max_bits`` records the widest value produced while counting was
    enabled; tests use it to probe the working precision of a lift.
    The context also caches ``p^i`` modulus values so that repeated
    modulus construction inside one lift costs nothing (see
    :func:`pow_prime`).
    """

    tally: OpTally = field(default_factory=OpTally)
    enabled: bool = True
    max_bits: int = 0
    _pow_cache: dict = field(default_factory=dict, repr=False)

    def reset_width(self) -> None:
        self.max_bits = 0


def mul(x: int, y: int, ctx: CountingContext) -> int:
    """x*y; one multiplication."""
    r = x * y
    if ctx.enabled:
        ctx.tally.mul += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def sqr(x: int, ctx: CountingContext) -> int:
    """x*x; one squaring (kept distinct from mul so the two can be benchmarked apart)."""
    r = x * x
    if ctx.enabled:
        ctx.tally.sqr += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def add(x: int, y: int, ctx: CountingContext) -> int:
    """x + y; one add/subtract."""
    r = x + y
    if ctx.enabled:
        ctx.tally.add_sub += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def sub(x: int, y: int, ctx: CountingContext) -> int:
    """x - y; one add/subtract.  May be negative; callers reduce where needed."""
    r = x - y
    if ctx.enabled:
        ctx.tally.add_sub += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def sub_mask(x: int, y: int, mask: int, ctx: CountingContext) -> int:
    """(x - y) mod (mask+1); one add/subtract (modular subtraction)."""
    r = (x - y) & mask
    if ctx.enabled:
        ctx.tally.add_sub += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def mask_neg(x: int, mask: int, ctx: CountingContext) -> int:
    """(-x) mod (mask+1); one add/subtract.

    The subtract-from-modulus step of the word algorithms: for x in
    (0, mask] this equals mask+1-x, and 0 stays 0 instead of escaping to
    the full modulus.
    """
    r = -x & mask
    if ctx.enabled:
        ctx.tally.add_sub += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def mod_sub(x: int, y: int, modulus: int, ctx: CountingContext) -> int:
    """(x - y) mod modulus, normalised to [0, modulus); one add/subtract."""
    r = x - y
    if r < 0 or r >= modulus:
        r %= modulus
    if ctx.enabled:
        ctx.tally.add_sub += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def bit_and(x: int, mask: int, ctx: CountingContext) -> int:
    """x & mask; one mask/or."""
    r = x & mask
    if ctx.enabled:
        ctx.tally.mask_or += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def bit_or(x: int, y: int, ctx: CountingContext) -> int:
    """x | y; one mask/or."""
    r = x | y
    if ctx.enabled:
        ctx.tally.mask_or += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def mask_low_bits(x: int, k: int, ctx: CountingContext) -> int:
    """x mod 2^k; one mask/or.  k must be >= 0."""
    if k < 0:
        raise ValueError("bit count k must be >= 0")
    r = x & ((1 << k) - 1)
    if ctx.enabled:
        ctx.tally.mask_or += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def shift(x: int, k: int, ctx: CountingContext) -> int:
    """x*2^k for k >= 0, floor(x/2^-k) otherwise; one shift."""
    r = x << k if k >= 0 else x >> -k
    if ctx.enabled:
        ctx.tally.shift += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def mod_reduce(x: int, modulus: int, ctx: CountingContext) -> int:
    """x mod modulus in [0, modulus); one modular reduction."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    r = x % modulus
    if ctx.enabled:
        ctx.tally.mod_reduce += 1
        b = r.bit_length()
        if b > ctx.max_bits:
            ctx.max_bits = b
    return r


def pow_prime(p: int, i: int, ctx: CountingContext) -> int:
    """p^i, cached on the context so repeated modulus construction is free.

    A cache miss counts one shift for p = 2, else one multiplication per
    square-and-multiply step.  Cache hits count nothing.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if i < 0:
        raise ValueError("exponent must be >= 0")
    key = (p, i)
    r = ctx._pow_cache.get(key)
    if r is not None:
        return r
    if p == 2:
        r = shift(1, i, ctx)
    else:
        r = 1
        base = p
        e = i
        while e:
            if e & 1:
                r = mul(r, base, ctx)
            e >>= 1
            if e:
                base = mul(base, base, ctx)
    ctx._pow_cache[key] = r
    return r


def note_egcd(ctx: CountingContext) -> None:
    """Record one unit-cost base-case inverse (egcd category)."""
    if ctx.enabled:
        ctx.tally.egcd += 1


def trailing_zeros(x: int) -> int:
    """Largest s with 2^s dividing x.  Undefined (and rejected) for x < 1."""
    if x < 1:
        raise ValueError("trailing_zeros requires x >= 1")
    return (x & -x).bit_length() - 1
