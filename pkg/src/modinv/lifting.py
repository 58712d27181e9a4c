"""Arbitrary-precision inverse lifting modulo p^m.

Every algorithm here computes u with a*u == 1 (mod p^m), 0 <= u < p^m,
starting from an inverse modulo p (or modulo 2) and lifting it with
doubling precision:

* ``arazi_qi_lift``     -- split-word doubling lift modulo 2^m; each step
                           combines low/high halves of the operand and never
                           touches more than twice the current precision.
* ``hensel_iterative``  -- Newton recurrence u <- u*(2 - a*u) with moduli
                           p^i doubling up to the largest power of two below
                           m, then one full-width step.
* ``hensel_recursive``  -- same recurrence, but halving m exactly at each
                           level (h = ceil(m/2)), which keeps the expensive
                           final steps as small as possible.
* ``explicit_2m``       -- closed-form product (2-a) * prod(1 + (a-1)^(2^i))
                           with every reduction at full width 2^m; fewest
                           operations, but no precision growth to exploit.
* ``explicit_prime_power`` -- the same closed form for odd p, seeded with
                           b = a^-1 mod p and squaring (a*b - 1).
* ``rth_order_lift``    -- order-r iteration x <- x*(1 + e + ... + e^(r-1))
                           with e = 1 - a*x, division-free; r-th order
                           convergence (r = 2 is the Newton recurrence).
* ``hybrid_inverse``    -- size-dispatched combination: explicit formula
                           below a cutoff, then doubling steps whose kind
                           (Newton or split-word) depends on bit-size bands.

Each function returns a :class:`LiftReport`.  Pass a
:class:`~modinv.arith_core.CountingContext` to record an operation tally;
without one a lean uninstrumented path runs instead (results are identical,
which the test suite checks).  The iterative algorithms also accept a
``hook`` called with the running estimate after every lifting step, used by
the convergence tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .arith_core import (
    CountingContext,
    OpTally,
    add,
    bit_and,
    bit_or,
    mask_neg,
    mod_reduce,
    mod_sub,
    mul,
    note_egcd,
    shift,
    sqr,
    sub,
    sub_mask,
    trailing_zeros,
)
from .thresholds import DEFAULT_THRESHOLDS, Thresholds

__all__ = [
    "AlgoKind",
    "LiftReport",
    "NotInvertibleError",
    "PrimePower",
    "arazi_qi_lift",
    "egcd_inverse",
    "explicit_2m",
    "explicit_prime_power",
    "hensel_iterative",
    "hensel_recursive",
    "hybrid_inverse",
    "is_probable_prime",
    "lift",
    "rth_order_lift",
]

Hook = Optional[Callable[[int], None]]


class NotInvertibleError(ValueError):
    """Raised when gcd(a, modulus) != 1; carries the gcd for diagnosis."""

    def __init__(self, a: int, modulus: int, gcd: int):
        super().__init__(f"{a} is not invertible modulo {modulus}: gcd={gcd}")
        self.a = a
        self.modulus = modulus
        self.gcd = gcd


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Miller-Rabin with the first twelve primes as witnesses is deterministic
# below this bound (Sorenson & Webster).
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def is_probable_prime(n: int, rounds: int = 16) -> bool:
    """Miller-Rabin primality check; deterministic for n < ~3.3e24."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = trailing_zeros(d)
    d >>= s
    if n < _MR_DETERMINISTIC_BOUND:
        witnesses = _SMALL_PRIMES
    else:
        witnesses = [random.randrange(2, n - 1) for _ in range(rounds)]
    for w in witnesses:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimePower:
    """Modulus descriptor p^m with p prime and m >= 1."""

    p: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"exponent m must be >= 1, got {self.m}")
        if self.p < 2 or not is_probable_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")

    def modulus(self) -> int:
        return _pow_cached(self.p, self.m)


class AlgoKind(Enum):
    """Names for the lifting algorithms, used by dispatch, benchmarks and the CLI."""

    ARAZI_QI = "arazi-qi"
    HENSEL_ITERATIVE = "hensel-iterative"
    HENSEL_RECURSIVE = "hensel-recursive"
    EXPLICIT = "explicit"
    HYBRID = "hybrid"
    RTH_ORDER = "rth-order"


@dataclass(frozen=True)
class LiftReport:
    """Result of one lift: the inverse, the op tally (None when counting was
    off), and the number of lifting steps performed."""

    inverse: int
    tally: OpTally | None
    iterations: int


# --------------------------------------------------------------------------
# per-modulus setup, cached across calls (masks and p^i values are reused by
# benchmarks thousands of times; cache hits must cost nothing)

_CACHE_CAP = 64


def _cache_put(cache: dict, key, value):
    if len(cache) >= _CACHE_CAP:
        cache.pop(next(iter(cache)))
    cache[key] = value
    return value


_pow_cache: dict = {}


def _pow_cached(p: int, i: int) -> int:
    key = (p, i)
    v = _pow_cache.get(key)
    if v is None:
        v = _cache_put(_pow_cache, key, p ** i)
    return v


_arazi_cache: dict = {}


def _arazi_steps(m: int):
    """[(i, 2^i - 1, 2^(2i) - 1)] for i = 1, 2, 4, ... < m, plus 2^m - 1."""
    v = _arazi_cache.get(m)
    if v is None:
        steps = []
        i = 1
        while i < m:
            steps.append((i, (1 << i) - 1, (1 << (i + i)) - 1))
            i <<= 1
        v = _cache_put(_arazi_cache, m, (tuple(steps), (1 << m) - 1))
    return v


_doubling_cache: dict = {}


def _doubling_moduli(p: int, m: int):
    """Loop moduli p^i for i = 2, 4, ... < m, the full modulus p^m, and the
    matching masks (p = 2 only, else None)."""
    key = (p, m)
    v = _doubling_cache.get(key)
    if v is None:
        exps = []
        i = 2
        while i < m:
            exps.append(i)
            i <<= 1
        if p == 2:
            loop = tuple((1 << e, (1 << e) - 1) for e in exps)
            final = (1 << m, (1 << m) - 1)
        else:
            loop = tuple((p ** e, None) for e in exps)
            final = (p ** m, None)
        v = _cache_put(_doubling_cache, key, (loop, final))
    return v


_halving_cache: dict = {}


def _halving_chain(p: int, m: int):
    """Exponent chain 1 < ... < ceil(m/2) < m with (exponent, modulus, mask)."""
    key = (p, m)
    v = _halving_cache.get(key)
    if v is None:
        exps = []
        e = m
        while e > 1:
            exps.append(e)
            e = (e + 1) >> 1
        exps.reverse()
        if p == 2:
            chain = tuple((e, 1 << e, (1 << e) - 1) for e in exps)
        else:
            chain = tuple((e, p ** e, None) for e in exps)
        v = _cache_put(_halving_cache, key, chain)
    return v


def _red(x: int, modulus: int, mask: int | None, ctx: CountingContext) -> int:
    # one counted reduction; a mask when the modulus is a power of two
    if mask is not None:
        return bit_and(x, mask, ctx)
    return mod_reduce(x, modulus, ctx)


def _red_sub(x: int, y: int, modulus: int, mask: int | None,
             ctx: CountingContext) -> int:
    # one counted modular subtraction
    if mask is not None:
        return sub_mask(x, y, mask, ctx)
    return mod_sub(x, y, modulus, ctx)


# --------------------------------------------------------------------------
# extended gcd (single-pass; the oracle module implements it differently)


def egcd_inverse(a: int, n: int, ctx: CountingContext | None = None) -> int:
    """Inverse of a modulo n via the extended Euclidean algorithm.

    Counts as one egcd operation when a context is given.  Raises
    :class:`NotInvertibleError` (carrying the gcd) when gcd(a, n) != 1.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    old_r, r = n, a % n
    old_s, s = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotInvertibleError(a, n, old_r)
    if ctx is not None:
        note_egcd(ctx)
    return old_s % n


# --------------------------------------------------------------------------
# split-word doubling lift modulo 2^m


def arazi_qi_lift(a: int, m: int, ctx: CountingContext | None = None,
                  hook: Hook = None) -> LiftReport:
    """Inverse of odd a modulo 2^m by doubling split-word steps.

    At step i the known inverse u (mod 2^i) is extended to 2^(2i) bits via
    t = -((u*b >> i) + (u*a_H mod 2^i))*u mod 2^i and u |= t << i, where b
    and a_H are the low and next-higher i bits of a.  Working values never
    exceed 2i bits, the defining contrast with the explicit formula.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not a & 1:
        raise ValueError(f"a must be odd, got {a}")
    steps, fullmask = _arazi_steps(m)
    if ctx is None and hook is None:
        u = 1
        for i, mask, mask2 in steps:
            t1 = (u * (a & mask)) >> i
            t2 = (u * ((a & mask2) >> i)) & mask
            t1 = (-((t1 + t2) * u)) & mask
            u |= t1 << i
        return LiftReport(u & fullmask, None, len(steps))

    if ctx is None:
        ctx = CountingContext(enabled=False)
    u = 1
    for i, mask, mask2 in steps:
        b = bit_and(a, mask, ctx)
        t1 = mul(u, b, ctx)
        t1 = shift(t1, -i, ctx)
        c = bit_and(a, mask2, ctx)
        c = shift(c, -i, ctx)
        t2 = mul(u, c, ctx)
        t2 = bit_and(t2, mask, ctx)
        t1 = add(t1, t2, ctx)
        t1 = mul(t1, u, ctx)
        t1 = bit_and(t1, mask, ctx)
        # the printed step 2^i - t1 escapes to 2^i when t1 == 0 (a == 1 mod
        # 2^(2i)); negating modulo 2^i keeps the unchanged-estimate case at 0
        t1 = mask_neg(t1, mask, ctx)
        t1 = shift(t1, i, ctx)
        u = bit_or(u, t1, ctx)
        if hook is not None:
            hook(u)
    u = bit_and(u, fullmask, ctx)
    return LiftReport(u, ctx.tally if ctx.enabled else None, len(steps))


# --------------------------------------------------------------------------
# Newton recurrence with doubling moduli


def hensel_iterative(a: int, pp: PrimePower, ctx: CountingContext | None = None,
                     hook: Hook = None) -> LiftReport:
    """Inverse of a modulo p^m via u <- u*(2 - a*u).

    Intermediate reductions use p^i with i doubling to the largest power of
    two below m; one final step runs at full width p^m.
    """
    p, m = pp.p, pp.m
    loop, (fullmod, fullmask) = _doubling_moduli(p, m)
    if p == 2 and not a & 1:
        raise NotInvertibleError(a, fullmod, 2)
    if a.bit_length() > fullmod.bit_length():
        a %= fullmod

    if ctx is None and hook is None:
        u = egcd_inverse(a, p)
        if p == 2:
            for _, mask in loop:
                t = u * u & mask
                t = t * a & mask
                u = (u + u - t) & mask
            t = u * u & fullmask
            t = t * a & fullmask
            u = (u + u - t) & fullmask
        else:
            for mod_i, _ in loop:
                t = u * u % mod_i
                t = t * a % mod_i
                u = (u + u - t) % mod_i
            t = u * u % fullmod
            t = t * a % fullmod
            u = (u + u - t) % fullmod
        return LiftReport(u, None, len(loop) + 1)

    if ctx is None:
        ctx = CountingContext(enabled=False)
    u = egcd_inverse(a, p, ctx)
    for mod_i, mask in loop:
        t = sqr(u, ctx)
        t = _red(t, mod_i, mask, ctx)
        t = mul(t, a, ctx)
        t = _red(t, mod_i, mask, ctx)
        u = shift(u, 1, ctx)
        u = _red_sub(u, t, mod_i, mask, ctx)
        if hook is not None:
            hook(u)
    t = sqr(u, ctx)
    t = _red(t, fullmod, fullmask, ctx)
    t = mul(t, a, ctx)
    t = _red(t, fullmod, fullmask, ctx)
    u = shift(u, 1, ctx)
    u = _red_sub(u, t, fullmod, fullmask, ctx)
    u = _red(u, fullmod, fullmask, ctx)
    if hook is not None:
        hook(u)
    return LiftReport(u, ctx.tally if ctx.enabled else None, len(loop) + 1)


def hensel_recursive(a: int, pp: PrimePower, ctx: CountingContext | None = None,
                     hook: Hook = None) -> LiftReport:
    """Inverse of a modulo p^m via the halving form of the Newton recurrence.

    Each level lifts from exponent h = ceil(e/2) to e, so the most expensive
    step runs at exactly the target width instead of overshooting from the
    nearest power of two.  Depth is ceil(log2 m).
    """
    p, m = pp.p, pp.m
    chain = _halving_chain(p, m)
    fullmod = _pow_cached(p, m)
    if p == 2 and not a & 1:
        raise NotInvertibleError(a, fullmod, 2)
    if a.bit_length() > fullmod.bit_length():
        a %= fullmod

    if ctx is None and hook is None:
        u = egcd_inverse(a, p)
        if p == 2:
            for _, _, mask in chain:
                b = a & mask
                t = u * u & mask
                t = t * b & mask
                u = (u + u - t) & mask
        else:
            for _, mod_e, _ in chain:
                b = a % mod_e
                t = u * u % mod_e
                t = t * b % mod_e
                u = (u + u - t) % mod_e
        return LiftReport(u, None, len(chain))

    if ctx is None:
        ctx = CountingContext(enabled=False)
    u = egcd_inverse(a, p, ctx)
    for _, mod_e, mask in chain:
        b = _red(a, mod_e, mask, ctx)
        t = sqr(u, ctx)
        t = _red(t, mod_e, mask, ctx)
        t = mul(t, b, ctx)
        t = _red(t, mod_e, mask, ctx)
        u = shift(u, 1, ctx)
        u = sub(u, t, ctx)
        u = _red(u, mod_e, mask, ctx)
        if hook is not None:
            hook(u)
    return LiftReport(u, ctx.tally if ctx.enabled else None, len(chain))


# --------------------------------------------------------------------------
# explicit closed-form product


def explicit_2m(a: int, m: int, ctx: CountingContext | None = None,
                hook: Hook = None) -> LiftReport:
    """Inverse of odd a modulo 2^m from the closed-form product.

    With a = 2^s*t + 1 (s = trailing zeros of a-1), the product
    u = (2-a) * prod(1 + (a-1)^(2^i)) needs one factor per doubling of i
    while i*s < m.  Every reduction runs at the full width 2^m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not a & 1:
        raise ValueError(f"a must be odd, got {a}")
    fullmask = (1 << m) - 1
    a &= fullmask
    if a == 1:
        # a - 1 == 0 has no 2^s*t decomposition; the inverse is trivially 1
        return LiftReport(1, OpTally() if ctx is not None and ctx.enabled else None, 0)
    s = trailing_zeros(a - 1)

    if ctx is None and hook is None:
        amone = a - 1
        u = (2 - a) & fullmask
        i = 1
        n = 0
        while i * s < m:
            amone = amone * amone & fullmask
            u = u * (amone + 1) & fullmask
            i <<= 1
            n += 1
        return LiftReport(u, None, n)

    if ctx is None:
        ctx = CountingContext(enabled=False)
    u = sub_mask(2, a, fullmask, ctx)
    amone = sub(a, 1, ctx)
    i = 1
    n = 0
    while i * s < m:
        amone = sqr(amone, ctx)
        amone = bit_and(amone, fullmask, ctx)
        t = add(amone, 1, ctx)
        u = mul(u, t, ctx)
        u = bit_and(u, fullmask, ctx)
        i <<= 1
        n += 1
        if hook is not None:
            hook(u)
    return LiftReport(u, ctx.tally if ctx.enabled else None, n)


def explicit_prime_power(a: int, pp: PrimePower,
                         ctx: CountingContext | None = None,
                         hook: Hook = None) -> LiftReport:
    """Inverse of a modulo p^m from the closed-form product seeded mod p.

    Computes b = a^-1 mod p once, then v = b*(2-a*b) * prod(1 + (a*b-1)^(2^i))
    with (a*b - 1) squared modulo p^m until the precision p^(2^n) covers p^m.
    """
    p, m = pp.p, pp.m
    fullmod = _pow_cached(p, m)
    if a >= fullmod or a < 0:
        a %= fullmod

    if ctx is None and hook is None:
        b = egcd_inverse(a, p)
        if m == 1:
            return LiftReport(b, None, 0)
        ab = a * b % fullmod
        v = b * (2 - ab) % fullmod
        e = ab - 1
        n = 1
        while (1 << n) < m:
            e = e * e % fullmod
            v = v * (e + 1) % fullmod
            n += 1
        return LiftReport(v, None, n - 1)

    if ctx is None:
        ctx = CountingContext(enabled=False)
    b = egcd_inverse(a, p, ctx)
    if m == 1:
        return LiftReport(b, ctx.tally if ctx.enabled else None, 0)
    ab = mul(a, b, ctx)
    ab = mod_reduce(ab, fullmod, ctx)
    v = mod_sub(2, ab, fullmod, ctx)
    v = mul(b, v, ctx)
    v = mod_reduce(v, fullmod, ctx)
    e = sub(ab, 1, ctx)
    n = 1
    while (1 << n) < m:
        e = sqr(e, ctx)
        e = mod_reduce(e, fullmod, ctx)
        t = add(e, 1, ctx)
        v = mul(v, t, ctx)
        v = mod_reduce(v, fullmod, ctx)
        n += 1
        if hook is not None:
            hook(v)
    return LiftReport(v, ctx.tally if ctx.enabled else None, n - 1)


# --------------------------------------------------------------------------
# order-r iteration


def rth_order_lift(a: int, pp: PrimePower, r: int,
                   ctx: CountingContext | None = None,
                   hook: Hook = None) -> LiftReport:
    """Inverse of a modulo p^m with r-th order convergence.

    Division-free form of x <- (1 - (1 - a*x)^r)/a: with e = 1 - a*x mod p^m,
    the update x <- x*(1 + e + ... + e^(r-1)) multiplies the exponent of the
    correct precision by r each step (r = 2 is the Newton recurrence).
    """
    if r < 2:
        raise ValueError(f"order r must be >= 2, got {r}")
    p, m = pp.p, pp.m
    fullmod = _pow_cached(p, m)
    if a >= fullmod or a < 0:
        a %= fullmod

    if ctx is None and hook is None:
        x = egcd_inverse(a, p)
        span = 1
        steps = 0
        while span < m:
            e = (1 - a * x) % fullmod
            acc = 1
            for _ in range(r - 1):
                acc = (e * acc + 1) % fullmod
            x = x * acc % fullmod
            span *= r
            steps += 1
        return LiftReport(x, None, steps)

    if ctx is None:
        ctx = CountingContext(enabled=False)
    x = egcd_inverse(a, p, ctx)
    span = 1
    steps = 0
    while span < m:
        t = mul(a, x, ctx)
        t = mod_reduce(t, fullmod, ctx)
        e = mod_sub(1, t, fullmod, ctx)
        acc = 1
        for _ in range(r - 1):
            acc = mul(e, acc, ctx)
            acc = mod_reduce(acc, fullmod, ctx)
            acc = add(acc, 1, ctx)
        x = mul(x, acc, ctx)
        x = mod_reduce(x, fullmod, ctx)
        span *= r
        steps += 1
        if hook is not None:
            hook(x)
    return LiftReport(x, ctx.tally if ctx.enabled else None, steps)


# --------------------------------------------------------------------------
# size-dispatched hybrid


def hybrid_inverse(a: int, m: int, th: Thresholds | None = None,
                   ctx: CountingContext | None = None) -> LiftReport:
    """Inverse of odd a modulo 2^m, switching algorithms by bit size.

    Sizes up to ``th.explicit_cutoff`` use the explicit product directly.
    Larger sizes recurse on h = ceil(m/2) and finish with one doubling step:
    a Newton step u = 2r - a*r^2 inside [cutoff, arazi_lower] and above
    arazi_upper, a split-word step u = r + t*2^h in between.  The combine
    uses the full operand a (truncating it to h bits would lose the carry
    into the upper half).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not a & 1:
        raise ValueError(f"a must be odd, got {a}")
    if th is None:
        th = DEFAULT_THRESHOLDS

    if ctx is None:
        cutoff = th.explicit_cutoff
        newton_lo, newton_hi = th.arazi_lower, th.arazi_upper

        def run(e: int) -> tuple[int, int]:
            if e <= cutoff:
                rep = explicit_2m(a, e)
                return rep.inverse, rep.iterations
            h = (e + 1) >> 1
            r, levels = run(h)
            mask = (1 << e) - 1
            if e <= newton_lo or e >= newton_hi:
                t = r * r & mask
                t = t * (a & mask) & mask
                u = (r + r - t) & mask
            else:
                maskh = (1 << h) - 1
                t1 = (r * (a & maskh)) >> h
                t2 = (r * ((a & mask) >> h)) & maskh
                t1 = (-((t1 + t2) * r)) & maskh
                u = (r | (t1 << h)) & mask
            return u, levels + 1

        u, iterations = run(m)
        return LiftReport(u, None, iterations)

    def run_counted(e: int) -> tuple[int, int]:
        if e <= th.explicit_cutoff:
            rep = explicit_2m(a, e, ctx)
            return rep.inverse, rep.iterations
        h = (e + 1) >> 1
        r, levels = run_counted(h)
        mask = (1 << e) - 1
        if e <= th.arazi_lower or e >= th.arazi_upper:
            b = bit_and(a, mask, ctx)
            t = sqr(r, ctx)
            t = bit_and(t, mask, ctx)
            t = mul(t, b, ctx)
            t = bit_and(t, mask, ctx)
            u = shift(r, 1, ctx)
            u = sub_mask(u, t, mask, ctx)
        else:
            maskh = (1 << h) - 1
            b = bit_and(a, maskh, ctx)
            t1 = mul(r, b, ctx)
            t1 = shift(t1, -h, ctx)
            c = bit_and(a, mask, ctx)
            c = shift(c, -h, ctx)
            t2 = mul(r, c, ctx)
            t2 = bit_and(t2, maskh, ctx)
            t1 = add(t1, t2, ctx)
            t1 = mul(t1, r, ctx)
            t1 = bit_and(t1, maskh, ctx)
            t1 = mask_neg(t1, maskh, ctx)
            t1 = shift(t1, h, ctx)
            u = bit_or(r, t1, ctx)
            u = bit_and(u, mask, ctx)
        return u, levels + 1

    u, iterations = run_counted(m)
    return LiftReport(u, ctx.tally if ctx.enabled else None, iterations)


# --------------------------------------------------------------------------
# dispatch


def lift(algo: AlgoKind, a: int, m: int, *, p: int = 2, r: int = 2,
         th: Thresholds | None = None,
         ctx: CountingContext | None = None) -> LiftReport:
    """Run one algorithm by name.  arazi-qi and hybrid require p = 2."""
    if p == 2:
        if algo is AlgoKind.ARAZI_QI:
            return arazi_qi_lift(a, m, ctx)
        if algo is AlgoKind.EXPLICIT:
            return explicit_2m(a, m, ctx)
        if algo is AlgoKind.HYBRID:
            return hybrid_inverse(a, m, th, ctx)
    else:
        if algo in (AlgoKind.ARAZI_QI, AlgoKind.HYBRID):
            raise ValueError(f"{algo.value} works modulo powers of two only")
        if algo is AlgoKind.EXPLICIT:
            return explicit_prime_power(a, PrimePower(p, m), ctx)
    pp = PrimePower(p, m)
    if algo is AlgoKind.HENSEL_ITERATIVE:
        return hensel_iterative(a, pp, ctx)
    if algo is AlgoKind.HENSEL_RECURSIVE:
        return hensel_recursive(a, pp, ctx)
    if algo is AlgoKind.RTH_ORDER:
        return rth_order_lift(a, pp, r, ctx)
    raise ValueError(f"unknown algorithm kind: {algo!r}")
