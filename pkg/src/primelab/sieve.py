"""Segmented prime sieve, 64-bit primality, and factorization.

The segment layout is odds-only: bit i of a segment starting at even lo
corresponds to the odd number lo + 1 + 2i.  Stepping an odd prime p
through consecutive odd multiples advances the value by 2p, which is a
stride of exactly p in index space, so crossing off is a single numpy
slice assignment per prime.  The prime 2 never appears in a bit array;
iterators inject it when a range covers it.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Iterator

import numpy as np

from .config import Config
from .errors import ResourceLimitError

# Deterministic Miller-Rabin witness set: the first twelve primes decide
# primality for every n < 3.3e24, which covers the full 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**4


def _odd_count(lo: int, hi: int) -> int:
    """Number of odd integers in [lo, hi) for even lo."""
    first = lo + 1
    if first >= hi:
        return 0
    return (hi - 1 - first) // 2 + 1


@dataclass(frozen=True)
class PrimeSegment:
    """Primality bits for the odd numbers in [lo, hi), lo even."""

    lo: int
    hi: int
    bits: np.ndarray

    def __post_init__(self):
        if self.lo % 2 != 0:
            raise ValueError("segment lo must be even")
        if not (2 <= self.lo < self.hi):
            raise ValueError("need 2 <= lo < hi")
        if len(self.bits) != _odd_count(self.lo, self.hi):
            raise ValueError("bit array does not match range")

    @property
    def contains_two(self) -> bool:
        return self.lo <= 2 < self.hi

    def count(self) -> int:
        return int(self.bits.sum()) + (1 if self.contains_two else 0)

    def values(self) -> np.ndarray:
        """Primes in [lo, hi) as an int64 array."""
        odds = self.lo + 1 + 2 * np.flatnonzero(self.bits).astype(np.int64)
        if self.contains_two:
            return np.concatenate(([2], odds))
        return odds

    def primes(self) -> Iterator[int]:
        for v in self.values():
            yield int(v)


_small_prime_cache: dict[int, np.ndarray] = {}


def small_primes(bound: int) -> np.ndarray:
    """Dense sieve of primes <= bound, cached (int64 array)."""
    for b, arr in _small_prime_cache.items():
        if b >= bound:
            return arr[arr <= bound] if b != bound else arr
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(bound) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    arr = np.flatnonzero(flags).astype(np.int64)
    _small_prime_cache.clear()
    _small_prime_cache[bound] = arr
    return arr


def fill_segment(lo: int, hi: int, base_primes: np.ndarray,
                 out: np.ndarray | None = None) -> np.ndarray:
    """Mark primality of odds in [lo, hi) into a bool array.

    base_primes must contain every prime <= isqrt(hi - 1).  `out` may be
    a reusable buffer at least as long as the segment; the returned array
    is then a view into it, valid until the next fill.
    """
    if lo % 2 != 0 or lo < 2:
        raise ValueError("segment lo must be even and >= 2")
    n = _odd_count(lo, hi)
    if out is None:
        bits = np.ones(n, dtype=bool)
    else:
        bits = out[:n]
        bits[:] = True
    if n == 0:
        return bits
    top = isqrt(hi - 1)
    last = int(base_primes[-1]) if len(base_primes) else 1
    if top >= 3 and last < top:
        # the table may legitimately end below top (largest prime <= top);
        # it is short only if a real prime hides in the gap
        if any(is_prime_64(c) for c in range(last + 1, top + 1)):
            raise ValueError("base prime table too small for segment")
    ps = base_primes[(base_primes > 2) & (base_primes <= top)]
    if len(ps):
        starts = np.maximum(ps * ps, ((lo + ps) // ps) * ps)
        starts = np.where(starts % 2 == 0, starts + ps, starts)
        idx = (starts - lo - 1) >> 1
        for i, p in zip(idx, ps):
            if i < n:
                bits[i::p] = False
    return bits


def sieve_segment(lo: int, hi: int, cfg: Config | None = None) -> PrimeSegment:
    """Sieve one segment; range must fit the configured segment budget."""
    if not (2 <= lo < hi):
        raise ValueError("need 2 <= lo < hi")
    cfg = cfg or Config()
    seg_lo = lo if lo % 2 == 0 else lo - 1
    n = _odd_count(seg_lo, hi)
    if n > cfg.segment_odds:
        raise ResourceLimitError(
            f"segment of {n} odds exceeds budget of {cfg.segment_odds}; "
            "raise sieve.segment_bytes or tile the range")
    base = small_primes(max(isqrt(hi - 1), 3))
    bits = fill_segment(seg_lo, hi, base)
    return PrimeSegment(seg_lo, hi, bits)


def iter_segments(limit: int, cfg: Config | None = None) -> Iterator[PrimeSegment]:
    """Tile [2, limit] with non-overlapping segments.

    Each yielded segment owns its bits (no shared buffers), so callers
    may hold on to segments after advancing the iterator.
    """
    if limit < 2:
        return
    cfg = cfg or Config()
    span = 2 * cfg.segment_odds
    base = small_primes(max(isqrt(limit), 3))
    lo = 2
    while lo <= limit:
        hi = min(lo + span, limit + 1)
        bits = fill_segment(lo, hi, base)
        yield PrimeSegment(lo, hi, bits)
        lo += span


def iter_primes(limit: int, cfg: Config | None = None) -> Iterator[int]:
    """Yield every prime <= limit in increasing order."""
    for seg in iter_segments(limit, cfg):
        yield from seg.primes()


def iterate_primes(limit: int, visitor: Callable[[int], None],
                   cfg: Config | None = None) -> None:
    """Visit every prime <= limit exactly once, in increasing order."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    for p in iter_primes(limit, cfg):
        visitor(p)


def primes_array(limit: int, cfg: Config | None = None) -> np.ndarray:
    """All primes <= limit as one int64 array (memory scales with pi(limit))."""
    chunks = [seg.values() for seg in iter_segments(limit, cfg)]
    return np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)


def odd_prime_flags(limit: int) -> np.ndarray:
    """Bool array f where f[i] marks 2i+1 prime, covering odds <= limit.

    Dense variant used by the Goldbach counters; costs limit/2 bytes.
    """
    n = (limit + 1) // 2
    flags = np.ones(n, dtype=bool)
    flags[0] = False  # 1 is not prime
    for p in range(3, isqrt(limit) + 1, 2):
        if flags[p >> 1]:
            flags[(p * p) >> 1 :: p] = False
    return flags


def is_prime_64(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2**64."""
    if n < 0 or n >= 1 << 64:
        raise ValueError("argument outside 64-bit range")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True  # no factor <= 37, below 41**2: prime
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _strong_test(N: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, N)
    if x == 1 or x == N - 1:
        return True
    for _ in range(s - 1):
        x = x * x % N
        if x == N - 1:
            return True
    return False


def prp_test(N: int, rounds: int = 10) -> bool:
    """Strong probable-prime test: base 2 plus `rounds` pseudorandom bases.

    Composite verdicts are certain; prime verdicts have error probability
    at most 4**(-rounds-1).  Bases come from a generator seeded by N, so
    verdicts are reproducible run to run.
    """
    if N < 3 or N % 2 == 0:
        raise ValueError("prp_test needs odd N >= 3")
    if N == 3:
        return True
    d = N - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if not _strong_test(N, 2, d, s):
        return False
    rng = random.Random(N)
    for _ in range(max(0, rounds)):
        a = rng.randrange(2, N - 1)
        if not _strong_test(N, a, d, s):
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Complete factorization of a 64-bit integer."""

    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.n:
            raise ValueError("factor product mismatch")

    @property
    def big_omega(self) -> int:
        """Omega(n): prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def small_omega(self) -> int:
        """omega(n): distinct prime factors."""
        return len(self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _brent_rho(n: int) -> int:
    """Nontrivial factor of odd composite n with no factor <= 10**4.

    Brent's cycle-finding variant of Pollard rho with batched gcds and a
    deterministic polynomial schedule x**2 + c for c = 1, 2, 3, ...
    """
    for c in range(1, 64):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            # batch overshot: replay from the saved point one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")  # unreachable below 2**64


def factorize_64(n: int) -> Factorization:
    """Deterministic complete factorization for 1 <= n < 2**64."""
    if n < 1 or n >= 1 << 64:
        raise ValueError("argument outside [1, 2**64)")
    if n == 1:
        return Factorization(1, ())
    counts: dict[int, int] = {}
    m = n
    for p in small_primes(_TRIAL_LIMIT):
        p = int(p)
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime_64(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(n, tuple(sorted(counts.items())))


def composite_run(n: int, allow_big: bool = False) -> list[int]:
    """The n consecutive composites (n+1)!+2 .. (n+1)!+(n+1).

    n <= 20 keeps every element inside 64 bits; larger n needs
    allow_big=True and returns arbitrary-precision integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 20 and not allow_big:
        raise ValueError("n > 20 leaves the 64-bit fast path; pass allow_big=True")
    f = math.factorial(n + 1)
    run = [f + k for k in range(2, n + 2)]
    for k, value in zip(range(2, n + 2), run):
        if value % k != 0:  # k divides (n+1)! by construction
            raise AssertionError("composite witness failed")
    return run
