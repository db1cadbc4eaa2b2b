"""Prime gap scans: records, first occurrences, and interval densities.

The scanner walks consecutive primes segment by segment, carrying the last
prime of each segment across the boundary, so gap streams are identical
for any segment size.  A gap belongs to its starting prime p; the
successor is looked up past the scan bound when p is the last prime in
range.  The unique odd gap 1 (from 2 to 3) is kept for completeness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, NamedTuple

import numpy as np

from .checkpoint import Checkpoint, read_latest, write_checkpoint
from .config import Config
from .errors import CheckpointError
from .sieve import _odd_count, fill_segment, is_prime_64, iter_segments, small_primes

__all__ = [
    "GapRecord",
    "GapScan",
    "GapExtremes",
    "IntervalCount",
    "scan_gaps",
    "first_occurrence",
    "missing_gaps",
    "interval_prime_count",
    "primes_between_squares",
    "short_interval_above_square",
    "normalized_gap_extremes",
    "hunt_gap",
    "first_occurrences_csv",
    "records_csv",
]

_KINDS = ("first_occurrence", "maximal")


@dataclass(frozen=True)
class GapRecord:
    p: int
    gap: int
    kind: str

    def __post_init__(self) -> None:
        if self.p < 2 or self.gap < 1:
            raise ValueError("need p >= 2 and gap >= 1")
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")


class GapScan(NamedTuple):
    first_occurrences: dict[int, int]
    maximal: list[GapRecord]


class GapExtremes(NamedTuple):
    min_value: float
    min_witness: tuple[int, int]
    max_value: float
    max_witness: tuple[int, int]


class IntervalCount(NamedTuple):
    count: int
    expected: float
    ratio: float


def _next_prime_after(n: int) -> int:
    c = n + 1
    if c <= 2:
        return 2
    if c % 2 == 0:
        c += 1
    while not is_prime_64(c):
        c += 2
    return c


def _gap_segments(bound: int,
                  cfg: Config | None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (starts, gaps) arrays covering every prime start p <= bound."""
    carry = None
    for seg in iter_segments(bound, cfg):
        ps = seg.values()
        if len(ps) == 0:
            continue
        arr = ps if carry is None else np.concatenate([[carry], ps])
        if len(arr) >= 2:
            yield arr[:-1], np.diff(arr)
        carry = int(arr[-1])
    if carry is not None:
        nxt = _next_prime_after(carry)
        yield (np.array([carry], dtype=np.int64),
               np.array([nxt - carry], dtype=np.int64))


def scan_gaps(limit: int, *, cfg: Config | None = None) -> GapScan:
    """First occurrence of each realized gap and all maximal-gap records.

    Gap starts p < limit; the final prime's successor is looked up beyond
    the limit so its gap is still well defined.
    """
    if limit < 3:
        raise ValueError("limit must be at least 3")
    firsts: dict[int, int] = {}
    maximal: list[GapRecord] = []
    running = 0
    for starts, gs in _gap_segments(limit - 1, cfg):
        for g in sorted(int(v) for v in np.unique(gs)):
            if g not in firsts:
                firsts[g] = int(starts[int(np.argmax(gs == g))])
        if int(gs.max()) > running:
            prior = np.maximum.accumulate(np.concatenate([[running], gs]))[:-1]
            for i in np.flatnonzero(gs > prior):
                maximal.append(GapRecord(int(starts[i]), int(gs[i]), "maximal"))
            running = int(gs.max())
    return GapScan(firsts, maximal)


def first_occurrence(gap: int, limit: int, *,
                     cfg: Config | None = None) -> GapRecord | None:
    """Smallest prime p <= limit whose successor is exactly p + gap."""
    if gap != 1 and gap % 2:
        raise ValueError("a prime gap above 1 must be even")
    if gap < 1:
        raise ValueError("gap must be >= 1")
    if limit < 2:
        raise ValueError("limit must be at least 2")
    for starts, gs in _gap_segments(limit, cfg):
        hit = np.flatnonzero(gs == gap)
        if len(hit):
            return GapRecord(int(starts[hit[0]]), gap, "first_occurrence")
    return None


def missing_gaps(limit: int, max_gap: int, *,
                 cfg: Config | None = None) -> list[int]:
    """Even gaps <= max_gap never realized by a prime start below limit."""
    if max_gap % 2 or max_gap < 2:
        raise ValueError("max_gap must be a positive even number")
    if limit < 3:
        raise ValueError("limit must be at least 3")
    seen: set[int] = set()
    wanted = set(range(2, max_gap + 1, 2))
    for _, gs in _gap_segments(limit - 1, cfg):
        seen.update(int(v) for v in np.unique(gs))
        if wanted <= seen:
            break
    return sorted(wanted - seen)


def _integer_root(n: int, k: int) -> int:
    """Largest r with r**k <= n, exact for any size of n."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n == 0:
        return 0
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _count_primes_interval(a: int, b: int, cfg: Config | None) -> int:
    """Number of primes in [a, b]."""
    if b < a or b < 2:
        return 0
    cfg = (cfg or Config()).validate()
    total = 1 if a <= 2 else 0
    anchor = a if a % 2 == 0 else a - 1
    anchor = max(anchor, 2)
    base = small_primes(max(isqrt(b), 3))
    span = 2 * cfg.segment_odds
    lo = anchor
    while lo <= b:
        hi = min(lo + span, b + 1)
        bits = fill_segment(lo, hi, base)
        total += int(bits.sum())
        lo += span
    return total


def interval_prime_count(x: int, theta) -> IntervalCount:
    """Primes in (x, x + floor(x**theta)] against the x**theta / log x density.

    theta may be a Fraction (window computed exactly via integer roots) or
    a float (converted to its exact binary Fraction).
    """
    if x < 10:
        raise ValueError("x must be at least 10")
    th = theta if isinstance(theta, Fraction) else Fraction(theta)
    if not 0 < th < 1:
        raise ValueError("theta must lie strictly between 0 and 1")
    window = _integer_root(x ** th.numerator, th.denominator)
    count = _count_primes_interval(x + 1, x + window, None)
    expected = math.exp(float(th) * math.log(x)) / math.log(x)
    return IntervalCount(count, expected, count / expected)


def _first_prime_in(a: int, b: int) -> int | None:
    """Smallest prime in [a, b], scanning candidates directly."""
    if b < a:
        return None
    if a <= 2 <= b:
        return 2
    c = max(a, 3) | 1
    while c <= b:
        if is_prime_64(c):
            return c
        c += 2
    return None


def primes_between_squares(N: int) -> list[int]:
    """All n <= N with no prime in (n**2, (n+1)**2); expected empty."""
    if N < 1:
        raise ValueError("N must be at least 1")
    out = []
    for n in range(1, N + 1):
        if _first_prime_in(n * n + 1, (n + 1) * (n + 1) - 1) is None:
            out.append(n)
    return out


def short_interval_above_square(N: int, e: float) -> float:
    """Fraction of n <= N with a prime in (n**2, n**2 + n**e]."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if not e > 1:
        raise ValueError("exponent must exceed 1")
    hits = 0
    for n in range(1, N + 1):
        top = n * n + int(n**e)
        if _first_prime_in(n * n + 1, top) is not None:
            hits += 1
    return hits / N


def normalized_gap_extremes(limit: int, *,
                            cfg: Config | None = None) -> GapExtremes:
    """Extremes of gap / log(p) over prime starts p <= limit, with witnesses."""
    if limit < 11:
        raise ValueError("limit must be at least 11")
    best_min = math.inf
    best_max = -math.inf
    wit_min = wit_max = (0, 0)
    for starts, gs in _gap_segments(limit, cfg):
        vals = gs / np.log(starts)
        i = int(np.argmin(vals))
        j = int(np.argmax(vals))
        if vals[i] < best_min:
            best_min = float(vals[i])
            wit_min = (int(starts[i]), int(gs[i]))
        if vals[j] > best_max:
            best_max = float(vals[j])
            wit_max = (int(starts[j]), int(gs[j]))
    return GapExtremes(best_min, wit_min, best_max, wit_max)


def hunt_gap(gap: int, stop: int, *, start: int = 2,
             cfg: Config | None = None,
             checkpoint_path: str | None = None,
             checkpoint_stride: int = 1 << 30) -> GapRecord | None:
    """Search [start, stop] for the first prime whose successor sits gap away.

    Resumable: with checkpoint_path the scan persists its position and the
    last prime carried over the boundary, and picks up from there.
    """
    if gap != 1 and gap % 2:
        raise ValueError("a prime gap above 1 must be even")
    if stop < start:
        raise ValueError("stop must be >= start")
    cfg = (cfg or Config()).validate()
    task_id = f"gap_hunt({gap})@{stop}"

    pos = max(2, start - start % 2)
    carry: int | None = None
    if checkpoint_path is not None:
        cp = read_latest(checkpoint_path)
        if cp is not None:
            if cp.task_id != task_id:
                raise CheckpointError(
                    f"checkpoint file belongs to task {cp.task_id!r}, "
                    f"not {task_id!r}")
            if cp.payload.get("found"):
                p = int(cp.payload["found"])
                return GapRecord(p, gap, "first_occurrence")
            pos = cp.range_done
            raw = cp.payload.get("carry")
            carry = int(raw) if raw is not None else None

    base = small_primes(max(isqrt(stop) + 1, 3))
    span = 2 * cfg.segment_odds
    stride = max(span, checkpoint_stride)
    next_write = pos + stride
    while pos <= stop:
        hi = min(pos + span, stop + 1)
        bits = fill_segment(pos, hi, base)
        ps = pos + 1 + 2 * np.flatnonzero(bits).astype(np.int64)
        if pos <= 2 < hi:
            ps = np.concatenate([[2], ps])
        if len(ps):
            arr = ps if carry is None else np.concatenate([[carry], ps])
            if len(arr) >= 2:
                gs = np.diff(arr)
                hit = np.flatnonzero(gs == gap)
                if len(hit):
                    p = int(arr[:-1][hit[0]])
                    if checkpoint_path is not None:
                        write_checkpoint(checkpoint_path, Checkpoint(
                            task_id=task_id, range_done=pos,
                            payload={"found": str(p)}))
                    return GapRecord(p, gap, "first_occurrence")
            carry = int(arr[-1])
        pos = hi if hi % 2 == 0 else hi + 1
        if checkpoint_path is not None and pos >= next_write and pos <= stop:
            write_checkpoint(checkpoint_path, Checkpoint(
                task_id=task_id, range_done=pos,
                payload={"carry": None if carry is None else str(carry)}))
            next_write = pos + stride
    # the trailing prime's gap may close just past the bound
    if carry is not None and carry <= stop:
        nxt = _next_prime_after(carry)
        if nxt - carry == gap:
            if checkpoint_path is not None:
                write_checkpoint(checkpoint_path, Checkpoint(
                    task_id=task_id, range_done=stop,
                    payload={"found": str(carry)}))
            return GapRecord(carry, gap, "first_occurrence")
    if checkpoint_path is not None:
        write_checkpoint(checkpoint_path, Checkpoint(
            task_id=task_id, range_done=stop + 1,
            payload={"carry": None if carry is None else str(carry)}))
    return None


def first_occurrences_csv(firsts: dict[int, int]) -> str:
    lines = ["gap,first_p"] + [f"{g},{firsts[g]}" for g in sorted(firsts)]
    return "\n".join(lines) + "\n"


def records_csv(records) -> str:
    lines = ["p,gap"] + [f"{r.p},{r.gap}" for r in records]
    return "\n".join(lines) + "\n"
