"""Deterministic range sharding.

Workers may run in any order on a thread pool, but results are merged in
shard order, so a count over [lo, hi) is identical for any thread count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")


def split_range(lo: int, hi: int, parts: int, align: int = 2) -> list[tuple[int, int]]:
    """Split [lo, hi) into at most `parts` disjoint covering subranges.

    Boundaries are rounded down to multiples of `align` so that callers
    relying on even segment bases keep that property inside every shard.
    """
    if hi <= lo:
        return []
    if parts < 1:
        raise ValueError("parts must be >= 1")
    span = hi - lo
    step = max(align, -(-span // parts))
    step += (-step) % align
    bounds = list(range(lo, hi, step)) + [hi]
    return [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]


def run_sharded(worker: Callable[[int, int], T],
                shards: Sequence[tuple[int, int]],
                threads: int) -> list[T]:
    """Run worker(lo, hi) over every shard, results in shard order."""
    if threads <= 1 or len(shards) <= 1:
        return [worker(lo, hi) for lo, hi in shards]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: worker(*s), shards))
