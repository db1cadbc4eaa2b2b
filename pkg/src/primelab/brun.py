"""Reciprocal sums over twin pairs and the extrapolated series limit.

Pairs are indexed by their smaller member p <= limit (the census
convention), so 5 contributes through both (3,5) and (5,7).  Segments
are summed in 80-bit floats and merged into a Kahan-compensated
accumulator in ascending range order; shard boundaries are fixed by the
segment size, not the thread count, so totals do not depend on threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import NamedTuple, Sequence

import numpy as np

from .census import _normalize_marks
from .checkpoint import Checkpoint, read_latest, write_checkpoint
from .config import Config
from .errors import CheckpointError
from .parallel import run_sharded, split_range
from .refdata import BRUN_ESTIMATES, BRUN_KUTRIB_RICHSTEIN, BRUN_REFERENCE
from .sieve import fill_segment, small_primes

__all__ = [
    "BrunAccumulator",
    "BrunRow",
    "BrunReportRow",
    "brun_partial",
    "brun_extrapolate",
    "brun_table_report",
    "estimate_marks",
    "format_longdouble",
    "parse_longdouble",
]

_LD = np.longdouble


def format_longdouble(x) -> str:
    """Shortest decimal string that parses back to the same 80-bit float."""
    return np.format_float_positional(_LD(x), unique=True)


def parse_longdouble(s: str) -> np.longdouble:
    return _LD(s)


@dataclass
class BrunAccumulator:
    limit_done: int = 2
    pair_count: int = 0
    sum: np.longdouble = _LD(0)
    compensation: np.longdouble = _LD(0)

    def merge(self, block_sum, block_pairs: int, new_limit: int) -> None:
        y = _LD(block_sum) - self.compensation
        t = self.sum + y
        self.compensation = (t - self.sum) - y
        self.sum = t
        self.pair_count += int(block_pairs)
        self.limit_done = int(new_limit)


class BrunRow(NamedTuple):
    limit: int
    sum: np.longdouble
    pair_count: int


def _scan_shard(lo: int, hi: int, base: np.ndarray, cfg: Config,
                marks: tuple[int, ...]):
    """Sum 1/p + 1/(p+2) over twin pairs with smaller member in [lo, hi).

    Returns (total, pair count, [(mark, prefix sum, prefix count), ...])
    for the marks that land inside this shard.
    """
    span = 2 * cfg.segment_odds
    buf = np.empty(cfg.segment_odds + 1, dtype=bool)
    total = _LD(0)
    comp = _LD(0)
    pairs = 0
    out_rows: list[tuple[int, np.longdouble, int]] = []
    my_marks = [m for m in marks if lo <= m < hi]
    for seg_lo in range(lo, hi, span):
        seg_hi = min(seg_lo + span, hi)
        bits = fill_segment(seg_lo, seg_hi + 2, base, out=buf)
        slots = (seg_hi - seg_lo) // 2
        inst = bits[:slots] & bits[1:slots + 1]
        idx = np.nonzero(inst)[0]
        p = seg_lo + 1 + 2 * idx.astype(np.int64)
        recips = 1.0 / p.astype(_LD) + 1.0 / (p + 2).astype(_LD)
        for mk in my_marks:
            if seg_lo <= mk < seg_hi:
                cnt = int(np.searchsorted(p, mk, side="right"))
                psum = recips[:cnt].sum(dtype=_LD) if cnt else _LD(0)
                out_rows.append((mk, total + psum, pairs + cnt))
        seg_sum = recips.sum(dtype=_LD) if idx.size else _LD(0)
        y = seg_sum - comp
        t = total + y
        comp = (t - total) - y
        total = t
        pairs += int(idx.size)
    return total, pairs, out_rows


def brun_partial(limit: int, checkpoints: Sequence[int] | None = None, *,
                 cfg: Config | None = None,
                 checkpoint_path=None,
                 checkpoint_stride: int = 1 << 28) -> list[BrunRow]:
    """Compensated partial sums at each requested mark (default: the limit)."""
    if limit < 5:
        raise ValueError("limit must be at least 5")
    cfg = cfg or Config()
    cfg.validate()
    marks = _normalize_marks(limit, checkpoints)
    task_id = f"brun@{limit}"
    acc = BrunAccumulator()
    rows: list[BrunRow] = []
    if checkpoint_path is not None:
        prior = read_latest(checkpoint_path)
        if prior is not None:
            if prior.task_id != task_id:
                raise CheckpointError(
                    f"checkpoint is for {prior.task_id!r}, expected {task_id!r}")
            pl = prior.payload
            try:
                acc = BrunAccumulator(prior.range_done, int(pl["pairs"]),
                                      parse_longdouble(pl["sum"]),
                                      parse_longdouble(pl["comp"]))
                rows = [BrunRow(int(m), parse_longdouble(s), int(c))
                        for m, s, c in pl["rows"]]
            except (KeyError, TypeError, ValueError) as exc:
                raise CheckpointError(f"malformed payload: {exc}") from exc

    base = small_primes(max(isqrt(limit + 2) + 1, 3))
    span = 2 * cfg.segment_odds
    chunk = max(checkpoint_stride, span)
    chunk -= chunk % 2
    bound = limit + 1
    pos = acc.limit_done
    while pos < bound:
        nxt = min(pos + chunk, bound)
        # shard size is a fixed multiple of the segment, never the thread
        # count, so the merged total is thread-count independent
        shards = split_range(pos, nxt, max(1, -(-(nxt - pos) // (8 * span))))
        results = run_sharded(
            lambda a, b: _scan_shard(a, b, base, cfg, marks),
            shards, cfg.threads)
        for (slo, shi), (ssum, spairs, srows) in zip(shards, results):
            for mk, psum, pcnt in srows:
                rows.append(BrunRow(mk, acc.sum + psum, acc.pair_count + pcnt))
            acc.merge(ssum, spairs, shi)
        if checkpoint_path is not None:
            write_checkpoint(checkpoint_path, Checkpoint(task_id, nxt, {
                "sum": format_longdouble(acc.sum),
                "comp": format_longdouble(acc.compensation),
                "pairs": str(acc.pair_count),
                "rows": [[r.limit, format_longdouble(r.sum), r.pair_count]
                         for r in rows],
            }))
        pos = nxt
    return rows


@lru_cache(maxsize=None)
def _alpha_longdouble() -> np.longdouble:
    from .constants import twin_constant
    return _LD(twin_constant(25).decimal_str())


def brun_extrapolate(sum_value, limit: int) -> np.longdouble:
    """sum + 4*alpha/log(limit); assumes the pair-density conjecture."""
    if limit < 10**3:
        raise ValueError("limit must be at least 1000")
    return _LD(sum_value) + 4 * _alpha_longdouble() / np.log(_LD(limit))


class BrunReportRow(NamedTuple):
    limit: int
    raw_sum: str
    extrapolated: str | None
    published_estimate: float | None
    published_error: float | None
    published_by: str | None
    vs_reference: float | None


def estimate_marks(limit: int) -> list[int]:
    """Published-estimate thresholds at or below limit, for checkpoints."""
    return sorted({row[1] for row in BRUN_ESTIMATES if row[1] <= limit})


def brun_table_report(partials: Sequence[BrunRow]) -> dict:
    """Partial sums lined up with the published estimate history.

    Extrapolated values assume the pair-density conjecture and are
    labeled as such; the difference column is against the reference
    value, not a computed truth.
    """
    by_limit = {row[1]: row for row in BRUN_ESTIMATES}
    ref = float(BRUN_REFERENCE.value)
    rows = []
    for part in partials:
        ext = None
        diff = None
        if part.limit >= 10**3:
            ext_val = brun_extrapolate(part.sum, part.limit)
            ext = format_longdouble(ext_val)
            diff = float(ext_val) - ref
        pub = by_limit.get(part.limit)
        rows.append(BrunReportRow(
            part.limit, format_longdouble(part.sum), ext,
            pub[2] if pub else None, pub[3] if pub else None,
            pub[4] if pub else None, diff))
    return {
        "rows": rows,
        "reference": BRUN_REFERENCE,
        "alternate_reference": BRUN_KUTRIB_RICHSTEIN,
        "extrapolation": "conjecture-conditional",
    }
