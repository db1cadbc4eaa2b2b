"""Constellation censuses and related prime-counting scans.

A pattern is a tuple of even offsets starting at 0; an instance at p means
p + o is prime for every offset o.  Instances are counted by their smallest
member p <= limit, even when p + offset lands beyond the limit.  Counting
is segmented with a lookahead of max(offsets) so instances that straddle a
segment boundary are seen exactly once, and range shards merge by integer
addition, so results are identical for any segment size or thread count.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .checkpoint import Checkpoint, read_latest, write_checkpoint
from .config import Config
from .errors import CheckpointError, MathViolationError, ResourceLimitError
from .parallel import run_sharded, split_range
from .sieve import (
    _odd_count,
    factorize_64,
    fill_segment,
    is_prime_64,
    iter_primes,
    odd_prime_flags,
    prp_test,
    small_primes,
)

__all__ = [
    "Pattern",
    "CountTable",
    "TwinFormHit",
    "admissible",
    "count_pattern",
    "count_pairs_2k",
    "count_twin_almost_primes",
    "count_square_plus_one",
    "isolated_progression_witnesses",
    "non_twin_prime_run",
    "perfect_half_sum_scan",
    "twin_form_search",
]


@dataclass(frozen=True)
class Pattern:
    """Sorted tuple of distinct even offsets; first element must be 0."""

    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        offs = tuple(int(o) for o in self.offsets)
        if not offs:
            raise ValueError("pattern needs at least one offset")
        if offs[0] != 0:
            raise ValueError("first offset must be 0")
        if any(o % 2 for o in offs):
            raise ValueError("odd offsets force an even member; rejected")
        if any(b <= a for a, b in zip(offs, offs[1:])):
            raise ValueError("offsets must be strictly increasing")
        object.__setattr__(self, "offsets", offs)

    @classmethod
    def coerce(cls, value) -> "Pattern":
        if isinstance(value, Pattern):
            return value
        return cls(tuple(sorted({int(o) for o in value})))

    @property
    def k(self) -> int:
        return len(self.offsets)

    @property
    def reach(self) -> int:
        return self.offsets[-1]

    def residue_count(self, q: int) -> int:
        """nu(q): number of distinct residues the offsets hit mod q."""
        return len({o % q for o in self.offsets})

    @property
    def tag(self) -> str:
        return "pattern(" + ",".join(map(str, self.offsets)) + ")"


@dataclass(frozen=True)
class CountTable:
    """Census counts at increasing checkpoint limits."""

    tag: str
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        rows = tuple((int(l), int(c)) for l, c in self.rows)
        if any(b[0] <= a[0] for a, b in zip(rows, rows[1:])):
            raise ValueError("checkpoint limits must be strictly increasing")
        if any(b[1] < a[1] for a, b in zip(rows, rows[1:])):
            raise MathViolationError("census counts decreased with the limit")
        object.__setattr__(self, "rows", rows)

    @property
    def final_count(self) -> int:
        return self.rows[-1][1] if self.rows else 0

    def to_csv(self) -> str:
        return "\n".join(["limit,count"] + [f"{l},{c}" for l, c in self.rows]) + "\n"

    def to_json(self) -> str:
        return json.dumps({"tag": self.tag, "rows": [list(r) for r in self.rows]})


def admissible(pattern) -> bool:
    """True unless the offsets cover every residue class mod some prime q <= k."""
    pat = Pattern.coerce(pattern)
    for q in map(int, small_primes(max(pat.k, 2))):
        if q > pat.k:
            break
        if pat.residue_count(q) == q:
            return False
    return True


def _normalize_marks(limit: int, checkpoints) -> tuple[int, ...]:
    if checkpoints is None:
        return (int(limit),)
    marks = tuple(sorted({int(c) for c in checkpoints}))
    if not marks:
        raise ValueError("checkpoints must be non-empty when given")
    if marks[0] < 1:
        raise ValueError("checkpoints must be positive")
    if marks[-1] > limit:
        raise ValueError("checkpoints must not exceed the limit")
    return marks


def _count_pattern_range(pat: Pattern, lo: int, hi: int,
                         marks: tuple[int, ...], base: np.ndarray,
                         cfg: Config) -> np.ndarray:
    """Instance starts p in [lo, hi) with p <= mark, for every mark.

    Only odd starts; the caller owns the p = 2 correction.  lo must be even.
    """
    span = 2 * cfg.segment_odds
    reach = pat.reach
    shifts = [o >> 1 for o in pat.offsets[1:]]
    totals = np.zeros(len(marks), dtype=np.int64)
    buf = np.empty(cfg.segment_odds + (reach >> 1) + 1, dtype=bool)
    seg_lo = lo
    while seg_lo < hi:
        seg_hi = min(seg_lo + span, hi)
        bits = fill_segment(seg_lo, seg_hi + reach, base, out=buf)
        m = _odd_count(seg_lo, seg_hi)
        inst = bits[:m].copy()
        for s in shifts:
            inst &= bits[s:s + m]
        full = int(inst.sum())
        for j, mark in enumerate(marks):
            if mark >= seg_hi - 1:
                totals[j] += full
            elif mark >= seg_lo:
                totals[j] += int(inst[:_odd_count(seg_lo, mark + 1)].sum())
        seg_lo = seg_hi
    return totals


def _resume_totals(path: str, task_id: str,
                   marks: tuple[int, ...]) -> tuple[np.ndarray, int]:
    cp = read_latest(path)
    if cp is None:
        return np.zeros(len(marks), dtype=np.int64), 2
    if cp.task_id != task_id:
        raise CheckpointError(
            f"checkpoint file belongs to task {cp.task_id!r}, not {task_id!r}")
    if cp.payload.get("marks") != list(marks):
        raise CheckpointError("checkpoint marks do not match this run")
    totals = np.array([int(t) for t in cp.payload["totals"]], dtype=np.int64)
    if len(totals) != len(marks):
        raise CheckpointError("checkpoint totals length mismatch")
    return totals, cp.range_done


def count_pattern(pattern, limit: int, checkpoints=None, *,
                  cfg: Config | None = None,
                  checkpoint_path: str | None = None,
                  checkpoint_stride: int = 1 << 28) -> CountTable:
    """Census of an admissible pattern up to limit, counts at each checkpoint.

    With checkpoint_path, progress is persisted every checkpoint_stride of
    range and the call resumes from the file's last state.
    """
    pat = Pattern.coerce(pattern)
    if not admissible(pat):
        raise ValueError(
            f"pattern {pat.offsets} covers all residues mod a small prime; "
            "its census is finite and would mislead")
    if limit < 2:
        raise ValueError("limit must be at least 2")
    cfg = (cfg or Config()).validate()
    marks = _normalize_marks(limit, checkpoints)
    task_id = f"{pat.tag}@{limit}"
    base = small_primes(max(isqrt(limit + pat.reach), 3))

    if checkpoint_path is not None:
        totals, start = _resume_totals(checkpoint_path, task_id, marks)
    else:
        totals, start = np.zeros(len(marks), dtype=np.int64), 2

    end = limit + 1
    # chunk = distance between checkpoint writes; one chunk when not resumable
    chunk = max(2 * cfg.segment_odds, checkpoint_stride)
    chunk += chunk % 2
    pos = start
    while pos < end:
        nxt = min(pos + chunk, end) if checkpoint_path is not None else end
        if cfg.threads > 1:
            shards = split_range(pos, nxt, cfg.threads * 4)
            parts = run_sharded(
                lambda s_lo, s_hi: _count_pattern_range(
                    pat, s_lo, s_hi, marks, base, cfg),
                shards, cfg.threads)
            for part in parts:
                totals += part
        else:
            totals += _count_pattern_range(pat, pos, nxt, marks, base, cfg)
        pos = nxt
        if checkpoint_path is not None:
            write_checkpoint(checkpoint_path, Checkpoint(
                task_id=task_id, range_done=pos,
                payload={"totals": [str(int(t)) for t in totals],
                         "marks": list(marks)}))

    if pat.k == 1:
        # p = 2 is prime; every multi-offset pattern puts an even number at 2+o
        totals = totals + (np.asarray(marks) >= 2)
    return CountTable(pat.tag, tuple(zip(marks, map(int, totals))))


def count_pairs_2k(k: int, limit: int, checkpoints=None, *,
                   cfg: Config | None = None,
                   checkpoint_path: str | None = None,
                   checkpoint_stride: int = 1 << 28) -> CountTable:
    """Primes p <= limit with p + 2k also prime (pairs at even gap 2k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    table = count_pattern((0, 2 * k), limit, checkpoints,
                          cfg=cfg, checkpoint_path=checkpoint_path,
                          checkpoint_stride=checkpoint_stride)
    return CountTable(f"pairs(2k={2 * k})", table.rows)


def count_twin_almost_primes(limit: int, checkpoints=None, *,
                             cfg: Config | None = None) -> CountTable:
    """Odd primes p <= limit with p + 2 having at most two prime factors.

    Counted with multiplicity (big Omega), so p + 2 prime, a semiprime, or
    a prime square all qualify.  p = 2 is excluded: the pair convention
    starts twin candidates at 3, and this count must dominate the twin
    census checkpoint by checkpoint.
    """
    if limit < 3:
        raise ValueError("limit must be at least 3")
    marks = _normalize_marks(limit, checkpoints)
    flags = odd_prime_flags(limit + 2)
    idx = np.flatnonzero(flags).astype(np.int64)
    ps = 2 * idx + 1
    ps = ps[ps <= limit]
    mates = ps + 2
    mate_prime = flags[(mates - 1) >> 1]

    rest = mates[~mate_prime]
    qualifies = np.zeros(len(rest), dtype=bool)
    if len(rest):
        spf = np.zeros(len(rest), dtype=np.int64)
        alive = np.arange(len(rest))
        vals = rest.copy()
        for q in range(3, isqrt(limit + 2) + 1, 2):
            if not flags[q >> 1]:
                continue
            hit = vals % q == 0
            if hit.any():
                spf[alive[hit]] = q
                alive, vals = alive[~hit], vals[~hit]
                if len(alive) == 0:
                    break
        if len(alive):
            raise MathViolationError(
                "composite p+2 with no factor below its square root")
        cof = rest // spf
        # Omega <= 2 exactly when the cofactor is itself prime
        qualifies = flags[(cof - 1) >> 1]

    winners = np.sort(np.concatenate([ps[mate_prime], ps[~mate_prime][qualifies]]))
    counts = np.searchsorted(winners, np.asarray(marks), side="right")
    return CountTable("twin_almost_prime",
                      tuple(zip(marks, map(int, counts))))


_SQUARE_MODES = ("prime", "omega_le_2", "bigomega_le_2")


def count_square_plus_one(limit: int, mode: str = "prime",
                          checkpoints=None) -> CountTable:
    """Census of m*m + 1 <= limit by primality or prime-divisor budget.

    mode="prime" counts primes of that shape; "omega_le_2" allows at most
    two distinct prime divisors; "bigomega_le_2" at most two with
    multiplicity.
    """
    if limit < 2:
        raise ValueError("limit must be at least 2")
    if mode not in _SQUARE_MODES:
        raise ValueError(f"mode must be one of {_SQUARE_MODES}")
    marks = _normalize_marks(limit, checkpoints)
    hits = []
    for m in range(1, isqrt(limit - 1) + 1):
        v = m * m + 1
        if mode == "prime":
            ok = is_prime_64(v)
        else:
            f = factorize_64(v)
            ok = (f.small_omega if mode == "omega_le_2" else f.big_omega) <= 2
        if ok:
            hits.append(v)
    counts = np.searchsorted(np.asarray(hits, dtype=np.int64),
                             np.asarray(marks), side="right")
    return CountTable(f"square_plus_one({mode})",
                      tuple(zip(marks, map(int, counts))))


def isolated_progression_witnesses(limit: int) -> list[int]:
    """Primes p <= limit, p > 7, with p = 5 (mod 21); both neighbours composite.

    The progression forces 3 | p-2 and 7 | p+2, so such a prime can never
    sit in a pair (p, p+2) or (p-2, p); each witness is verified anyway.
    """
    if limit < 26:
        raise ValueError("limit must be at least 26")
    flags = odd_prime_flags(limit + 2)
    # members of the progression alternate parity; odd ones start at 47
    cands = np.arange(47, limit + 1, 42, dtype=np.int64)
    witnesses = cands[flags[(cands - 1) >> 1]] if len(cands) else cands
    for p in map(int, witnesses):
        if is_prime_64(p - 2) or is_prime_64(p + 2):
            raise MathViolationError(f"{p} +/- 2 unexpectedly prime")
        if (p - 2) % 3 or (p + 2) % 7:
            raise MathViolationError(f"{p} fails the progression residue check")
    return [int(p) for p in witnesses]


def non_twin_prime_run(m: int, search_limit: int = 10**8, *,
                       cfg: Config | None = None) -> list[int]:
    """First run of m consecutive primes, none a member of a twin pair.

    Prime 2 counts as isolated (the pair convention starts at 3), so
    m = 1 returns [2].
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    run: list[int] = []
    best = 0
    prev = None
    cur = None
    # successor lookahead decides right-side twin membership; a successor
    # beyond search_limit + 2 cannot be at gap 2
    for nxt in iter_primes(search_limit + 2, cfg):
        if cur is not None:
            twin = (prev is not None and cur - prev == 2) or nxt - cur == 2
            if twin:
                run = []
            else:
                run.append(cur)
                if len(run) == m:
                    return run
                best = max(best, len(run))
        prev, cur = cur, nxt
    if cur is not None and cur <= search_limit:
        if not (prev is not None and cur - prev == 2):
            run.append(cur)
            if len(run) == m:
                return run
        best = max(best, len(run))
    err = ResourceLimitError(
        f"no run of {m} non-twin primes below {search_limit}")
    err.progress = {"search_limit": search_limit, "longest_run": best}
    raise err


def _even_perfects_upto(bound: int) -> list[int]:
    """Even perfect numbers <= bound via the Euclid-Euler form."""
    out = []
    for q in map(int, small_primes(64)):
        mq = (1 << q) - 1
        if mq < 1 << 63 and is_prime_64(mq):
            n = (1 << (q - 1)) * mq
            if n <= bound:
                out.append(n)
    return out


def perfect_half_sum_scan(limit: int, *,
                          cfg: Config | None = None) -> list[tuple[int, int]]:
    """Twin pairs (p, p+2) with p <= limit whose half-sum p+1 is perfect.

    Also asserts, for every twin pair with p > 5 encountered in the scan,
    that 6 divides p + 1.
    """
    if limit < 7:
        raise ValueError("limit must be at least 7")
    cfg = (cfg or Config()).validate()
    perfect = set(_even_perfects_upto(limit + 1))
    base = small_primes(max(isqrt(limit + 2), 3))
    span = 2 * cfg.segment_odds
    buf = np.empty(cfg.segment_odds + 2, dtype=bool)
    out: list[tuple[int, int]] = []
    lo = 2
    while lo <= limit:
        hi = min(lo + span, limit + 1)
        bits = fill_segment(lo, hi + 2, base, out=buf)
        m = _odd_count(lo, hi)
        inst = bits[:m] & bits[1:1 + m]
        ps = lo + 1 + 2 * np.flatnonzero(inst).astype(np.int64)
        big = ps[ps > 5]
        if len(big) and ((big + 1) % 6).any():
            raise MathViolationError("twin start p > 5 with p+1 not a multiple of 6")
        for p in map(int, ps):
            if p + 1 in perfect:
                out.append((p, p + 2))
        lo += span
    return out


@dataclass(frozen=True)
class TwinFormHit:
    k: int
    pair: tuple[int, int]
    certified: bool  # deterministic below 2**64, probable-prime above


_PRESIEVE_BOUND = 10**5


def twin_form_search(k_lo: int, k_hi: int, base: int,
                     exponent: int) -> list[TwinFormHit]:
    """k in [k_lo, k_hi] with k*base**exponent +/- 1 both (probable) primes.

    Candidates are first presieved by every prime q <= 1e5 (guarded so a
    candidate equal to q survives); survivors below 2**64 are certified
    deterministically, larger ones get a labeled probable-prime verdict.
    """
    if base not in (2, 10):
        raise ValueError("base must be 2 or 10")
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    if k_hi < k_lo:
        return []
    if k_lo < 1:
        raise ValueError("k_lo must be >= 1")
    scale = base**exponent
    hits: list[TwinFormHit] = []

    # small candidates can collide with presieve primes; test them directly
    small_top = min(k_hi, (_PRESIEVE_BOUND + 1) // scale)
    for k in range(k_lo, small_top + 1):
        n = k * scale
        if n - 1 >= 2 and is_prime_64(n - 1) and is_prime_64(n + 1):
            hits.append(TwinFormHit(k, (n - 1, n + 1), True))

    big_lo = max(k_lo, small_top + 1)
    if big_lo > k_hi:
        return hits
    kv = np.arange(big_lo, k_hi + 1, dtype=np.int64)
    alive = np.ones(len(kv), dtype=bool)
    for q in map(int, small_primes(_PRESIEVE_BOUND)):
        be = pow(base, exponent, q)
        r = (kv % q) * be % q
        alive &= ~((r == 1 % q) | (r == (q - 1) % q))
        # here n = k*scale > 1e5 + 1 > q, so divisibility really means composite
    for k in map(int, kv[alive]):
        n = k * scale
        if n + 1 < 1 << 64:
            if is_prime_64(n - 1) and is_prime_64(n + 1):
                hits.append(TwinFormHit(k, (n - 1, n + 1), True))
        else:
            if prp_test(n - 1) and prp_test(n + 1):
                hits.append(TwinFormHit(k, (n - 1, n + 1), False))
    return hits
