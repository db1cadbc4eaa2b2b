#!/usr/bin/env python3
"""Extended twin census: pi2 at 1e9, 1e10, and beyond.

The desk-scale suite stops at 1e8. This job carries the same counter to
the next decades and checks each completed decade against the reference
table. Interrupt freely; with --checkpoint the run resumes where it
stopped and the final table is byte-identical to an uninterrupted run.

    python scripts/twin_census_extended.py --limit 1e9 \
        --checkpoint runs/census_1e9.jsonl --threads 4

1e9 is minutes on a laptop, 1e10 is hours.
"""
import argparse
import sys
import time

from primelab.census import count_pairs_2k
from primelab.config import Config, resolve
from primelab.refdata import PI2_BY_DECADE


def parse_int(text: str) -> int:
    return int(float(text.replace("_", "")))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=parse_int, default=10**9)
    ap.add_argument("--checkpoint", default=None,
                    help="JSONL checkpoint path (resume + progress)")
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--out", default=None, help="write final CSV here")
    args = ap.parse_args()

    cfg = resolve(Config(), threads=args.threads)
    decades = []
    d = 1000
    while d <= args.limit:
        decades.append(d)
        d *= 10
    if decades[-1] != args.limit:
        decades.append(args.limit)

    t0 = time.time()
    table = count_pairs_2k(1, args.limit, decades, cfg=cfg,
                           checkpoint_path=args.checkpoint)
    dt = time.time() - t0

    lines = ["limit,count,published,match"]
    for limit, count in table.rows:
        ref = PI2_BY_DECADE.get(limit)
        if ref is None:
            lines.append(f"{limit},{count},,")
        else:
            ok = "yes" if count == ref.value else "NO"
            lines.append(f"{limit},{count},{ref.value},{ok}")
            if count != ref.value:
                print(f"MISMATCH at {limit}: computed {count}, "
                      f"published {ref.value} ({ref.citation})",
                      file=sys.stderr)
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"# {dt:.1f}s, threads={cfg.threads}", file=sys.stderr)
    bad = any(line.endswith("NO") for line in lines)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
