#!/usr/bin/env python3
"""Carry the twin reciprocal sum past desk scale.

Accumulates sum(1/p + 1/(p+2)) over twin pairs with decade checkpoints
and prints the partial-sum table against the published estimate history
(the reference extrapolation sits at 1.9021605831). The sum converges
miserably slowly; the extrapolated column is the interesting one, and it
is conjecture-conditional.

1e10 is about an hour; 1e12 and up is serious machine time. Interrupt
and resume at will via --checkpoint.

    python scripts/brun_longrun.py --limit 1e10 \
        --checkpoint runs/brun_1e10.jsonl --threads 8
"""
import argparse
import sys
import time

from primelab.brun import brun_partial, brun_table_report, estimate_marks
from primelab.config import Config, resolve


def parse_int(text: str) -> int:
    return int(float(text.replace("_", "")))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=parse_int, default=10**10)
    ap.add_argument("--checkpoint", default=None)
    ap.add_argument("--threads", type=int, default=None)
    ap.add_argument("--stride", type=parse_int, default=1 << 30)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    cfg = resolve(Config(), threads=args.threads)
    marks = set(estimate_marks(args.limit)) | {args.limit}
    d = 1000
    while d <= args.limit:
        marks.add(d)
        d *= 10

    t0 = time.time()
    rows = brun_partial(args.limit, sorted(marks), cfg=cfg,
                        checkpoint_path=args.checkpoint,
                        checkpoint_stride=args.stride)
    dt = time.time() - t0

    rep = brun_table_report(rows)
    lines = ["limit,raw_sum,extrapolated_conditional,published_estimate,"
             "published_error,published_by,vs_reference"]
    for r in rep["rows"]:
        lines.append(",".join("" if v is None else str(v) for v in r))
    lines.append(f"# reference {rep['reference'].value} "
                 f"({rep['reference'].citation})")
    lines.append(f"# alternate {rep['alternate_reference'].value} "
                 f"({rep['alternate_reference'].citation})")
    lines.append(f"# extrapolation is {rep['extrapolation']}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"# {dt:.1f}s, threads={cfg.threads}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
