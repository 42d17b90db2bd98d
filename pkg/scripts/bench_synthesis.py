#!/usr/bin/env python3
"""Generate a seeded corpus, synthesize, verify, and report timing/widths.

Usage: python scripts/bench_synthesis.py [--count 500] [--max-budget 200] [--seed0 0]
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from unicwd import evaluate, random_unigraph, synthesize


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-budget", type=int, default=200)
    ap.add_argument("--seed0", type=int, default=0)
    args = ap.parse_args()

    widths: Counter[int] = Counter()
    sizes: Counter[str] = Counter()
    t_gen = t_synth = t_verify = 0.0
    max_n = 0
    for i in range(args.count):
        budget = 5 + (i * (args.max_budget - 5)) // max(1, args.count - 1)
        t0 = time.time()
        g, _ = random_unigraph(args.seed0 + i, budget)
        t1 = time.time()
        expr, report = synthesize(g)
        t2 = time.time()
        assert evaluate(expr).graph == g
        t3 = time.time()
        t_gen += t1 - t0
        t_synth += t2 - t1
        t_verify += t3 - t2
        widths[report.total_width] += 1
        sizes["n<=20" if g.n <= 20 else "n<=100" if g.n <= 100 else "n>100"] += 1
        max_n = max(max_n, g.n)

    print(f"{args.count} graphs, max n = {max_n}")
    print(f"sizes: {dict(sorted(sizes.items()))}")
    print(f"widths: {dict(sorted(widths.items()))}")
    print(
        f"time: generate {t_gen:.2f}s, synthesize {t_synth:.2f}s, verify {t_verify:.2f}s"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
