"""Enumerate all loops of small order with unit 0 and tally them by ladder rung.

    python scripts/sweep_small_loops.py --max-order 5
"""
import argparse
import collections
import time
from dataclasses import dataclass

from moufang import axioms, fixtures


@dataclass
class SweepConfig:
    max_order: int = 5
    show_counterexamples: bool = True


def sweep(cfg: SweepConfig):
    rows = []
    for n in range(1, cfg.max_order + 1):
        start = time.perf_counter()
        tally = collections.Counter()
        bad = []
        for tbl in fixtures.enumerate_loops(n):
            ladder = axioms.classify(tbl)
            tally[ladder.rung] += 1
            if ladder.rung == axioms.Rung.MOUFANG_LOOP:
                bad.append(tbl)
        rows.append((n, tally, bad, time.perf_counter() - start))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=SweepConfig.max_order)
    args = parser.parse_args()
    cfg = SweepConfig(max_order=args.max_order)

    rungs = list(axioms.Rung)[2:]
    print("order  " + "  ".join(f"{r.label:>14}" for r in rungs) + "   seconds")
    for n, tally, bad, secs in sweep(cfg):
        print(f"{n:5d}  " + "  ".join(f"{tally[r]:14d}" for r in rungs) + f"   {secs:7.2f}")
        if cfg.show_counterexamples:
            for tbl in bad:
                print(f"  non-associative Moufang loop of order {n}:")
                print("  " + "\n  ".join(" ".join(map(str, row)) for row in tbl.table))


if __name__ == "__main__":
    main()
