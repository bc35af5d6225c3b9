"""Random sweep of the tree-of-tangles construction.

Draws random weighted graphs and random separation systems, runs the
construction with the cover oracle and validates every result (including
the exhaustive realness checks). Prints a summary of how often uncrossing,
splits and fake deletions happened, and lists any seed that failed.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass

from abstract_tangles.errors import TangleError
from abstract_tangles.generators import random_cover_instance
from abstract_tangles.tot import tree_of_tangles, validate_tot_output


@dataclass
class SweepConfig:
    runs: int = 500
    max_n: int = 5
    max_seps: int = 8
    m: int = 3
    sort: bool = False
    seed: int = 0
    max_steps: int = 2000


def sweep(cfg: SweepConfig) -> tuple[Counter, list]:
    stats: Counter = Counter()
    failures = []
    for i in range(cfg.runs):
        seed = cfg.seed + i
        rng = random.Random(seed)
        u, F = random_cover_instance(rng, cfg.max_n, cfg.max_seps, cfg.m, sort=cfg.sort)
        S = list(u.system)
        try:
            res = tree_of_tangles(S, F, u, cfg.max_steps)
        except TangleError as exc:
            stats[type(exc).__name__] += 1
            failures.append((seed, repr(exc)))
            continue
        report = validate_tot_output(res, F, u, S)
        stats["valid" if report.ok else "invalid"] += 1
        stats["uncrossed"] += res.state.step > 0
        stats["split"] += res.state.split_count > 0
        stats["fake"] += bool(res.state.fakes)
        stats["steps"] += res.state.step
        if not report.ok:
            failures.append((seed, report.violations))
    return stats, failures


def main(argv=None) -> int:
    d = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=d.runs)
    ap.add_argument("--max-n", type=int, default=d.max_n)
    ap.add_argument("--max-seps", type=int, default=d.max_seps)
    ap.add_argument("--m", type=int, default=d.m, help="cover size bound; below 3 the oracle is no profile")
    ap.add_argument("--sort", action="store_true", help="enumerate S by increasing order")
    ap.add_argument("--seed", type=int, default=d.seed)
    ap.add_argument("--max-steps", type=int, default=d.max_steps)
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING)
    cfg = SweepConfig(a.runs, a.max_n, a.max_seps, a.m, a.sort, a.seed, a.max_steps)

    t0 = time.perf_counter()
    stats, failures = sweep(cfg)
    print(f"{cfg}")
    for key in sorted(stats):
        print(f"  {key:>10}: {stats[key]}")
    print(f"  {'seconds':>10}: {time.perf_counter() - t0:.1f}")
    for seed, what in failures:
        print(f"seed {seed}: {what}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
