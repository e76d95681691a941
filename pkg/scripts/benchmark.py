"""Timing of the HP routes as the number of components grows.

For each n, draws ``--samples`` seeded random linking matrices with
|lk| <= bound and times the forest formula and the dichromatic (graph) route,
clearing memo caches before each graph-route call so timings are cold.

    python scripts/benchmark.py --max-n 6 --bound 3
"""

import argparse
import random
import time
from dataclasses import dataclass

from qhomotopy.dichromatic import clear_caches
from qhomotopy.linkhp import homotopy_polynomial, hp_via_dichromatic
from qhomotopy.verify import random_linking_matrix


@dataclass
class BenchConfig:
    max_n: int = 6
    bound: int = 3
    samples: int = 5
    seed: int = 0
    graph_max_n: int = 6  # cold-cache graph route; each extra component multiplies its cost


def time_call(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description="HP timing benchmark")
    ap.add_argument("--max-n", type=int, default=BenchConfig.max_n)
    ap.add_argument("--bound", type=int, default=BenchConfig.bound)
    ap.add_argument("--samples", type=int, default=BenchConfig.samples)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    ap.add_argument("--graph-max-n", type=int, default=BenchConfig.graph_max_n)
    cfg = BenchConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    rng = random.Random(cfg.seed)
    print(f"{'n':>3} {'formula ms':>12} {'graph ms':>12}")
    for n in range(1, cfg.max_n + 1):
        mats = [random_linking_matrix(rng, max_n=n, bound=cfg.bound, min_n=n) for _ in range(cfg.samples)]
        f = sum(time_call(homotopy_polynomial, m) for m in mats) / len(mats)
        if n <= cfg.graph_max_n:
            g = 0.0
            for m in mats:
                clear_caches()
                g += time_call(hp_via_dichromatic, m)
            gtext = f"{1000 * g / len(mats):12.2f}"
        else:
            gtext = f"{'skipped':>12}"
        print(f"{n:>3} {1000 * f:12.2f} {gtext}")


if __name__ == "__main__":
    main()
