"""Run the cross-oracle batch and write a JSON report.

    python scripts/batch_verify.py --seed 1 --count 500 --out runs/seed1

Equivalent to ``qhs verify --batch``, with the random-matrix size knobs exposed.
"""

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from qhomotopy.verify import batch_verify


@dataclass
class BatchConfig:
    seed: int = 1
    count: int = 200
    max_n: int = 5
    bound: int = 4
    out: str | None = None


def main(argv=None):
    ap = argparse.ArgumentParser(description="Cross-oracle batch verification")
    defaults = BatchConfig()
    for name, value in asdict(defaults).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value) if value is not None else str, default=value)
    cfg = BatchConfig(**vars(ap.parse_args(argv)))
    start = time.perf_counter()
    report = batch_verify(cfg.seed, cfg.count, cfg.out, max_n=cfg.max_n, bound=cfg.bound)
    elapsed = time.perf_counter() - start
    summary = {k: report[k] for k in ("seed", "count", "failures", "passed")}
    summary["seconds"] = round(elapsed, 2)
    print(json.dumps(summary))
    if report["first_failure"]:
        print(json.dumps(report["first_failure"], indent=2))
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
