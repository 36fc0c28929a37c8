#!/usr/bin/env python3
"""Run every graph identity on seeded random graphs and tabulate the outcome per graph size."""

from __future__ import annotations

import argparse
import time
from collections import defaultdict
from dataclasses import dataclass

from zetakirch.suites import random_case


@dataclass
class Config:
    seed: int = 0
    cases: int = 200


def parse_args() -> Config:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--cases", type=int, default=Config.cases)
    ns = p.parse_args()
    return Config(ns.seed, ns.cases)


def main():
    cfg = parse_args()
    by_n = defaultdict(lambda: [0, 0, 0.0])
    for i in range(cfg.cases):
        start = time.perf_counter()
        case = random_case(cfg.seed, i)
        row = by_n[case.graphs["mixed"].n]
        row[0] += 1
        row[1] += case.passed
        row[2] += time.perf_counter() - start
    print(f"{'n':>3} {'cases':>6} {'passed':>7} {'ms/case':>8}")
    for n in sorted(by_n):
        count, passed, secs = by_n[n]
        print(f"{n:>3} {count:>6} {passed:>7} {1000 * secs / count:>8.1f}")


if __name__ == "__main__":
    main()
