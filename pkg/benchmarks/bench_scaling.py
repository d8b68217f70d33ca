"""Runtime and bit-growth scaling of the continuous-time decision.

Usage: python benchmarks/bench_scaling.py [--repeats R] [--out PATH]

Times decide_continuous on seeded random matrices with 8-bit entries for
n = 4, 8, 12, 16, fits log(time) against log(n) and writes a Markdown report.
A polynomial-time procedure shows a bounded slope; SLOPE_BOUND is the ceiling
the acceptance suite enforces.
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import time
from pathlib import Path

from ltibound.exact_core import IntMatrix, RatMatrix
from ltibound.fraction_free import eliminate
from ltibound.pipeline import decide_continuous

SIZES = (4, 8, 12, 16)
SEED = 2024
ENTRY_RANGE = (-127, 127)  # bitsize 8
# up to n trial degrees, each an elimination on an n^2 x d system whose entries
# grow linearly in n; measured slopes sit between 4 and 5
SLOPE_BOUND = 8.0


def sample(n: int, k: int = 0) -> IntMatrix:
    rng = random.Random(SEED + 1000 * n + k)
    return IntMatrix([[rng.randint(*ENTRY_RANGE) for _ in range(n)] for _ in range(n)])


def measure(repeats: int = 3, per_size: int = 2) -> list[dict]:
    rows = []
    for n in SIZES:
        best = math.inf
        bits_ok = True
        worst_ratio = 0.0
        for k in range(per_size):
            A = sample(n, k)
            bound = 2 * A.bitsize() ** 2
            max_bits = eliminate(A).max_bits
            bits_ok = bits_ok and max_bits <= bound
            worst_ratio = max(worst_ratio, max_bits / bound)
            for _ in range(repeats):
                t0 = time.perf_counter()
                decide_continuous(RatMatrix(A, 1))
                best = min(best, time.perf_counter() - t0)
        rows.append({"n": n, "seconds": best, "bits_ok": bits_ok, "bits_ratio": worst_ratio})
    return rows


def slope(rows: list[dict]) -> float:
    xs = [math.log(r["n"]) for r in rows]
    ys = [math.log(r["seconds"]) for r in rows]
    return statistics.linear_regression(xs, ys).slope


def report(rows: list[dict]) -> str:
    lines = [
        "# Scaling benchmark",
        "",
        f"Seeded random matrices (seed base {SEED}) with entries in [{ENTRY_RANGE[0]}, {ENTRY_RANGE[1]}].",
        "Time is the best of several runs of `decide_continuous`, minimum over two matrices per size.",
        "",
        "| n | seconds | Bareiss bits / 2*bitsize(A)^2 (worst) | bound holds |",
        "|---|---------|----------------------------------------|-------------|",
    ]
    for r in rows:
        lines.append(f"| {r['n']} | {r['seconds']:.4f} | {r['bits_ratio']:.5f} | {r['bits_ok']} |")
    lines += [
        "",
        f"log-log slope: {slope(rows):.2f}",
        f"slope bound: {SLOPE_BOUND}",
        "",
    ]
    return "\n".join(lines)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--out", default=str(Path(__file__).with_name("REPORT.md")))
    args = parser.parse_args()
    text = report(measure(args.repeats))
    Path(args.out).write_text(text, encoding="utf-8")
    print(text)


if __name__ == "__main__":
    main()
