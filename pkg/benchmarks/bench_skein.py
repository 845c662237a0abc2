"""Time the compiled and pure-Python skein kernels on the same diagrams.

Usage: python3 benchmarks/bench_skein.py [--repeat N] [--crossings C] [--count K]

Each kernel gets a fresh cache per diagram so the timings measure the
recursion rather than cache hits.  Results are checked for agreement.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from linkhom import _skein_py
from linkhom.fixtures import build_catalog
from linkhom.morse import braid_closure

try:
    from linkhom import _skein_c
except ImportError:
    _skein_c = None


def workload(count: int, crossings: int, seed: int):
    rng = random.Random(seed)
    cases = [(name, D) for name, D in build_catalog().items() if not D.is_string_link]
    for i in range(count):
        word = [rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(crossings)]
        cases.append((f"braid4-{i}", braid_closure(4, word)))
    return cases


def time_kernel(kernel, cases, repeat: int) -> tuple[float, list]:
    samples = []
    results = []
    for _ in range(repeat):
        results = []
        start = time.perf_counter()
        for _, D in cases:
            results.append(kernel.conway(D.crossings, D.signs, len(D.free_arcs()), 64, {}))
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), results


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--crossings", type=int, default=12)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    cases = workload(args.count, args.crossings, args.seed)
    print(f"{len(cases)} diagrams, random braids with {args.crossings} crossings, median of {args.repeat}")
    t_py, r_py = time_kernel(_skein_py, cases, args.repeat)
    print(f"python  {t_py:8.3f} s")
    if _skein_c is None:
        print("cython  (extension not built)")
        return 0
    t_c, r_c = time_kernel(_skein_c, cases, args.repeat)
    if r_c != r_py:
        bad = [name for (name, _), a, b in zip(cases, r_c, r_py) if a != b]
        print(f"kernels disagree on {bad}")
        return 1
    print(f"cython  {t_c:8.3f} s")
    print(f"speedup {t_py / t_c:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
