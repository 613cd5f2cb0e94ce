#!/usr/bin/env python3
"""Benchmark: compiled kernels against the pure-Python fallback.

Runs the same workloads in two fresh interpreters, one with CLUSPAT_PURE=1
and one without, and prints a timing table.  Workloads:

  mul        repeated convolution of mid-sized expansions
  explore    depth-5 exploration of the doubled 3-cycle quiver
  pairwise   positivity of its cluster pairs at tree distance <= 4

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import time

MARKOV = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


def workload_mul():
    import cluspat as cp
    seed = cp.Seed.root(MARKOV, [(), (), ()])
    for k in (0, 1, 2, 0, 1):
        seed = seed.mutate(k)
    big = seed.cluster[0]
    t0 = time.perf_counter()
    acc = big
    for _ in range(6):
        acc = acc * big
    return time.perf_counter() - t0, len(acc)


def workload_explore():
    import cluspat as cp
    t0 = time.perf_counter()
    pattern = cp.explore(cp.Seed.root(MARKOV, [(), (), ()]), max_depth=5)
    return time.perf_counter() - t0, len(pattern.vertices)


def workload_pairwise():
    import cluspat as cp
    from cluspat.pattern import tree_distance
    from cluspat.verify import check_positive
    pattern = cp.explore(cp.Seed.root(MARKOV, [(), (), ()]), max_depth=5)
    words = pattern.words()
    pairs = [(t, r) for t in words for r in words
             if tree_distance(r, t) <= 4]
    t0 = time.perf_counter()
    report = check_positive(pattern, pairs)
    assert report.passed
    return time.perf_counter() - t0, len(pairs)


WORKLOADS = {
    "mul": workload_mul,
    "explore": workload_explore,
    "pairwise": workload_pairwise,
}


def run_child(pure, repeat):
    env = dict(os.environ)
    if pure:
        env["CLUSPAT_PURE"] = "1"
    else:
        env.pop("CLUSPAT_PURE", None)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--child",
         "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def child_main(repeat):
    import cluspat
    results = {"backend": cluspat.BACKEND}
    for name, fn in WORKLOADS.items():
        best = None
        size = None
        for _ in range(repeat):
            dt, size = fn()
            best = dt if best is None else min(best, dt)
        results[name] = {"seconds": best, "size": size}
    print(json.dumps(results))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per workload, best time kept")
    parser.add_argument("--child", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        child_main(args.repeat)
        return

    fast = run_child(pure=False, repeat=args.repeat)
    slow = run_child(pure=True, repeat=args.repeat)
    print(f"{'workload':<10} {slow['backend']:>12} {fast['backend']:>12} "
          f"{'speedup':>9}")
    for name in WORKLOADS:
        ps = slow[name]["seconds"]
        cs = fast[name]["seconds"]
        ratio = ps / cs if cs else float("inf")
        print(f"{name:<10} {ps:>11.3f}s {cs:>11.3f}s {ratio:>8.2f}x")
    if fast["backend"] == slow["backend"]:
        print("note: compiled extension not available; both runs used the "
              "pure kernels")


if __name__ == "__main__":
    main()
