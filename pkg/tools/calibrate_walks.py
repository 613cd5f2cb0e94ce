#!/usr/bin/env python3
"""One-off calibration for the random mutation-walk suite (not shipped API).

Estimates, per RNG constant, the wall-clock cost of 100 random reduced
walks of length <= 8 over random skew-symmetrizable seeds (n <= 4,
|b_ij| <= 3, m <= 3, y-exponents in [-2, 2]), aborting any walk whose next
mutation would exceed a convolution-pair budget.
"""

import random
import sys
import time

import cluspat as cp


def random_seed_data(rng, n, m):
    d = [rng.randint(1, 3) for _ in range(n)]
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            while True:
                bij = rng.randint(-3, 3)
                num = -d[i] * bij
                if num % d[j] == 0 and abs(num // d[j]) <= 3:
                    B[i][j] = bij
                    B[j][i] = num // d[j]
                    break
    Y = tuple(tuple(rng.randint(-2, 2) for _ in range(m)) for _ in range(n))
    return B, Y


def random_walk(rng, n, length):
    word = []
    while len(word) < length:
        k = rng.randrange(n)
        if word and word[-1] == k:
            continue
        word.append(k)
    return word


def predicted_pairs(seed, k):
    B = seed.matrix.entries
    pos = neg = 1
    for j in range(seed.n):
        b = B[j][k]
        if b > 0:
            pos *= len(seed.cluster[j]) ** b
        elif b < 0:
            neg *= len(seed.cluster[j]) ** (-b)
    return pos + neg


def run(constant, budget_pairs):
    rng = random.Random(constant)
    t0 = time.time()
    worst = 0
    aborted = 0
    for _ in range(100):
        n = rng.randint(2, 4)
        m = rng.randint(0, 3)
        B, Y = random_seed_data(rng, n, m)
        s = cp.Seed.root(B, Y)
        for k in random_walk(rng, n, rng.randint(1, 8)):
            if predicted_pairs(s, k) > budget_pairs:
                aborted += 1
                break
            s = s.mutate(k)
            worst = max(worst, max(len(x) for x in s.cluster))
    return time.time() - t0, worst, aborted


def main():
    budget = int(sys.argv[1]) if len(sys.argv) > 1 else 2_000_000
    for constant in (0, 1, 2, 3, 7, 11, 20260810):
        dt, worst, aborted = run(constant, budget)
        print(f"constant={constant}: time={dt:.1f}s worst_expansion={worst} "
              f"aborted_walks={aborted}", flush=True)


if __name__ == "__main__":
    main()
