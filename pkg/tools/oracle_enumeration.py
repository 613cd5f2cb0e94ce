#!/usr/bin/env python3
"""Enumeration oracle for finite-type closure counts, run before the engine build.

Explores coefficient-free rank-2 and rank-3 patterns breadth-first with sympy
rational functions, deduplicating clusters as *sets* of canonicalized
expressions.  Prints cluster and variable counts that the engine's exploration
must reproduce, plus a growth probe for the doubled 3-cycle quiver showing it
does not close at small depth.

Usage: python tools/oracle_enumeration.py
"""

from collections import deque

import sympy as sp


def mutate_matrix(B, k):
    n = len(B)
    out = [row[:] for row in B]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -B[i][j]
            else:
                out[i][j] = B[i][j] + B[i][k] * max(-B[k][j], 0) \
                    + max(B[i][k], 0) * B[k][j]
    return out


def mutate_cf(B, X, k):
    """Coefficient-free mutation via rational-function cancellation."""
    n = len(B)
    pos = sp.Integer(1)
    neg = sp.Integer(1)
    for j in range(n):
        pos *= X[j] ** max(B[j][k], 0)
        neg *= X[j] ** max(-B[j][k], 0)
    newX = list(X)
    newX[k] = sp.cancel((pos + neg) / X[k])
    return mutate_matrix(B, k), newX


def canon(expr):
    return sp.srepr(sp.cancel(expr))


def explore(B0, X0, max_depth):
    n = len(B0)
    root = (B0, list(X0))
    seen_clusters = set()
    seen_vars = set()
    queue = deque([(root, (), 0)])
    seen_clusters.add(frozenset(canon(x) for x in X0))
    seen_vars.update(canon(x) for x in X0)
    closed = True
    while queue:
        (B, X), word, depth = queue.popleft()
        if depth >= max_depth:
            closed = False
            continue
        for k in range(n):
            if word and word[-1] == k:
                continue
            Bn, Xn = mutate_cf(B, X, k)
            key = frozenset(canon(x) for x in Xn)
            for x in Xn:
                seen_vars.add(canon(x))
            if key not in seen_clusters:
                seen_clusters.add(key)
                queue.append(((Bn, Xn), word + (k,), depth + 1))
    return len(seen_clusters), len(seen_vars), closed


def main():
    x1, x2, x3 = sp.symbols("x1 x2 x3", positive=True)

    clusters, variables, closed = explore([[0, 1], [-1, 0]], [x1, x2], 10)
    print(f"rank-2 (single arrow): clusters={clusters} variables={variables} "
          f"closed={closed}")

    clusters, variables, closed = explore(
        [[0, 1, 0], [-1, 0, 1], [0, -1, 0]], [x1, x2, x3], 16)
    print(f"rank-3 (path quiver): clusters={clusters} variables={variables} "
          f"closed={closed}")

    markov = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
    for depth in (2, 3):
        clusters, variables, closed = explore(markov, [x1, x2, x3], depth)
        print(f"doubled 3-cycle, depth {depth}: clusters={clusters} "
              f"variables={variables} closed={closed}")


if __name__ == "__main__":
    main()
