#!/usr/bin/env python3
"""Substitution oracle for d-vectors of the doubled 3-cycle quiver, run
before the engine build.

For a few (variable, reference-cluster) pairs at small tree distance, the
variable's expansion relative to the reference cluster is computed by chain
substitution: restart at the reference seed with fresh symbols and walk the
tree path.  Printed d-vectors are frozen into the test suite.

Usage: python tools/oracle_markov_spots.py
"""

import sympy as sp

from oracle_enumeration import mutate_cf

B0 = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


def walk(B, X, word):
    for k in word:
        B, X = mutate_cf(B, X, k)
    return B, X


def tree_path(frame_word, target_word):
    common = 0
    for a, b in zip(frame_word, target_word):
        if a != b:
            break
        common += 1
    return tuple(reversed(frame_word[common:])) + target_word[common:]


def d_vector(expr, gens):
    expr = sp.expand(sp.cancel(expr))
    mins = None
    for term in sp.Add.make_args(expr):
        pows = term.as_powers_dict()
        exps = [int(pows.get(g, 0)) for g in gens]
        mins = exps if mins is None else [min(a, b) for a, b in zip(mins, exps)]
    return tuple(-m for m in mins)


def main():
    x1, x2, x3 = sp.symbols("x1 x2 x3", positive=True)
    f1, f2, f3 = sp.symbols("f1 f2 f3", positive=True)
    root_gens = [x1, x2, x3]
    frame_gens = [f1, f2, f3]

    # (target word, variable position, frame word), all 0-based
    pairs = [
        ((0,), 0, (1,)),
        ((2,), 2, (0, 1)),
        ((0, 1, 0), 0, (2,)),
    ]
    for target, pos, frame in pairs:
        B_frame, _ = walk(B0, root_gens, frame)
        path = tree_path(frame, target)
        _, X_rel = walk(B_frame, frame_gens, path)
        d = d_vector(X_rel[pos], frame_gens)
        print(f"variable at word {target} position {pos}, frame {frame}: "
              f"d-vector {d}")


if __name__ == "__main__":
    main()
