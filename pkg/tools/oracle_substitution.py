#!/usr/bin/env python3
"""Substitution-based oracle for rank-2 hand values, run before the engine build.

Everything here goes through sympy rational-function arithmetic: a mutation
step builds the exchange quotient and cancels it, so no Laurent-ring division
is involved.  The printed values are frozen into the test suite and the main
engine is required to reproduce them exactly.

Usage: python tools/oracle_substitution.py
"""

import sympy as sp

X1, X2, Y1, Y2 = sp.symbols("x1 x2 y1 y2", positive=True)


def vec_add(*vs):
    return tuple(sum(c) for c in zip(*vs))


def vec_scale(v, k):
    return tuple(k * c for c in v)


def trop_plus_one(v):
    # 1 (+) y  in the min-exponent semifield
    return tuple(min(0, c) for c in v)


def y_monomial(v, gens):
    out = sp.Integer(1)
    for g, e in zip(gens, v):
        out *= g ** e
    return out


def mutate(B, Y, X, k, ygens):
    """One seed mutation, done entirely with rational functions."""
    n = len(B)
    yk = Y[k]
    one_plus = trop_plus_one(yk)
    pos = sp.Integer(1)
    neg = sp.Integer(1)
    for j in range(n):
        pos *= X[j] ** max(B[j][k], 0)
        neg *= X[j] ** max(-B[j][k], 0)
    num = y_monomial(yk, ygens) * pos + neg
    den = y_monomial(one_plus, ygens) * X[k]
    newX = list(X)
    newX[k] = sp.cancel(num / den)

    newY = list(Y)
    for i in range(n):
        if i == k:
            newY[i] = vec_scale(yk, -1)
        else:
            newY[i] = vec_add(Y[i], vec_scale(yk, max(B[k][i], 0)),
                              vec_scale(one_plus, -B[k][i]))

    newB = [row[:] for row in B]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                newB[i][j] = -B[i][j]
            else:
                newB[i][j] = B[i][j] + B[i][k] * max(-B[k][j], 0) \
                    + max(B[i][k], 0) * B[k][j]
    return newB, newY, newX


def laurent_terms(expr, gens):
    """Exponent-vector -> coefficient map of a Laurent polynomial expr."""
    expr = sp.expand(sp.cancel(expr))
    terms = {}
    for term in sp.Add.make_args(expr):
        coeff = sp.Integer(1)
        exps = [0] * len(gens)
        for factor in sp.Mul.make_args(term):
            base, exp = factor.as_base_exp()
            if base in gens:
                exps[gens.index(base)] += int(exp)
            else:
                coeff *= factor
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + int(coeff)
    return {k: v for k, v in terms.items() if v != 0}


def d_vector(terms, n):
    mins = [min(k[i] for k in terms) for i in range(n)]
    return tuple(-m for m in mins)


def g_vector(terms, n, m):
    yfree = [(k, c) for k, c in terms.items() if all(e == 0 for e in k[n:])]
    assert len(yfree) == 1 and yfree[0][1] == 1, f"not pointed: {yfree}"
    return yfree[0][0][:n]


def main():
    gens = [X1, X2, Y1, Y2]
    B0 = [[0, 1], [-1, 0]]
    Y0 = [(1, 0), (0, 1)]
    X0 = [X1, X2]

    print("== rank-2 principal seed, one step in each direction ==")
    B1, Yw1, Xw1 = mutate(B0, Y0, X0, 0, [Y1, Y2])
    t1 = laurent_terms(Xw1[0], gens)
    print("mu_1 x'_1 terms:", sorted(t1.items()))
    print("mu_1 Y':", Yw1)
    print("mu_1 B':", B1)
    print("mu_1 d-vector of x'_1:", d_vector(t1, 2))
    print("mu_1 g-vector of x'_1:", g_vector(t1, 2, 2))

    B2, Yw2, Xw2 = mutate(B0, Y0, X0, 1, [Y1, Y2])
    t2 = laurent_terms(Xw2[1], gens)
    print("mu_2 x'_2 terms:", sorted(t2.items()))
    print("mu_2 Y':", Yw2)

    G1 = sp.Matrix([
        [g_vector(laurent_terms(Xw1[0], gens), 2, 2)[0],
         g_vector(laurent_terms(Xw1[1], gens), 2, 2)[0]],
        [g_vector(laurent_terms(Xw1[0], gens), 2, 2)[1],
         g_vector(laurent_terms(Xw1[1], gens), 2, 2)[1]],
    ])
    print("G at word (1) wrt root:", G1.tolist(), "det:", G1.det())

    print()
    print("== composition check at words root, (1), (1,2) ==")
    B12, Y12, X12 = mutate(B1, Yw1, Xw1, 1, [Y1, Y2])
    G12 = sp.Matrix([list(g_vector(laurent_terms(x, gens), 2, 2))
                     for x in X12]).T
    print("G at word (1,2) wrt root:", G12.tolist())

    # relative frame: restart at the word-(1) seed with fresh cluster symbols
    a1, a2 = sp.symbols("a1 a2", positive=True)
    relgens = [a1, a2, Y1, Y2]
    Br, Yr, Xr = mutate(B1, Yw1, [a1, a2], 1, [Y1, Y2])
    Grel = sp.Matrix([list(g_vector(laurent_terms(x, relgens), 2, 2))
                      for x in Xr]).T
    print("G at word (1,2) wrt word (1):", Grel.tolist())
    print("product equals direct:", (G1 * Grel) == G12)

    print()
    print("== exact-division counterexample ==")
    q, r = sp.div(X1 ** 2 + Y1, X1 + 1, X1)
    print("(x1^2 + y1) = (x1+1)*(%s) + (%s)" % (q, r))
    print("remainder nonzero:", sp.simplify(r) != 0)

    print()
    print("== coefficient-free pentagon spot values ==")
    Bc0 = [[0, 1], [-1, 0]]
    Yc0 = [(), ()]
    Bc1, Yc1, Xc1 = mutate(Bc0, Yc0, [X1, X2], 0, [])
    Bc12, Yc12, Xc12 = mutate(Bc1, Yc1, Xc1, 1, [])
    tc = laurent_terms(Xc12[1], [X1, X2])
    print("cf word (1,2) new variable terms:", sorted(tc.items()))
    print("cf word (1,2) d-vector:", d_vector(tc, 2))


if __name__ == "__main__":
    main()
