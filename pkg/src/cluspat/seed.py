"""Seeds of geometric type and their mutation.

A seed couples an exchange matrix B, a tuple of tropical coefficient
monomials Y and the cluster-variable expansions X relative to a fixed root
cluster.  Mutation in direction k (0-based) rebuilds them as

    x'_k  = (yhat+ . prod_j x_j^[b_jk]+  +  yhat- . prod_j x_j^[-b_jk]+) / x_k
    y'_k  = y_k^-1,   y'_i = y_i . y_k^[b_ki]+ . (1 (+) y_k)^(-b_ki)
    b'_ij = -b_ij                      if i = k or j = k
          = b_ij + b_ik[-b_kj]+ + [b_ik]+ b_kj   otherwise

with [a]+ = max(a, 0).  The coefficient monomials yhat+ = y_k/(1 (+) y_k)
and yhat- = 1/(1 (+) y_k) are folded into the term y-exponents of the two
products, so the only division is by the plain variable expansion x_k.
That division must be exact; a failure is precisely a violation of the
Laurent phenomenon and raises LaurentViolationError, which lets the engine
double as a detector when fed non-cluster exchange data.

Seeds are immutable values and mutation is pure, hence safe for parallel
frontier expansion.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError, LaurentViolationError, \
    NotDivisibleError, NotSkewSymmetrizableError
from .laurent import LaurentPoly
from .semifield import trop_identity, trop_mul_pow, trop_one_plus


def _pos(a):
    return a if a > 0 else 0


@dataclass(frozen=True)
class ExchangeMatrix:
    """Square integer matrix with a certified skew-symmetrizer diagonal."""

    entries: tuple
    symmetrizer: tuple | None = None

    @classmethod
    def from_rows(cls, rows, certify=True):
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise NotSkewSymmetrizableError("matrix is not square")
        sym = find_symmetrizer(entries) if certify else None
        return cls(entries, sym)

    @property
    def n(self):
        return len(self.entries)

    def mutate(self, k):
        b = self.entries
        n = self.n
        if not 0 <= k < n:
            raise IndexError(f"direction {k} out of range for n={n}")
        new = tuple(
            tuple(-b[i][j] if (i == k or j == k)
                  else b[i][j] + b[i][k] * _pos(-b[k][j]) + _pos(b[i][k]) * b[k][j]
                  for j in range(n))
            for i in range(n))
        # the same diagonal certifies the mutated matrix
        return ExchangeMatrix(new, self.symmetrizer)

    def is_acyclic(self):
        """True when the digraph with an edge i -> j for b_ij > 0 has no cycle."""
        b = self.entries
        n = self.n
        color = [0] * n  # 0 unseen, 1 on stack, 2 done

        def visit(i):
            color[i] = 1
            for j in range(n):
                if b[i][j] > 0:
                    if color[j] == 1:
                        return False
                    if color[j] == 0 and not visit(j):
                        return False
            color[i] = 2
            return True

        return all(color[i] or visit(i) for i in range(n))


def find_symmetrizer(entries):
    """Least positive integer diagonal d with d_i b_ij = -d_j b_ji.

    Ratios d_j/d_i = -b_ij/b_ji are propagated along a spanning forest of
    the nonzero-entry graph with exact rational bookkeeping; every entry
    pair is then re-verified, which also catches inconsistent cycles.
    """
    n = len(entries)
    for i in range(n):
        if entries[i][i] != 0:
            raise NotSkewSymmetrizableError(
                f"nonzero diagonal entry at ({i + 1},{i + 1})",
                witness=(i, i))
    for i in range(n):
        for j in range(i + 1, n):
            bij, bji = entries[i][j], entries[j][i]
            if (bij == 0) != (bji == 0) or bij * bji > 0:
                raise NotSkewSymmetrizableError(
                    f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) have "
                    f"values {bij}, {bji}", witness=(i, j))

    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if entries[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(-entries[i][j], entries[j][i])
                    component.append(j)
                    stack.append(j)
        scale = lcm(*(d[i].denominator for i in component))
        values = [int(d[i] * scale) for i in component]
        shrink = gcd(*values)
        for i, v in zip(component, values):
            d[i] = v // shrink

    for i in range(n):
        for j in range(n):
            if d[i] * entries[i][j] != -d[j] * entries[j][i]:
                raise NotSkewSymmetrizableError(
                    f"no consistent diagonal: entries ({i + 1},{j + 1}) and "
                    f"({j + 1},{i + 1})", witness=(i, j))
    return tuple(d)


@dataclass(frozen=True)
class Seed:
    """Exchange matrix, coefficient tuple and root-relative expansions."""

    matrix: ExchangeMatrix
    coeffs: tuple
    cluster: tuple
    word: tuple = ()

    @property
    def n(self):
        return self.matrix.n

    @property
    def m(self):
        return len(self.coeffs[0]) if self.coeffs else 0

    @classmethod
    def root(cls, matrix, coeffs):
        """Root seed: expansions are the plain variables and the word is empty."""
        if isinstance(matrix, (list, tuple)) and not isinstance(
                matrix, ExchangeMatrix):
            matrix = ExchangeMatrix.from_rows(matrix)
        coeffs = tuple(tuple(y) for y in coeffs)
        if len(coeffs) != matrix.n:
            raise DimensionError(
                f"{len(coeffs)} coefficient monomials for rank {matrix.n}")
        m = len(coeffs[0]) if coeffs else 0
        if any(len(y) != m for y in coeffs):
            raise DimensionError("coefficient monomials of uneven lengths")
        n = matrix.n
        cluster = tuple(LaurentPoly.variable(n, m, i) for i in range(n))
        return cls(matrix, coeffs, cluster, ())

    @classmethod
    def principal(cls, matrix):
        """Principal coefficients: m = n, the coefficient tuple is the generators."""
        if isinstance(matrix, (list, tuple)) and not isinstance(
                matrix, ExchangeMatrix):
            matrix = ExchangeMatrix.from_rows(matrix)
        n = matrix.n
        coeffs = tuple(tuple(1 if j == i else 0 for j in range(n))
                       for i in range(n))
        return cls.root(matrix, coeffs)

    def with_unit_cluster(self):
        """Same matrix and coefficients, expansions reset to the variables."""
        n, m = self.n, self.m
        cluster = tuple(LaurentPoly.variable(n, m, i) for i in range(n))
        return Seed(self.matrix, self.coeffs, cluster, ())

    def exchange_numerator(self, k):
        """The two coefficient-weighted products whose sum x'_k * x_k equals."""
        n, m = self.n, self.m
        b = self.matrix.entries
        yk = self.coeffs[k]
        one_plus = trop_one_plus(yk)
        yhat_pos = trop_mul_pow(yk, one_plus, -1)
        yhat_neg = trop_mul_pow(trop_identity(m), one_plus, -1)
        pos = LaurentPoly.monomial(n, m, (0,) * n, yhat_pos)
        neg = LaurentPoly.monomial(n, m, (0,) * n, yhat_neg)
        for j in range(n):
            if b[j][k] > 0:
                pos = pos * self.cluster[j] ** b[j][k]
            elif b[j][k] < 0:
                neg = neg * self.cluster[j] ** (-b[j][k])
        return pos + neg

    def mutate(self, k):
        n = self.n
        if not 0 <= k < n:
            raise IndexError(f"direction {k} out of range for n={n}")
        numerator = self.exchange_numerator(k)
        try:
            new_xk = numerator.exact_div(self.cluster[k])
        except NotDivisibleError as exc:
            raise LaurentViolationError(
                f"mutation at word {self.word} in direction {k + 1} is not "
                f"Laurent: {exc}", word=self.word, direction=k) from exc

        cluster = tuple(new_xk if i == k else x
                        for i, x in enumerate(self.cluster))
        coeffs = mutate_coeffs(self.coeffs, self.matrix, k)
        matrix = self.matrix.mutate(k)
        if self.word and self.word[-1] == k:
            word = self.word[:-1]
        else:
            word = self.word + (k,)
        return Seed(matrix, coeffs, cluster, word)

    def key(self):
        """Structural identity of (B, Y, X); the word is deliberately excluded."""
        return (self.matrix.entries, self.coeffs,
                tuple(x.sort_key() for x in self.cluster))

    def text_dump(self):
        """Plain-text seed dump: B row-major, Y exponent vectors, X term lines."""
        lines = [f"word {format_word(self.word)}"]
        for row in self.matrix.entries:
            lines.append("B " + " ".join(str(v) for v in row))
        for y in self.coeffs:
            lines.append("Y " + (",".join(str(e) for e in y) or "-"))
        for i, x in enumerate(self.cluster):
            lines.append(f"X {i + 1}")
            lines.extend(x.term_lines())
        return "\n".join(lines)


def mutate_coeffs(coeffs, matrix, k):
    """Coefficient tuple mutation in the tropical semifield."""
    b = matrix.entries
    yk = coeffs[k]
    one_plus = trop_one_plus(yk)
    out = []
    for i, y in enumerate(coeffs):
        if i == k:
            out.append(trop_mul_pow(trop_identity(len(yk)), yk, -1))
        else:
            step = trop_mul_pow(y, yk, _pos(b[k][i]))
            out.append(trop_mul_pow(step, one_plus, -b[k][i]))
    return tuple(out)


def format_word(word):
    """Human form of a mutation word: 1-based, comma-separated, '-' for the root."""
    return ",".join(str(k + 1) for k in word) if word else "-"
