"""Exact sparse Laurent polynomials with integer coefficients.

Elements live in Z[y_1..y_m][x_1^{±1}, .., x_n^{±1}].  The x-exponents may
be negative; y-exponents are kept in Z as well because mutation
intermediates need them (nonnegativity of final y-exponents is a property
to be checked, not an invariant).  Coefficients are Python ints, so
arithmetic never wraps.

Representation: a dict mapping the combined exponent tuple
(x_1..x_n, y_1..y_m) to a nonzero coefficient; the zero polynomial is the
empty dict.  Normalized structural equality of these maps is the one
notion of equality used everywhere (variable registry, seed
deduplication).

The term order used by exact division and serialization is graded
lexicographic on the combined tuple, fixed once so that remainders in
error reports and emitted files are reproducible.
"""

from . import _kernels as _kern
from .errors import DimensionError, NotDivisibleError, SpecializationError, \
    NotPointedError

from heapq import heapify, heappop, heappush


def _grlex(key):
    return (sum(key), key)


def _neg_grlex(key):
    # heapq is a min-heap; this inverts the graded-lex order
    return (-sum(key), tuple(-e for e in key))


class LaurentPoly:
    """Immutable sparse Laurent polynomial in n x-variables and m y-generators."""

    __slots__ = ("n", "m", "_terms", "_hash", "_skey")

    def __init__(self, n, m, terms):
        self.n = n
        self.m = m
        self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None
        self._skey = None

    @classmethod
    def _wrap(cls, n, m, terms):
        # internal fast path: terms already normalized, ownership transferred
        p = cls.__new__(cls)
        p.n = n
        p.m = m
        p._terms = terms
        p._hash = None
        p._skey = None
        return p

    # ---------------- constructors ----------------

    @classmethod
    def zero(cls, n, m):
        return cls._wrap(n, m, {})

    @classmethod
    def one(cls, n, m):
        return cls._wrap(n, m, {(0,) * (n + m): 1})

    @classmethod
    def variable(cls, n, m, i):
        """The i-th cluster variable as a monomial (0-based)."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        key = tuple(1 if j == i else 0 for j in range(n + m))
        return cls._wrap(n, m, {key: 1})

    @classmethod
    def monomial(cls, n, m, xpart, ypart=None, coeff=1):
        xpart = tuple(xpart)
        ypart = (0,) * m if ypart is None else tuple(ypart)
        if len(xpart) != n or len(ypart) != m:
            raise DimensionError(
                f"monomial parts of lengths {len(xpart)},{len(ypart)} "
                f"in ring ({n},{m})")
        if coeff == 0:
            return cls.zero(n, m)
        return cls._wrap(n, m, {xpart + ypart: coeff})

    @classmethod
    def from_terms(cls, n, m, items):
        """Build from (xpart, ypart, coeff) triples, merging duplicates."""
        terms = {}
        for xpart, ypart, coeff in items:
            xpart, ypart = tuple(xpart), tuple(ypart)
            if len(xpart) != n or len(ypart) != m:
                raise DimensionError(
                    f"term of lengths {len(xpart)},{len(ypart)} "
                    f"in ring ({n},{m})")
            key = xpart + ypart
            c = terms.get(key, 0) + coeff
            if c:
                terms[key] = c
            elif key in terms:
                del terms[key]
        return cls._wrap(n, m, terms)

    # ---------------- basic queries ----------------

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        """Terms as (key, coeff) pairs, leading term first."""
        return sorted(self._terms.items(),
                      key=lambda kv: _grlex(kv[0]), reverse=True)

    def xpart(self, key):
        return key[:self.n]

    def ypart(self, key):
        return key[self.n:]

    def sort_key(self):
        """Canonical hashable form; used for deduplication orderings."""
        if self._skey is None:
            self._skey = tuple(sorted(self._terms.items()))
        return self._skey

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) \
            and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.m,
                               frozenset(self._terms.items())))
        return self._hash

    # ---------------- ring operations ----------------

    def _check_ring(self, other):
        if self.n != other.n or self.m != other.m:
            raise DimensionError(
                f"rings ({self.n},{self.m}) and ({other.n},{other.m})")

    def __add__(self, other):
        self._check_ring(other)
        return LaurentPoly._wrap(
            self.n, self.m, _kern.add_terms(self._terms, other._terms))

    def __neg__(self):
        return LaurentPoly._wrap(
            self.n, self.m, _kern.scale_terms(self._terms, -1))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_ring(other)
        return LaurentPoly._wrap(
            self.n, self.m, _kern.mul_terms(self._terms, other._terms))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {k!r}")
        result = {(0,) * (self.n + self.m): 1}
        base = self._terms
        while k:
            if k & 1:
                result = _kern.mul_terms(result, base)
            k >>= 1
            if k:
                base = _kern.mul_terms(base, base)
        return LaurentPoly._wrap(self.n, self.m, result)

    def scaled(self, c):
        if c == 0:
            return LaurentPoly.zero(self.n, self.m)
        return LaurentPoly._wrap(self.n, self.m,
                                 _kern.scale_terms(self._terms, c))

    def exact_div(self, q):
        """The r with r*q == self, if one exists in the Laurent ring.

        Factors the minimal monomial out of both operands (a monomial is
        always invertible here), then runs ordinary polynomial division
        under the graded-lex order and requires a zero remainder.  A
        nonzero remainder raises NotDivisibleError carrying the term where
        reduction got stuck.
        """
        self._check_ring(q)
        if not q._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return LaurentPoly.zero(self.n, self.m)

        shift_p = _kern.min_exponents(self._terms)
        shift_q = _kern.min_exponents(q._terms)
        back = tuple(a - b for a, b in zip(shift_p, shift_q))

        qn = _kern.shift_terms(q._terms, tuple(-e for e in shift_q))
        if len(qn) == 1:
            ((qkey, qc),) = qn.items()  # qkey is all zeros
            quot = {}
            for k, c in self._terms.items():
                t, rem = divmod(c, qc)
                if rem:
                    raise NotDivisibleError(
                        f"coefficient {c} not divisible by {qc}",
                        remainder_term=(c, k))
                quot[_kern.tuple_add(k, tuple(-e for e in shift_q))] = t
            return LaurentPoly._wrap(self.n, self.m, quot)

        r = _kern.shift_terms(self._terms, tuple(-e for e in shift_p))
        qlead = max(qn, key=_grlex)
        qlc = qn[qlead]
        heap = [(_neg_grlex(k), k) for k in r]
        heapify(heap)
        quot = {}
        while r:
            while True:
                _, k = heappop(heap)
                if k in r:
                    break
            c = r[k]
            texp = tuple(a - b for a, b in zip(k, qlead))
            if any(e < 0 for e in texp):
                raise NotDivisibleError(
                    "leading monomial not divisible",
                    remainder_term=(c, _kern.tuple_add(k, shift_p)))
            t, rem = divmod(c, qlc)
            if rem:
                raise NotDivisibleError(
                    f"leading coefficient {c} not divisible by {qlc}",
                    remainder_term=(c, _kern.tuple_add(k, shift_p)))
            quot[texp] = t
            for touched in _kern.sub_scaled_inplace(r, qn, t, texp):
                heappush(heap, (_neg_grlex(touched), touched))
        return LaurentPoly._wrap(self.n, self.m,
                                 _kern.shift_terms(quot, back))

    # ---------------- structure queries ----------------

    def at_y_zero(self):
        """Evaluate every y-generator at zero.

        Defined only when all y-exponents are nonnegative; keeps exactly
        the terms whose y-part vanishes.
        """
        n = self.n
        kept = {}
        for key, c in self._terms.items():
            ytail = key[n:]
            if any(e < 0 for e in ytail):
                raise SpecializationError(
                    f"term with negative y-exponent {ytail} cannot be "
                    f"evaluated at y = 0")
            if not any(ytail):
                kept[key] = c
        return LaurentPoly._wrap(self.n, self.m, kept)

    def min_x_exponents(self):
        """Componentwise minimum of x-exponents over all terms."""
        if not self._terms:
            raise ValueError("min_x_exponents of the zero polynomial")
        return _kern.min_exponents(self._terms)[:self.n]

    def is_positive(self):
        """True when every stored coefficient is positive (vacuous on 0)."""
        return all(c > 0 for c in self._terms.values())

    def pointed_exponent(self):
        """x-exponent of the unique coefficient-one y-free term.

        Raises NotPointedError when there is no y-free term, more than
        one, or its coefficient differs from 1.
        """
        n = self.n
        found = None
        for key, c in self._terms.items():
            if not any(key[n:]):
                if found is not None:
                    raise NotPointedError("more than one y-free term")
                found = (key, c)
        if found is None:
            raise NotPointedError("no y-free term")
        key, c = found
        if c != 1:
            raise NotPointedError(f"y-free coefficient is {c}, not 1")
        return key[:n]

    def is_pointed(self):
        try:
            self.pointed_exponent()
        except NotPointedError:
            return False
        return True

    def is_proper_sum(self):
        """True when every term has a negative x-exponent somewhere."""
        n = self.n
        return all(any(e < 0 for e in key[:n])
                   for key in self._terms)

    def y_exponents_nonnegative(self):
        n = self.n
        return all(all(e >= 0 for e in key[n:]) for key in self._terms)

    # ---------------- serialization ----------------

    def term_lines(self):
        """One line per term: ``coeff x:e1,..,en y:f1,..,fm``, leading first."""
        n = self.n
        out = []
        for key, c in self.sorted_terms():
            xs = ",".join(str(e) for e in key[:n])
            ys = ",".join(str(e) for e in key[n:])
            out.append(f"{c} x:{xs} y:{ys}")
        return out

    @classmethod
    def from_term_lines(cls, n, m, lines):
        items = []
        for line in lines:
            items.append(parse_term_line(line, n, m))
        return cls.from_terms(n, m, items)

    def __str__(self):
        if not self._terms:
            return "0"

        def fmt(key, c):
            parts = []
            for i, e in enumerate(key[:self.n]):
                if e:
                    parts.append(f"x{i + 1}" + (f"^{e}" if e != 1 else ""))
            for i, e in enumerate(key[self.n:]):
                if e:
                    parts.append(f"y{i + 1}" + (f"^{e}" if e != 1 else ""))
            body = "*".join(parts)
            if not body:
                return str(c)
            if c == 1:
                return body
            if c == -1:
                return "-" + body
            return f"{c}*{body}"

        return " + ".join(fmt(k, c) for k, c in self.sorted_terms())

    def __repr__(self):
        return f"LaurentPoly({self.n}, {self.m}, {self})"


def parse_term_line(line, n, m):
    """Parse ``coeff x:e1,..,en y:f1,..,fm`` into (xpart, ypart, coeff)."""
    fields = line.split()
    if len(fields) != 3 or not fields[1].startswith("x:") \
            or not fields[2].startswith("y:"):
        raise ValueError(f"malformed term line: {line!r}")
    coeff = int(fields[0])
    xs = fields[1][2:]
    ys = fields[2][2:]
    xpart = tuple(int(t) for t in xs.split(",")) if xs else ()
    ypart = tuple(int(t) for t in ys.split(",")) if ys else ()
    if len(xpart) != n or len(ypart) != m:
        raise ValueError(
            f"term line has {len(xpart)} x- and {len(ypart)} y-exponents, "
            f"expected {n} and {m}: {line!r}")
    return xpart, ypart, coeff
