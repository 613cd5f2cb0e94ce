"""Finite-instance verification of pattern properties.

Every check walks an explored pattern (or an imported expansion table),
decides a single property exactly, and returns a VerificationReport: a
pass carries the exact number of checks performed, a fail carries at least
one minimal witness naming the vertex, the variable or monomial, and the
offending term or matrix.  No floating point is used anywhere; ranks and
determinants come from fraction-free integer elimination.

Checks are pure over an immutable pattern, so independent checks can run
concurrently; ``workers`` caps the thread pool used for the pairwise
positivity scan.
"""

from concurrent.futures import ThreadPoolExecutor
from collections import deque
from dataclasses import dataclass, field

from .errors import UnknownVariableError
from .pattern import ExpansionTable, tree_distance
from .seed import format_word


@dataclass(frozen=True)
class Witness:
    word: str
    subject: str
    detail: str


@dataclass
class VerificationReport:
    prop: str
    scope: dict
    passed: bool
    witnesses: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def json_summary(self):
        return {
            "property": self.prop,
            "verdict": "pass" if self.passed else "fail",
            "scope": self.scope,
            "stats": self.stats,
            "witnesses": [
                {"word": w.word, "subject": w.subject, "detail": w.detail}
                for w in self.witnesses
            ],
        }

    def tsv_lines(self):
        verdict = "pass" if self.passed else "fail"
        lines = ["property\tverdict\tword\tsubject\tdetail"]
        if self.witnesses:
            for w in self.witnesses:
                lines.append(
                    f"{self.prop}\t{verdict}\t{w.word}\t{w.subject}\t{w.detail}")
        else:
            checked = self.stats.get("checked", "")
            lines.append(f"{self.prop}\t{verdict}\t-\t-\tchecked={checked}")
        return lines


def _report(prop, scope, witnesses, stats):
    ok = not witnesses
    if ok and "checked" not in stats:
        raise AssertionError("a passing report must carry its check count")
    return VerificationReport(prop, scope, ok, witnesses, stats)


def _first_term(poly, predicate):
    for key, coeff in poly.sorted_terms():
        if predicate(key, coeff):
            xs = ",".join(str(e) for e in key[:poly.n])
            ys = ",".join(str(e) for e in key[poly.n:])
            return f"{coeff} x:{xs} y:{ys}"
    return "-"


# ---------------- positivity ----------------

def check_positive(pattern, pairs=None, workers=1):
    """All named expansions must have positive coefficients.

    For an explored pattern, ``pairs`` is an iterable of (t, ref) vertex
    words (default: every stored vertex against the root).  For an
    expansion table the supplied expansions are checked as they are, i.e.
    against the table's own reference frame.
    """
    if isinstance(pattern, ExpansionTable):
        return _check_positive_table(pattern)

    if pairs is None:
        pairs = [(w, ()) for w in pattern.words()]
    pairs = [(tuple(t), tuple(r)) for t, r in pairs]

    def scan(pair):
        t, ref = pair
        found = []
        seed = pattern.expansions_at(t, ref)
        for i, x in enumerate(seed.cluster):
            if not x.is_positive():
                found.append(Witness(
                    word=f"{format_word(t)} wrt {format_word(ref)}",
                    subject=f"variable {i + 1}",
                    detail=_first_term(x, lambda k, c: c <= 0)))
        return found

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, pairs))
    else:
        results = [scan(pair) for pair in pairs]
    witnesses = [w for found in results for w in found]
    return _report(
        "positive",
        {"pairs": len(pairs)},
        witnesses,
        {"checked": len(pairs) * pattern.n})


def _check_positive_table(table):
    witnesses = []
    checked = 0
    for name, cluster in table.vertices.items():
        for i, x in enumerate(cluster):
            checked += 1
            if not x.is_positive():
                witnesses.append(Witness(
                    word=f"{name} wrt {table.frame}",
                    subject=f"variable {i + 1}",
                    detail=_first_term(x, lambda k, c: c <= 0)))
    return _report("positive", {"vertices": len(table.vertices)},
                   witnesses, {"checked": checked})


# ---------------- d-vectors ----------------

def check_d_positive(pattern, variables=None, refs=None):
    """Every variable is in the reference cluster or has its d-vector in N^n.

    ``variables`` is an iterable of registry ids (default all), ``refs``
    an iterable of reference vertex words (default all stored vertices).
    """
    if variables is None:
        variables = range(len(pattern.registry))
    variables = list(variables)
    if refs is None:
        refs = pattern.words()
    refs = [tuple(r) for r in refs]

    witnesses = []
    checked = 0
    skipped = 0
    for ref in refs:
        member_ids = set(pattern.variable_ids_at(ref))
        for vid in variables:
            if vid in member_ids:
                skipped += 1
                continue
            checked += 1
            word, pos = pattern.registry.first_occurrence(vid)
            expansion = pattern.expansions_at(word, ref).cluster[pos]
            d = tuple(-e for e in expansion.min_x_exponents())
            if any(e < 0 for e in d):
                witnesses.append(Witness(
                    word=f"wrt {format_word(ref)}",
                    subject=f"variable {vid}",
                    detail=f"d-vector {d}"))
    return _report(
        "d-positive",
        {"variables": len(variables), "refs": len(refs)},
        witnesses,
        {"checked": checked, "in_cluster_skipped": skipped})


# ---------------- proper Laurent monomials ----------------

def _in_reference_monomials(pattern, monomial, ref_ids):
    ids = pattern.variable_ids_at(monomial.word)
    return all(ids[i] in ref_ids
               for i, a in enumerate(monomial.exponents) if a > 0)


def check_proper_laurent(pattern, ref, monomials):
    """Monomials outside the reference cluster expand into proper terms only.

    A monomial belongs to the reference cluster's monomials exactly when
    each variable it actually uses is a member variable (decided through
    the registry, not through expansion shapes); those are skipped.  Every
    other expansion must consist of terms with a negative x-exponent.
    """
    ref = tuple(ref)
    ref_ids = set(pattern.variable_ids_at(ref))
    witnesses = []
    checked = 0
    skipped = 0
    for monomial in monomials:
        if _in_reference_monomials(pattern, monomial, ref_ids):
            skipped += 1
            continue
        checked += 1
        expansion = pattern.monomial_expansion(monomial, ref)
        if not expansion.is_proper_sum():
            witnesses.append(Witness(
                word=f"{format_word(monomial.word)} wrt {format_word(ref)}",
                subject=monomial.label(),
                detail=_first_term(
                    expansion,
                    lambda k, c: all(e >= 0 for e in k[:pattern.n]))))
    return _report(
        "proper-laurent",
        {"ref": format_word(ref), "monomials": checked + skipped},
        witnesses,
        {"checked": checked, "in_reference_skipped": skipped})


# ---------------- linear independence ----------------

def check_linear_independence(pattern, ref, monomials):
    """Distinct monomials must expand to Z-linearly independent vectors.

    Expansions (relative to the reference) index an exact integer matrix
    over the union of their exponents; duplicates are removed first and
    reported in the stats.  Passes exactly when the fraction-free rank
    equals the number of distinct monomials.
    """
    ref = tuple(ref)
    seen = {}
    labels = []
    duplicates = 0
    for monomial in monomials:
        expansion = pattern.monomial_expansion(monomial, ref)
        if expansion in seen:
            duplicates += 1
            continue
        seen[expansion] = monomial
        labels.append(monomial.label())
    expansions = list(seen)

    columns = sorted({key for p in expansions for key, _ in p.items()})
    index = {key: j for j, key in enumerate(columns)}
    rows = []
    for p in expansions:
        row = [0] * len(columns)
        for key, coeff in p.items():
            row[index[key]] = coeff
        rows.append(row)
    rank = bareiss_rank(rows)

    witnesses = []
    if rank != len(expansions):
        relation = integer_kernel_vector(rows)
        involved = ", ".join(
            f"{c}*{labels[i]}" for i, c in enumerate(relation) if c)
        witnesses.append(Witness(
            word=f"wrt {format_word(ref)}",
            subject=f"{len(expansions)} distinct monomials, rank {rank}",
            detail=f"vanishing combination {involved}"))
    return _report(
        "lin-indep",
        {"ref": format_word(ref), "monomials": len(expansions) + duplicates},
        witnesses,
        {"checked": len(expansions), "duplicates": duplicates, "rank": rank})


# ---------------- g-vectors ----------------

def check_g_injective(pattern, ref, monomials):
    """Monomials with equal g-vectors must be equal elements.

    The same cluster monomial legitimately occurs at many tree vertices,
    so the check groups by g-vector and requires every group to consist of
    a single expansion.
    """
    ref = tuple(ref)
    groups = {}
    count = 0
    for monomial in monomials:
        count += 1
        g = pattern.g_of_monomial(monomial.word, monomial.exponents, ref)
        expansion = pattern.monomial_expansion(monomial)  # element identity
        groups.setdefault(g, {}).setdefault(expansion, monomial)
    witnesses = []
    for g, members in sorted(groups.items()):
        if len(members) > 1:
            labels = " vs ".join(m.label() for m in members.values())
            witnesses.append(Witness(
                word=f"wrt {format_word(ref)}",
                subject=labels,
                detail=f"shared g-vector {g}"))
    return _report(
        "g-injective",
        {"ref": format_word(ref), "monomials": count},
        witnesses,
        {"checked": count, "g_vectors": len(groups)})


def check_g_unimodular(pattern, ref=(), vertices=None):
    """det G must be +1 or -1 at every explored vertex."""
    ref = tuple(ref)
    if vertices is None:
        vertices = pattern.words()
    witnesses = []
    checked = 0
    for t in vertices:
        checked += 1
        det = bareiss_det(pattern.g_matrix(tuple(t), ref).entries)
        if det not in (1, -1):
            witnesses.append(Witness(
                word=f"{format_word(tuple(t))} wrt {format_word(ref)}",
                subject="G-matrix",
                detail=f"det {det}"))
    return _report(
        "g-unimodular",
        {"ref": format_word(ref), "vertices": checked},
        witnesses,
        {"checked": checked})


def check_g_composition(pattern, ref, t, t2):
    """G_{t2}^{ref} must equal G_t^{ref} times the t-relative G of t2."""
    ref, t, t2 = tuple(ref), tuple(t), tuple(t2)
    direct = pattern.g_matrix(t2, ref).entries
    left = pattern.g_matrix(t, ref).entries
    right = pattern.g_matrix(t2, t).entries
    product = mat_mul(left, right)
    witnesses = []
    if product != direct:
        witnesses.append(Witness(
            word=f"{format_word(t2)} via {format_word(t)} "
                 f"wrt {format_word(ref)}",
            subject="G-matrix composition",
            detail=f"product {product} direct {direct}"))
    return _report(
        "g-composition",
        {"ref": format_word(ref), "t": format_word(t), "t2": format_word(t2)},
        witnesses,
        {"checked": 1})


# ---------------- distance and subpatterns ----------------

def distance(pattern, vid, t):
    """Least tree distance from t to an explored cluster containing the variable.

    Exact when exploration closed (the class graph is then complete),
    otherwise an upper bound on the true distance.
    """
    t = tuple(t)
    pattern.seed_at(t)
    if not 0 <= vid < len(pattern.registry):
        raise UnknownVariableError(f"no variable with id {vid}")
    targets = {
        cid for cid, rep in enumerate(pattern.class_reps)
        if vid in pattern.variable_ids_at(rep)
    }
    start = pattern.class_of[t]
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        cid, dist = frontier.popleft()
        if cid in targets:
            return dist
        for nxt in pattern.class_adjacency[cid]:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, dist + 1))
    # the variable is registered, so some stored vertex contains it
    word, _ = pattern.registry.first_occurrence(vid)
    return tree_distance(t, word)


def maximal_positive_subpattern(pattern):
    """Greedy maximal vertex set whose members are pairwise positive.

    Vertices are taken in breadth-first order starting from the root; a
    vertex joins when its expansions relative to every current member, and
    theirs relative to it, are positive.  The result is maximal for this
    order, not claimed maximum.  For an expansion table (no mutation
    structure) membership means positivity of the supplied expansions.
    """
    if isinstance(pattern, ExpansionTable):
        return [name for name, cluster in pattern.vertices.items()
                if all(x.is_positive() for x in cluster)]

    def pair_ok(a, b):
        return all(x.is_positive()
                   for x in pattern.expansions_at(a, b).cluster)

    members = []
    for word in pattern.words():
        if all(pair_ok(word, v) and pair_ok(v, word) for v in members):
            members.append(word)
    return members


# ---------------- exact integer linear algebra ----------------

def integer_kernel_vector(rows):
    """A nonzero integer combination of the rows summing to zero.

    Exact rational elimination on the transposed system, cleared to
    coprime integers; this is the dependency certificate attached to a
    failing independence check.  Requires the rows to be dependent.
    """
    from fractions import Fraction
    from math import gcd

    count = len(rows)
    cols = len(rows[0]) if rows else 0
    m = [[Fraction(rows[r][c]) for r in range(count)] for c in range(cols)]
    pivots = {}
    rank = 0
    for col in range(count):
        piv = next((r for r in range(rank, cols) if m[r][col]), None)
        if piv is None:
            # free column: back-substitute a kernel vector with entry 1 here
            vec = [Fraction(0)] * count
            vec[col] = Fraction(1)
            for pcol, prow in pivots.items():
                vec[pcol] = -m[prow][col]
            scale = 1
            for v in vec:
                scale = scale * v.denominator // gcd(scale, v.denominator)
            ints = [int(v * scale) for v in vec]
            shrink = 0
            for v in ints:
                shrink = gcd(shrink, v)
            return [v // shrink for v in ints]
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(cols):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        pivots[col] = rank
        rank += 1
    raise ValueError("rows are linearly independent")


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free one-step elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    prev = 1
    pr = 0
    for pc in range(nc):
        piv = next((r for r in range(pr, nr) if m[r][pc]), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        pivot = m[pr][pc]
        for r in range(pr + 1, nr):
            factor = m[r][pc]
            for c in range(pc + 1, nc):
                m[r][c] = (m[r][c] * pivot - factor * m[pr][c]) // prev
            m[r][pc] = 0
        prev = pivot
        pr += 1
        if pr == nr:
            break
    return pr


def bareiss_det(entries):
    """Exact determinant of a square integer matrix, fraction-free."""
    m = [list(r) for r in entries]
    n = len(m)
    prev = 1
    sign = 1
    for p in range(n):
        piv = next((r for r in range(p, n) if m[r][p]), None)
        if piv is None:
            return 0
        if piv != p:
            m[p], m[piv] = m[piv], m[p]
            sign = -sign
        pivot = m[p][p]
        for r in range(p + 1, n):
            factor = m[r][p]
            for c in range(p + 1, n):
                m[r][c] = (m[r][c] * pivot - factor * m[p][c]) // prev
            m[r][p] = 0
        prev = pivot
    return sign * prev


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n))
