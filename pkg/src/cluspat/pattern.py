"""Bounded exploration of the mutation tree.

Vertices of the n-regular tree are named by reduced mutation words
(0-based direction tuples with no immediate repeats).  Exploration walks
breadth-first, registers every discovered seed, and only keeps expanding
from the first representative of each unlabeled seed class; two seeds are
in the same class when their (B, Y, X) triples agree up to a simultaneous
permutation of positions.  Mutation commutes with relabeling, so pruning
duplicate classes loses no clusters, no variables and no class adjacency.

Expansions relative to a non-root cluster are obtained by re-running
mutation from that cluster with a fresh unit cluster, never by inverting
polynomial maps; the walks are memoized per reference vertex.  The shared
caches and the variable registry only ever insert-if-absent (plain dict
``setdefault``), so read-mostly concurrent use is safe.
"""

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import NotExploredError, NotPointedError, UnknownVariableError, \
    UnreducedWordError
from .laurent import LaurentPoly, parse_term_line
from .seed import format_word

_CANONICAL_MAX_RANK = 8  # full orbit canonicalization is n! in the worst case


@dataclass(frozen=True)
class ExploreBudget:
    max_depth: int = 8
    max_vertices: int = 20000


@dataclass(frozen=True)
class DMatrix:
    """Denominator vectors of a cluster, columnwise, with both vertices recorded."""

    entries: tuple
    at: tuple
    ref: tuple

    def column(self, j):
        return tuple(row[j] for row in self.entries)


@dataclass(frozen=True)
class GMatrix:
    """Pointed leading exponents of a cluster, columnwise."""

    entries: tuple
    at: tuple
    ref: tuple

    def column(self, j):
        return tuple(row[j] for row in self.entries)


class VariableRegistry:
    """Bijection between root-relative expansions and small integer ids."""

    def __init__(self):
        self._ids = {}
        self._polys = []
        self._first = []

    def add(self, poly, word, position):
        vid = self._ids.setdefault(poly, len(self._polys))
        if vid == len(self._polys):
            self._polys.append(poly)
            self._first.append((word, position))
        return vid

    def id_of(self, poly):
        vid = self._ids.get(poly)
        if vid is None:
            raise UnknownVariableError("expansion not registered")
        return vid

    def poly(self, vid):
        if not 0 <= vid < len(self._polys):
            raise UnknownVariableError(f"no variable with id {vid}")
        return self._polys[vid]

    def first_occurrence(self, vid):
        if not 0 <= vid < len(self._first):
            raise UnknownVariableError(f"no variable with id {vid}")
        return self._first[vid]

    def __len__(self):
        return len(self._polys)

    def __contains__(self, poly):
        return poly in self._ids


def check_word(word, n, require_reduced=True):
    word = tuple(word)
    for k in word:
        if not isinstance(k, int) or not 0 <= k < n:
            raise UnreducedWordError(f"direction {k} out of range for n={n}")
    if require_reduced:
        for a, b in zip(word, word[1:]):
            if a == b:
                raise UnreducedWordError(
                    f"word {format_word(word)} repeats direction {a + 1}")
    return word


def tree_path(u, w):
    """Reduced word from vertex u to vertex w in the mutation tree."""
    common = 0
    for a, b in zip(u, w):
        if a != b:
            break
        common += 1
    return tuple(reversed(u[common:])) + tuple(w[common:])


def tree_distance(u, w):
    return len(tree_path(u, w))


def seed_class_key(seed):
    """Canonical key of the unlabeled seed class.

    For n <= 8 the key is the lexicographically minimal permuted
    (X, Y, B) triple; candidate permutations are cut down to those sorting
    the (expansion, coefficient) pairs, which is exact because those pairs
    lead the key.  Above that rank only labeled equality is used.
    """
    n = seed.n
    xkeys = tuple(x.sort_key() for x in seed.cluster)
    ykeys = seed.coeffs
    b = seed.matrix.entries
    if n > _CANONICAL_MAX_RANK:
        return ("labeled", xkeys, ykeys, b)

    order = sorted(range(n), key=lambda i: (xkeys[i], ykeys[i]))
    runs = [list(g) for _, g in itertools.groupby(
        order, key=lambda i: (xkeys[i], ykeys[i]))]
    best = None
    for parts in itertools.product(*(itertools.permutations(r) for r in runs)):
        perm = [i for part in parts for i in part]
        key = (tuple(xkeys[p] for p in perm),
               tuple(ykeys[p] for p in perm),
               tuple(tuple(b[p][q] for q in perm) for p in perm))
        if best is None or key < best:
            best = key
    return best


class ExploredPattern:
    """Deduplicated finite portion of the mutation tree around a root seed."""

    def __init__(self, root, budget=None):
        if root.word != ():
            raise ValueError("root seed must carry the empty word")
        self.root = root
        self.budget = budget or ExploreBudget()
        self.vertices = {}
        self.registry = VariableRegistry()
        self.canonical_index = {}
        self.class_of = {}
        self.class_reps = []
        self.class_adjacency = {}
        self.closed = False
        self._rep_expanded = []
        self._relative = {}
        self._dmat = {}
        self._gmat = {}
        self._store((), root, None)

    # ---------------- construction ----------------

    def _store(self, word, seed, parent_word):
        self.vertices[word] = seed
        for i, x in enumerate(seed.cluster):
            self.registry.add(x, word, i)
        key = seed_class_key(seed)
        rep = self.canonical_index.setdefault(key, word)
        if rep == word:
            cid = len(self.class_reps)
            self.class_reps.append(word)
            self._rep_expanded.append(False)
            self.class_adjacency[cid] = set()
            is_new = True
        else:
            cid = self.class_of[rep]
            is_new = False
        self.class_of[word] = cid
        if parent_word is not None:
            pid = self.class_of[parent_word]
            self.class_adjacency[pid].add(cid)
            self.class_adjacency[cid].add(pid)
        return cid, is_new

    @property
    def n(self):
        return self.root.n

    @property
    def m(self):
        return self.root.m

    # ---------------- lookups ----------------

    def seed_at(self, word):
        word = check_word(word, self.n)
        seed = self.vertices.get(word)
        if seed is None:
            raise NotExploredError(
                f"vertex {format_word(word)} is outside the explored region")
        return seed

    def words(self):
        return tuple(self.vertices)

    def variable_ids_at(self, word):
        seed = self.seed_at(word)
        return tuple(self.registry.id_of(x) for x in seed.cluster)

    # ---------------- relative expansions ----------------

    def relative_seed(self, frame, path=()):
        """Seed at the vertex frame+path with expansions relative to X_frame."""
        frame = tuple(frame)
        path = tuple(path)
        cache = self._relative.setdefault(frame, {})
        seed = cache.get(path)
        if seed is not None:
            return seed
        if path:
            seed = self.relative_seed(frame, path[:-1]).mutate(path[-1])
        else:
            seed = self.seed_at(frame).with_unit_cluster()
        return cache.setdefault(path, seed)

    def expansions_at(self, t, ref=()):
        """Seed whose cluster holds the expansions of X_t relative to X_ref."""
        t = check_word(t, self.n)
        ref = check_word(ref, self.n)
        if not ref:
            return self.seed_at(t)
        self.seed_at(t)  # membership check
        return self.relative_seed(ref, tree_path(ref, t))

    # ---------------- matrices ----------------

    def d_matrix(self, t, ref=()):
        t, ref = tuple(t), tuple(ref)
        cached = self._dmat.get((t, ref))
        if cached is not None:
            return cached
        seed = self.expansions_at(t, ref)
        n = self.n
        cols = [tuple(-e for e in x.min_x_exponents()) for x in seed.cluster]
        entries = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return self._dmat.setdefault((t, ref), DMatrix(entries, t, ref))

    def g_matrix(self, t, ref=()):
        t, ref = tuple(t), tuple(ref)
        cached = self._gmat.get((t, ref))
        if cached is not None:
            return cached
        seed = self.expansions_at(t, ref)
        n = self.n
        cols = []
        for i, x in enumerate(seed.cluster):
            try:
                cols.append(x.pointed_exponent())
            except NotPointedError as exc:
                raise NotPointedError(
                    f"variable {i + 1} at vertex {format_word(t)} relative "
                    f"to {format_word(ref)}: {exc}",
                    word=t, position=i) from exc
        entries = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return self._gmat.setdefault((t, ref), GMatrix(entries, t, ref))

    def g_of_monomial(self, t, exponents, ref=()):
        exponents = tuple(exponents)
        if len(exponents) != self.n or any(
                not isinstance(a, int) or a < 0 for a in exponents):
            raise ValueError(
                f"monomial exponents must lie in N^{self.n}: {exponents}")
        g = self.g_matrix(t, ref)
        return tuple(sum(row[j] * exponents[j] for j in range(self.n))
                     for row in g.entries)

    # ---------------- derived patterns and reports ----------------

    def rebase(self, frame):
        """The same explored word set re-rooted at ``frame``."""
        frame = tuple(frame)
        self.seed_at(frame)
        new_words = sorted((tree_path(frame, w) for w in self.vertices),
                           key=lambda w: (len(w), w))
        pattern = ExploredPattern(self.relative_seed(frame), self.budget)
        for word in new_words[1:]:
            seed = self.relative_seed(frame, word)
            pattern._store(word, seed, word[:-1])
        pattern.closed = self.closed
        return pattern

    def finite_type_report(self):
        return {
            "closed": self.closed,
            "cluster_count": len(self.class_reps),
            "variable_count": len(self.registry),
        }

    def monomials_up_to_degree(self, degree):
        """Every cluster monomial of total degree <= degree, one cluster per class."""
        out = []
        for rep in self.class_reps:
            for a in _exponents_up_to(self.n, degree):
                out.append(ClusterMonomial(rep, a))
        return out

    def monomial_expansion(self, monomial, ref=()):
        """Expansion of the monomial relative to X_ref."""
        seed = self.expansions_at(monomial.word, ref)
        out = LaurentPoly.one(self.n, self.m)
        for x, a in zip(seed.cluster, monomial.exponents):
            if a:
                out = out * x ** a
        return out

    def to_expansion_table(self):
        table = ExpansionTable(self.n, self.m, frame="-")
        for word, seed in self.vertices.items():
            table.vertices[format_word(word)] = seed.cluster
        return table

    def dump_lines(self):
        """Deterministic TSV dump: word, variable ids, D- and G-matrix."""
        lines = ["word\tvariables\td_matrix\tg_matrix"]
        for word in sorted(self.vertices, key=lambda w: (len(w), w)):
            ids = ",".join(str(v) for v in self.variable_ids_at(word))
            d = _flatten(self.d_matrix(word).entries)
            try:
                g = _flatten(self.g_matrix(word).entries)
            except NotPointedError:
                g = "-"
            lines.append(f"{format_word(word)}\t{ids}\t{d}\t{g}")
        return lines


def _flatten(entries):
    return ";".join(",".join(str(v) for v in row) for row in entries)


def _exponents_up_to(n, degree):
    rng = range(degree + 1)
    for a in itertools.product(rng, repeat=n):
        if sum(a) <= degree:
            yield a


@dataclass(frozen=True)
class ClusterMonomial:
    """A product of same-cluster variables with nonnegative exponents."""

    word: tuple
    exponents: tuple

    def __post_init__(self):
        if any(not isinstance(a, int) or a < 0 for a in self.exponents):
            raise ValueError(
                f"cluster monomial needs exponents in N^n: {self.exponents}")

    def degree(self):
        return sum(self.exponents)

    def label(self):
        return f"{format_word(self.word)}^({','.join(map(str, self.exponents))})"


def explore(root, budget=None, max_depth=None, max_vertices=None):
    """Breadth-first exploration from a root seed up to the budget.

    Stops either at closure (no vertex can reveal a new seed class) or when
    the depth or vertex budget is exhausted; exhaustion is reported through
    ``closed=False``, never as an error.
    """
    if budget is None:
        budget = ExploreBudget()
    if max_depth is not None or max_vertices is not None:
        budget = ExploreBudget(
            max_depth if max_depth is not None else budget.max_depth,
            max_vertices if max_vertices is not None else budget.max_vertices)
    if root.word != () or root.cluster != root.with_unit_cluster().cluster:
        raise ValueError(
            "explore needs a root seed (empty word, unit cluster); "
            "use Seed.root or with_unit_cluster()")

    pattern = ExploredPattern(root, budget)
    queue = deque([()])
    cap_hit = False
    while queue and not cap_hit:
        word = queue.popleft()
        if len(word) >= budget.max_depth:
            continue  # expansion suppressed; closure stays unclaimed
        seed = pattern.vertices[word]
        for k in range(pattern.n):
            if word and word[-1] == k:
                continue
            if len(pattern.vertices) >= budget.max_vertices:
                cap_hit = True
                break
            child = seed.mutate(k)
            _, is_new = pattern._store(child.word, child, word)
            if is_new:
                queue.append(child.word)
        else:
            pattern._rep_expanded[pattern.class_of[word]] = True
    pattern.closed = (not cap_hit and all(pattern._rep_expanded)
                      and pattern.n <= _CANONICAL_MAX_RANK)
    return pattern


@dataclass
class ExpansionTable:
    """Externally supplied family of clusters, one expansion tuple per vertex.

    The expansions are relative to the single reference cluster named by
    ``frame``; a table carries no mutation structure, so checks against it
    are frame-relative.
    """

    n: int
    m: int
    frame: str = "-"
    vertices: dict = field(default_factory=dict)

    def write(self, fp):
        fp.write(f"table n={self.n} m={self.m} frame={self.frame}\n")
        for name, cluster in self.vertices.items():
            fp.write(f"vertex {name}\n")
            for i, poly in enumerate(cluster):
                fp.write(f"var {i + 1}\n")
                for line in poly.term_lines():
                    fp.write(line + "\n")

    @classmethod
    def read(cls, fp):
        header = fp.readline().split()
        if len(header) != 4 or header[0] != "table":
            raise ValueError("expansion table must start with a table header")
        fields = dict(part.split("=", 1) for part in header[1:])
        table = cls(int(fields["n"]), int(fields["m"]),
                    fields.get("frame", "-"))

        blocks = []  # (vertex name, [per-variable term-line lists])
        for raw in fp:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("vertex "):
                blocks.append((line[len("vertex "):], []))
            elif line.startswith("var "):
                if not blocks:
                    raise ValueError("var header before any vertex header")
                blocks[-1][1].append([])
            else:
                if not blocks or not blocks[-1][1]:
                    raise ValueError(f"term line outside a var block: {line!r}")
                blocks[-1][1][-1].append(line)

        for name, per_var in blocks:
            if len(per_var) != table.n:
                raise ValueError(
                    f"vertex {name} has {len(per_var)} expansions, "
                    f"expected {table.n}")
            table.vertices[name] = tuple(
                LaurentPoly.from_terms(
                    table.n, table.m,
                    [parse_term_line(line, table.n, table.m)
                     for line in lines])
                for lines in per_var)
        return table
