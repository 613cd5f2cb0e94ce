import io

import pytest

import cluspat as cp
from cluspat.errors import NotExploredError, NotPointedError, \
    UnreducedWordError
from cluspat.laurent import LaurentPoly
from cluspat.pattern import ExpansionTable, ExploreBudget, \
    seed_class_key, tree_distance, tree_path
from conftest import A2_B, A3_B, MARKOV_B


class TestExplore:
    def test_a2_coefficient_free_closes(self, a2_cf):
        assert a2_cf.finite_type_report() == {
            "closed": True, "cluster_count": 5, "variable_count": 5}

    def test_a3_coefficient_free_closes(self, a3_cf):
        assert a3_cf.finite_type_report() == {
            "closed": True, "cluster_count": 14, "variable_count": 9}

    def test_markov_depth3_counts(self):
        pattern = cp.explore(cp.Seed.root(MARKOV_B, [(), (), ()]),
                             max_depth=3)
        # every depth-3 word reaches a fresh cluster; counts from the
        # rational-function enumeration oracle
        assert pattern.finite_type_report() == {
            "closed": False, "cluster_count": 22, "variable_count": 24}

    def test_markov_depth5_open(self, markov5):
        report = markov5.finite_type_report()
        assert not report["closed"]
        assert len(markov5.vertices) == 94

    def test_depth_zero(self):
        pattern = cp.explore(cp.Seed.principal(A2_B), max_depth=0)
        assert list(pattern.vertices) == [()]
        assert not pattern.closed

    def test_vertex_cap_reports_open(self):
        pattern = cp.explore(cp.Seed.root(A3_B, [(), (), ()]),
                             budget=ExploreBudget(max_depth=16,
                                                  max_vertices=4))
        assert len(pattern.vertices) <= 4
        assert not pattern.closed

    def test_root_seed_required(self):
        with pytest.raises(ValueError):
            cp.explore(cp.Seed.principal(A2_B).mutate(0))

    def test_high_rank_disables_closure_detection(self):
        # labeled-equality dedup only above rank 8, so closure is never
        # claimed even though the zero matrix stabilizes immediately
        n = 9
        zero = [[0] * n for _ in range(n)]
        pattern = cp.explore(cp.Seed.root(zero, [()] * n), max_depth=2)
        assert not pattern.closed

    def test_default_budget(self):
        budget = ExploreBudget()
        assert budget.max_depth == 8
        assert budget.max_vertices == 20000

    def test_mutation_commutes_with_relabeling(self):
        # the class-deduplicated search relies on this: expanding one
        # representative of a class reaches the same neighbor classes as
        # expanding any other member
        import random

        from cluspat.seed import Seed

        rng = random.Random(43)
        for _ in range(40):
            n = rng.randint(2, 4)
            m = rng.randint(0, 2)
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    rows[i][j] = rng.randint(-2, 2)
                    rows[j][i] = -rows[i][j]
            coeffs = tuple(tuple(rng.randint(-2, 2) for _ in range(m))
                           for _ in range(n))
            seed = cp.Seed.root(rows, coeffs)
            for _ in range(rng.randint(0, 2)):
                seed = seed.mutate(rng.randrange(n))

            perm = list(range(n))
            rng.shuffle(perm)
            permuted = Seed(
                cp.ExchangeMatrix(
                    tuple(tuple(seed.matrix.entries[perm[i]][perm[j]]
                                for j in range(n)) for i in range(n)),
                    None),
                tuple(seed.coeffs[perm[i]] for i in range(n)),
                tuple(seed.cluster[perm[i]] for i in range(n)),
                ())
            k = rng.randrange(n)
            direct = seed.mutate(perm[k])
            relabeled = permuted.mutate(k)
            assert relabeled.matrix.entries == tuple(
                tuple(direct.matrix.entries[perm[i]][perm[j]]
                      for j in range(n)) for i in range(n))
            assert relabeled.coeffs == tuple(direct.coeffs[perm[i]]
                                             for i in range(n))
            assert relabeled.cluster == tuple(direct.cluster[perm[i]]
                                              for i in range(n))
            assert seed_class_key(relabeled) == seed_class_key(
                Seed(direct.matrix, direct.coeffs, direct.cluster, ()))

    def test_path_independent_merge(self, a2_cf):
        classes = {}
        for word, seed in a2_cf.vertices.items():
            classes.setdefault(a2_cf.class_of[word], []).append(seed)
        assert len(classes) == 5
        for members in classes.values():
            keys = {seed_class_key(s) for s in members}
            assert len(keys) == 1


class TestSeedAt:
    def test_root(self, a2_principal):
        assert a2_principal.seed_at(()) is a2_principal.root

    def test_unreduced_rejected(self, a2_principal):
        with pytest.raises(UnreducedWordError):
            a2_principal.seed_at((0, 0))

    def test_out_of_range_direction(self, a2_principal):
        with pytest.raises(UnreducedWordError):
            a2_principal.seed_at((5,))

    def test_unexplored(self, a2_principal):
        deep = (0, 1) * 40
        with pytest.raises(NotExploredError):
            a2_principal.seed_at(deep)

    def test_matches_sequential_mutation(self, a2_principal):
        stored = a2_principal.seed_at((0, 1))
        walked = a2_principal.root.mutate(0).mutate(1)
        assert stored == walked
        assert stored.cluster[0] == LaurentPoly.from_terms(
            2, 2, [((-1, 1), (0, 0), 1), ((-1, 0), (1, 0), 1)])


class TestWords:
    def test_tree_path_strips_common_prefix(self):
        assert tree_path((0, 1), (0, 2)) == (1, 2)
        assert tree_path((), (0, 1)) == (0, 1)
        assert tree_path((0, 1), ()) == (1, 0)
        assert tree_path((0, 1), (0, 1)) == ()

    def test_tree_distance(self):
        assert tree_distance((0, 1, 0), (0, 2)) == 3
        assert tree_distance((), ()) == 0


class TestMatrices:
    def test_d_matrix_self_reference(self, a2_principal):
        assert a2_principal.d_matrix((), ()).entries == ((-1, 0), (0, -1))
        assert a2_principal.d_matrix((0,), (0,)).entries == ((-1, 0), (0, -1))

    def test_d_matrix_principal_first_step(self, a2_principal):
        d = a2_principal.d_matrix((0,))
        assert d.column(0) == (1, 0)
        assert d.column(1) == (0, -1)

    def test_d_matrix_pentagon_new_variable(self, a2_cf):
        # (1 + x1 + x2) / (x1 x2) appears at position 2 of the word (1,2)
        assert a2_cf.d_matrix((0, 1)).column(1) == (1, 1)

    def test_g_matrix_identity_at_reference(self, a2_principal):
        assert a2_principal.g_matrix((), ()).entries == ((1, 0), (0, 1))

    def test_g_matrix_principal_first_step(self, a2_principal):
        g = a2_principal.g_matrix((0,))
        assert g.column(0) == (-1, 1)
        assert g.column(1) == (0, 1)

    def test_g_matrix_coefficient_free_not_pointed(self, a2_cf):
        with pytest.raises(NotPointedError):
            a2_cf.g_matrix((0,))

    def test_member_variable_columns_are_negated_units(self, a3_cf):
        # whenever x_{i;t} already belongs to the reference cluster, its
        # denominator column is minus the matching unit vector
        words = a3_cf.words()
        checked = 0
        for t in words:
            ids_t = a3_cf.variable_ids_at(t)
            for ref in words:
                ids_ref = a3_cf.variable_ids_at(ref)
                d = a3_cf.d_matrix(t, ref)
                for i, vid in enumerate(ids_t):
                    if vid in ids_ref:
                        j = ids_ref.index(vid)
                        expected = tuple(-1 if r == j else 0
                                         for r in range(a3_cf.n))
                        assert d.column(i) == expected
                        checked += 1
        assert checked > 100

    def test_g_composition_full_quadratic(self, a3_principal):
        from cluspat.verify import check_g_composition
        words = a3_principal.words()
        for t in words:
            for t2 in words:
                assert check_g_composition(a3_principal, (), t, t2).passed

    def test_g_of_monomial(self, a2_principal):
        g = a2_principal.g_matrix((0,))
        assert a2_principal.g_of_monomial((0,), (1, 0)) == g.column(0)
        assert a2_principal.g_of_monomial((0,), (0, 0)) == (0, 0)
        assert a2_principal.g_of_monomial((0,), (1, 1)) == (-1, 2)
        with pytest.raises(ValueError):
            a2_principal.g_of_monomial((0,), (-1, 0))


class TestRebase:
    def test_rebase_at_root_is_identity(self, a2_principal):
        rebased = a2_principal.rebase(())
        assert set(rebased.vertices) == set(a2_principal.vertices)
        for word in a2_principal.vertices:
            assert rebased.vertices[word].cluster \
                == a2_principal.vertices[word].cluster

    def test_rebase_symmetry_of_exchange(self, a2_cf):
        # the root variable x1 sits at position 0 of vertex (0,) after
        # rebasing there, and its expansion has denominator x1' exactly
        rebased = a2_cf.rebase((0,))
        back = rebased.seed_at((0,))
        assert tuple(-e for e in back.cluster[0].min_x_exponents()) == (1, 0)

    def test_rebase_round_trip(self, a3_principal):
        there = a3_principal.rebase((1,))
        back = there.rebase((1,))
        for word in a3_principal.vertices:
            assert back.vertices[word].cluster \
                == a3_principal.vertices[word].cluster

    def test_rebase_preserves_counts(self, a3_cf):
        rebased = a3_cf.rebase((0, 1))
        assert rebased.finite_type_report() == a3_cf.finite_type_report()

    def test_rebase_round_trip_random_seeds(self):
        import random

        rng = random.Random(53)
        for _ in range(15):
            n = rng.randint(2, 3)
            m = rng.randint(0, 2)
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    rows[i][j] = rng.randint(-2, 2)
                    rows[j][i] = -rows[i][j]
            coeffs = tuple(tuple(rng.randint(-1, 1) for _ in range(m))
                           for _ in range(n))
            pattern = cp.explore(cp.Seed.root(rows, coeffs), max_depth=3)
            words = pattern.words()
            frame = words[rng.randrange(len(words))]
            back = pattern.rebase(frame).rebase(tree_path(frame, ()))
            assert set(back.vertices) == set(pattern.vertices)
            for word in words:
                assert back.vertices[word].cluster \
                    == pattern.vertices[word].cluster


class TestRegistry:
    def test_bijective(self, a2_cf):
        reg = a2_cf.registry
        for vid in range(len(reg)):
            assert reg.id_of(reg.poly(vid)) == vid

    def test_cluster_membership_ids(self, a2_cf):
        ids = a2_cf.variable_ids_at(())
        assert ids == (0, 1)

    def test_first_occurrence_points_at_variable(self, a2_cf):
        for vid in range(len(a2_cf.registry)):
            word, pos = a2_cf.registry.first_occurrence(vid)
            assert a2_cf.seed_at(word).cluster[pos] == a2_cf.registry.poly(vid)


class TestExpansionTable:
    def test_round_trip(self, a2_principal):
        table = a2_principal.to_expansion_table()
        buffer = io.StringIO()
        table.write(buffer)
        buffer.seek(0)
        loaded = ExpansionTable.read(buffer)
        assert loaded.n == table.n and loaded.m == table.m
        assert loaded.frame == table.frame
        assert loaded.vertices == table.vertices

    def test_read_rejects_wrong_arity(self):
        text = "table n=2 m=0 frame=-\nvertex -\nvar 1\n1 x:1,0 y:\n"
        with pytest.raises(ValueError):
            ExpansionTable.read(io.StringIO(text))

    def test_dump_lines_deterministic(self, a2_principal):
        assert a2_principal.dump_lines() == a2_principal.dump_lines()
        header, first = a2_principal.dump_lines()[:2]
        assert header == "word\tvariables\td_matrix\tg_matrix"
        assert first.startswith("-\t0,1\t-1,0;0,-1\t1,0;0,1")


class TestMonomials:
    def test_enumeration_is_per_class(self, a2_cf):
        monomials = a2_cf.monomials_up_to_degree(1)
        assert len(monomials) == 5 * 3  # five clusters, exponents 00 10 01

    def test_monomial_expansion(self, a2_principal):
        mono = cp.ClusterMonomial((0,), (1, 1))
        expansion = a2_principal.monomial_expansion(mono)
        seed = a2_principal.seed_at((0,))
        assert expansion == seed.cluster[0] * seed.cluster[1]

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            cp.ClusterMonomial((0,), (1, -1))
