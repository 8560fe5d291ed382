import itertools
import random

import pytest

import zflab as z
from oracles import brute_zero_forcing, set_closure


class TestClosure:
    def test_path_endpoint(self):
        col = z.zf_closure(z.path_graph(4), {0})
        assert col.all_colored
        assert col.log == ((0, 1), (1, 2), (2, 3))

    def test_c4_single_vertex_stalls(self):
        col = z.zf_closure(z.cycle_graph(4), {0})
        assert col.colored == frozenset({0})
        assert col.log == ()

    def test_aztec_3_construction_forces_all(self):
        g = z.aztec_diamond(3)
        blue = z.construction_zfs("aztec", r=3)
        cells = sorted(g.labels[v] for v in blue)
        assert cells == [(1, 3), (1, 4), (2, 2), (2, 5), (3, 1), (3, 6)]
        assert z.zf_closure(g, blue).all_colored

    def test_log_replay_reproduces_coloring(self, corpus):
        rng = random.Random(0)
        for g in corpus[:40]:
            blue = {v for v in range(g.n) if rng.random() < 0.4}
            col = z.zf_closure(g, blue)
            replay = set(blue)
            for forcer, forced in col.log:
                assert forcer in replay and forced not in replay
                white = [w for w in g.neighbors(forcer) if w not in replay]
                assert white == [forced]
                replay.add(forced)
            assert replay == set(col.colored)
            forced_list = [w for _, w in col.log]
            assert len(forced_list) == len(set(forced_list))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            z.zf_closure(z.path_graph(3), {5})

    def test_monotone(self, corpus):
        rng = random.Random(1)
        for g in corpus[:60]:
            small = {v for v in range(g.n) if rng.random() < 0.3}
            extra = {v for v in range(g.n) if rng.random() < 0.3}
            a = z.zf_closure(g, small).colored
            b = z.zf_closure(g, small | extra).colored
            assert a <= b

    def test_order_independent(self, corpus):
        rng = random.Random(2)
        for g in corpus[:40]:
            blue = {v for v in range(g.n) if rng.random() < 0.35}
            ref = set(z.zf_closure(g, blue).colored)
            for _ in range(3):
                order = list(range(g.n))
                rng.shuffle(order)
                assert set_closure(g, blue, order) == ref


class TestIsZfs:
    def test_full_set(self, families):
        for g in families.values():
            assert z.is_zfs(g, range(g.n))

    def test_circulant_16_half_set(self):
        g = z.circulant(16, {1, 7})
        assert z.is_zfs(g, set(range(9)) | {15})

    def test_k44_no_five_subset(self):
        g = z.complete_bipartite_graph(4, 4)
        assert all(
            not z.is_zfs(g, s) for s in itertools.combinations(range(8), 5)
        )

    def test_superset_of_zfs_is_zfs(self, corpus):
        rng = random.Random(3)
        for g in corpus[:30]:
            res = z.zero_forcing_number(g)
            sup = set(res.witness)
            while len(sup) < min(g.n, len(sup) + 2):
                sup.add(rng.randrange(g.n))
            assert z.is_zfs(g, sup)


class TestSearch:
    def test_matches_brute_oracle_on_corpus(self, corpus):
        for g in corpus:
            if g.n > 8:
                continue
            expect, _ = brute_zero_forcing(g)
            assert z.zero_forcing_number(g).zf_number == expect

    def test_small_families(self, families):
        expected = {
            "P5": 1,
            "C6": 2,
            "K5": 4,
            "K33": 4,  # a + b - 2
            "K44": 6,
            "AD1": 2,
            "AD2": 4,
        }
        for name, value in expected.items():
            assert z.zero_forcing_number(families[name]).zf_number == value

    def test_aztec_3(self):
        res = z.zero_forcing_number(z.aztec_diamond(3))
        assert res.zf_number == 6
        assert z.is_zfs(z.aztec_diamond(3), res.witness)

    def test_ecg_values(self):
        assert z.zero_forcing_number(z.extended_cube(1, 1)).zf_number == 4
        assert z.zero_forcing_number(z.circulant(8, {1, 3})).zf_number == 6

    def test_witness_is_lex_least_at_minimum(self):
        g = z.cycle_graph(5)
        res = z.zero_forcing_number(g)
        assert res.zf_number == 2
        best = next(
            c
            for s in range(1, 6)
            for c in itertools.combinations(range(5), s)
            if z.is_zfs(g, c)
        )
        assert res.witness == best

    def test_hint_with_assertion(self):
        g = z.circulant(16, {1, 7})
        nu = z.graph_nullity(g)
        res = z.zero_forcing_number(g, size_hint=nu, assume_minimum=True)
        assert res.zf_number == 10
        assert z.is_zfs(g, res.witness)

    def test_unasserted_hint_still_exact(self):
        g = z.cycle_graph(6)
        assert z.zero_forcing_number(g, size_hint=4).zf_number == 2

    def test_search_cap_gives_bounds(self):
        g = z.circulant(40, {1, 3})
        res = z.zero_forcing_number(g, search_cap=34)
        assert not res.is_exact
        assert res.lower_bound <= res.upper_bound
        assert z.is_zfs(g, res.witness)

    def test_disconnected(self):
        g = z.Graph(5, [(0, 1), (2, 3)])
        # isolated vertex 4 must be picked; each K2 needs one endpoint
        assert z.zero_forcing_number(g).zf_number == 3

    def test_single_vertex(self):
        assert z.zero_forcing_number(z.path_graph(1)).zf_number == 1

    def test_nullity_bounds_z(self, corpus, families):
        graphs = list(corpus) + [g for g in families.values() if g.n <= 16]
        for g in graphs:
            zres = z.zero_forcing_number(g)
            for lam in range(-2, 3):
                nu = z.adjacency_matrix(g, lam).rank_nullity()[1]
                assert nu <= zres.zf_number, f"null(A-{lam}I) > Z on {g!r}"


class TestConstructions:
    def test_all_constructions_force(self):
        cases = [
            (z.aztec_diamond(2), z.construction_zfs("aztec", r=2)),
            (z.aztec_diamond(4), z.construction_zfs("aztec", r=4)),
            (z.circulant(8, {1, 3}), z.construction_zfs("circulant_half", n=8)),
            (z.circulant(24, {1, 11}), z.construction_zfs("circulant_half", n=24)),
            (z.extended_cube(1, 2), z.construction_zfs("ecg", t=1, k=2)),
            (z.extended_cube(7, 7), z.construction_zfs("ecg", t=7, k=7)),
            (z.circulant(12, {1, 3}), z.construction_zfs("circulant", s={1, 3})),
            (z.circulant(24, {1, 5}), z.construction_zfs("circulant", s={1, 5})),
            (z.circulant(10, {1, 2, 4}), z.construction_zfs("circulant_consec_minus", n=10)),
            (z.circulant(11, {1, 2, 3, 5}), z.construction_zfs("circulant_consec_minus", n=11)),
        ]
        for g, blue in cases:
            assert z.is_zfs(g, blue), f"construction fails on {g!r}"

    def test_ecg_12_set(self):
        assert z.construction_zfs("ecg", t=1, k=2) == frozenset({0, 10, 11, 13})

    def test_circulant_12_13_set(self):
        assert z.construction_zfs("circulant", s={1, 3}) == frozenset(range(6))

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            z.construction_zfs("moebius", n=8)
