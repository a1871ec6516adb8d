import itertools
import random

import pytest

from listcolor.coloring import (
    ListAssignment,
    chromatic_number,
    count_list_colorings,
    gstar_closure,
    list_colorings,
)
from listcolor.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    path_graph,
    theta_graph,
)
from listcolor.structure import ThetaSubgraph, contract_closed_neighborhood
from listcolor.ulc import (
    NotU2LC,
    case_i2_seed,
    chorded_cycle_seed,
    extend_seed,
    gv_lift,
    is_u2lc,
    lemma1_assignment,
    synthesize,
    theta_assignment,
    triangle_theta_seed,
)


def pendant_bipartite_pattern():
    """v=0 attached to v1=1, v2=2 of the K_{3,2} on {1,2,3} x {4,5}."""
    edges = [(0, 1), (0, 2)] + [(a, b) for a in (1, 2, 3) for b in (4, 5)]
    return Graph.from_edges(6, edges)


class TestIsU2LC:
    def test_examples(self):
        assert not is_u2lc(complete_bipartite_graph(2, 3))
        assert is_u2lc(theta_graph(2, 2, 4))
        assert is_u2lc(theta_graph(1, 2, 2))

    def test_exempt_shapes(self):
        assert not is_u2lc(complete_graph(5))
        assert not is_u2lc(cycle_graph(6))
        assert not is_u2lc(path_graph(4))
        bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        assert not is_u2lc(bowtie)

    def test_disconnected_requires_every_component(self):
        theta = theta_graph(2, 2, 4)
        union = Graph(
            10, theta.edges | {(7, 8), (8, 9), (7, 9)}
        )  # theta + separate triangle
        assert not is_u2lc(union)
        two_thetas = Graph(
            11,
            theta.edges | {(min(u + 7, v + 7), max(u + 7, v + 7)) for u, v in theta_graph(1, 2, 2).edges},
        )
        assert is_u2lc(two_thetas)

    def test_isolated_vertex_blocks_uniqueness(self):
        g = Graph(8, theta_graph(2, 2, 4).edges)  # theta + isolated vertex
        assert not is_u2lc(g)


class TestLemma1:
    def test_p3(self):
        g = path_graph(3)
        L = lemma1_assignment(g, 0, (1, 2, 1))
        assert L.lists == (frozenset({1}), frozenset({1, 2}), frozenset({1, 2}))
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == (1, 2, 1)

    def test_k1(self):
        L = lemma1_assignment(Graph(1, frozenset()), 0, (1,))
        assert L.lists == (frozenset({1}),)

    def test_c4(self):
        g = cycle_graph(4)
        L = lemma1_assignment(g, 0, (1, 2, 1, 2))
        assert L.lists == (
            frozenset({1}),
            frozenset({1, 2}),
            frozenset({1, 2}),
            frozenset({1, 2}),
        )
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == (1, 2, 1, 2)

    def test_random_instances_unique(self):
        rng = random.Random(7)
        from listcolor.coloring import find_coloring

        for _ in range(30):
            n = rng.randint(2, 7)
            edges = {
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.5
            }
            edges |= {(i, i + 1) for i in range(n - 1)}  # keep it connected
            g = Graph(n, frozenset(edges))
            c = find_coloring(g, chromatic_number(g))
            L = lemma1_assignment(g, rng.randrange(n), c)
            cnt, cols = list_colorings(g, L, 2)
            assert cnt == 1 and cols[0] == c


class TestExtendSeed:
    def test_whole_graph_seed_is_identity(self):
        g = theta_graph(2, 2, 4)
        L = ListAssignment(({1, 2}, {1, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 3}))
        c = (1, 3, 2, 2, 2, 3, 1)
        out = extend_seed(g, frozenset(range(7)), dict(enumerate(L.lists)), c)
        assert out == L

    def test_theta_with_pendant_path(self):
        base = theta_graph(2, 2, 4)
        g = Graph(9, base.edges | {(1, 7), (7, 8)})
        seed_lists = dict(enumerate(
            [{1, 2}, {1, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 3}]
        ))
        c = (1, 3, 2, 2, 2, 3, 1, 1, 2)
        L = extend_seed(g, frozenset(range(7)), seed_lists, c)
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == c

    def test_star_center_seed(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        c = (1, 2, 2, 2)
        L = extend_seed(g, frozenset({0}), {0: {1}}, c)
        assert L.lists[1:] == (frozenset({1, 2}),) * 3
        assert count_list_colorings(g, L, 2) == 1

    def test_disconnected_rejected(self):
        g = Graph(3, frozenset({(0, 1)}))
        with pytest.raises(ValueError):
            extend_seed(g, frozenset({0}), {0: {1}}, (1, 2, 1))


class TestChordedCycleSeed:
    def test_k4_minus_e(self):
        g = theta_graph(1, 2, 2)
        cyc = (0, 2, 1, 3)
        lists, col = chorded_cycle_seed(g, cyc, (0, 1), 3)
        sub, vmap = induced_subgraph(g, frozenset(cyc))
        L = ListAssignment(tuple(lists[v] for v in vmap))
        cnt, cols = list_colorings(sub, L, 2)
        assert cnt == 1
        assert cols[0] == tuple(col[v] for v in vmap)

    def test_five_cycle_with_chord(self):
        g = theta_graph(1, 2, 3)  # a 5-cycle with one chord
        cyc = (0, 2, 1, 4, 3)
        lists, col = chorded_cycle_seed(g, cyc, (0, 1), 3)
        L = ListAssignment(tuple(lists[v] for v in range(5)))
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == tuple(col[v] for v in range(5))

    def test_adjacent_gate_returns_none(self):
        g = complete_graph(4)
        assert chorded_cycle_seed(g, (0, 1, 2, 3), (0, 2), 4) is None


class TestTriangleThetaSeed:
    def test_k4_minus_e(self):
        g = theta_graph(1, 2, 2)
        th = ThetaSubgraph((0, 1), ((0, 1), (0, 2, 1), (0, 3, 1)))
        lists, col = triangle_theta_seed(g, th, 3)
        L = ListAssignment(tuple(lists[v] for v in range(4)))
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == tuple(col[v] for v in range(4))

    def test_theta_123(self):
        g = theta_graph(1, 2, 3)
        th = ThetaSubgraph((0, 1), ((0, 1), (0, 2, 1), (0, 3, 4, 1)))
        lists, col = triangle_theta_seed(g, th, 3)
        L = ListAssignment(tuple(lists[v] for v in range(5)))
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == tuple(col[v] for v in range(5))

    def test_adjacent_gate(self):
        g = complete_graph(4)
        th = ThetaSubgraph((0, 1), ((0, 1), (0, 2, 1), (0, 3, 1)))
        assert triangle_theta_seed(g, th, 4) is None


class TestThetaAssignment:
    def test_figure_base_case(self):
        g, L, c = theta_assignment(2, 2, 4)
        assert L.lists == (
            frozenset({1, 2}),
            frozenset({1, 3}),
            frozenset({1, 2}),
            frozenset({2, 3}),
            frozenset({1, 2}),
            frozenset({2, 3}),
            frozenset({1, 3}),
        )
        assert c == (1, 3, 2, 2, 2, 3, 1)

    def test_base_case_argument_orders(self):
        for order in [(2, 4, 2), (4, 2, 2)]:
            g, L, c = theta_assignment(*order)
            assert count_list_colorings(g, L, 2) == 1
            assert L.t == 3

    def test_222_rejected(self):
        with pytest.raises(ValueError, match="not uniquely"):
            theta_assignment(2, 2, 2)

    def test_226_via_one_contraction(self):
        g, L, c = theta_assignment(2, 2, 6)
        assert g == theta_graph(2, 2, 6)
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == c
        assert L.t == 3 and all(k == 2 for k in L.k_profile)


class TestGvLift:
    def test_lift_lemma1_from_triangle_to_c5(self):
        c5 = cycle_graph(5)
        tri, mapping = contract_closed_neighborhood(c5, 0)
        c_small = (1, 2, 3)
        # root away from the merged vertex so that 2-list lands on it
        L_small = lemma1_assignment(tri, 0, c_small)
        L, c = gv_lift(c5, 0, mapping, L_small, c_small)
        cnt, cols = list_colorings(c5, L, 2)
        assert cnt == 1 and cols[0] == c

    def test_lists_follow_images(self):
        g = theta_graph(2, 2, 6)
        gc, mapping = contract_closed_neighborhood(g, 5)
        _, L_small, c_small = theta_assignment(2, 2, 4)
        # the contracted graph is isomorphic to theta(2,2,4) but not equal;
        # realign by brute force for this identity check
        perm = next(
            pm
            for pm in itertools.permutations(range(gc.n))
            if all(gc.adjacent(pm[u], pm[v]) for u, v in theta_graph(2, 2, 4).edges)
        )
        L_re = ListAssignment(tuple(L_small.lists[perm.index(i)] for i in range(gc.n)))
        c_re = tuple(c_small[perm.index(i)] for i in range(gc.n))
        L, c = gv_lift(g, 5, mapping, L_re, c_re)
        for w in range(g.n):
            assert L.lists[w] == L_re.lists[mapping[w]]
        cnt, cols = list_colorings(g, L, 2)
        assert cnt == 1 and cols[0] == c

    def test_bad_mapping_rejected(self):
        g = cycle_graph(5)
        with pytest.raises(ValueError):
            gv_lift(g, 0, (0, 1, 2, 2, 2), ListAssignment(({1, 2},) * 3), (1, 2, 1))


class TestCaseI2Seed:
    def test_canonical_instance(self):
        g = pendant_bipartite_pattern()
        lists, col = case_i2_seed(g, 0, 1, 2, 3, 4, 5)
        assert col == {0: 2, 1: 1, 2: 1, 3: 2, 4: 3, 5: 3}
        sub, vmap = induced_subgraph(g, frozenset(range(6)))
        L = ListAssignment(tuple(lists[v] for v in vmap))
        assert count_list_colorings(sub, L, 3) == 1

    def test_structure_check_rejects_plain_k23(self):
        g = Graph(6, complete_bipartite_graph(2, 3).edges)
        with pytest.raises(ValueError, match="structure"):
            case_i2_seed(g, 5, 2, 3, 4, 0, 1)


class TestSynthesize:
    def test_k23_not_u2lc(self):
        res = synthesize(complete_bipartite_graph(2, 3))
        assert isinstance(res, NotU2LC)
        assert res.blocks[0][1] == "CompleteBipartite"

    def test_theta224_uses_theta_base(self):
        res = synthesize(theta_graph(2, 2, 4))
        assert res.verified and res.assignment.t == 3
        seeds = [e for e in res.trace if e["step"] == "seed"]
        assert seeds and seeds[0]["kind"] == "theta"
        assert seeds[0]["theta_lengths"] == [2, 2, 4]

    def test_k4_minus_e(self):
        g = theta_graph(1, 2, 2)
        res = synthesize(g)
        assert res.verified
        assert res.assignment.t == 3 == max(3, chromatic_number(g))
        cnt, cols = list_colorings(g, res.assignment, 2)
        assert cnt == 1 and cols[0] == res.unique_coloring

    @pytest.mark.parametrize("case,expected_kind", [
        ("triangle", "triangle"),
        ("chord", "chord"),
    ])
    def test_seed_case_override_on_k4_minus_e(self, case, expected_kind):
        res = synthesize(theta_graph(1, 2, 2), seed_case=case)
        kinds = [e["kind"] for e in res.trace if e["step"] == "seed"]
        assert kinds == [expected_kind]
        assert res.verified

    def test_seed_case_i2(self):
        res = synthesize(pendant_bipartite_pattern(), seed_case="i2")
        kinds = [e["kind"] for e in res.trace if e["step"] == "seed"]
        assert kinds == ["i2"] and res.verified

    def test_seed_case_fallback(self):
        res = synthesize(theta_graph(1, 2, 2), seed_case="fallback")
        assert any(e["step"] == "fallback" for e in res.trace)
        assert res.verified and res.assignment.t == 3

    def test_disconnected_merge(self):
        a, b = theta_graph(2, 2, 4), theta_graph(1, 2, 2)
        shift = {(u + 7, v + 7) for u, v in b.edges}
        g = Graph(11, a.edges | frozenset(shift))
        res = synthesize(g)
        assert res.verified
        assert res.assignment.t == 3
        assert res.trace[0]["step"] == "disconnected"
        cnt, _ = list_colorings(g, res.assignment, 2)
        assert cnt == 1

    def test_disconnected_with_exempt_component(self):
        g = Graph(10, theta_graph(2, 2, 4).edges | {(7, 8), (8, 9), (7, 9)})
        assert isinstance(synthesize(g), NotU2LC)

    def test_higher_chromatic_number(self):
        # K5 sharing one vertex with a theta: chi = 5, so t = 5
        theta = theta_graph(2, 2, 4)
        k5 = {(u + 6 if u else 0, v + 6 if v else 0) for u, v in complete_graph(5).edges}
        g = Graph(11, theta.edges | {tuple(sorted(e)) for e in k5})
        assert chromatic_number(g) == 5
        res = synthesize(g)
        assert res.verified and res.assignment.t == 5
        assert res.assignment.palette == frozenset(range(1, 6))


class TestCompositionAndTransfer:
    def test_cut_vertex_composition(self, catalog_graphs):
        rng = random.Random(11)
        small = [g for g in catalog_graphs if 2 <= g.n <= 4]
        for _ in range(40):
            g1, g2 = rng.choice(small), rng.choice(small)
            shift = {
                (u + g1.n - 1 if u else 0, v + g1.n - 1 if v else 0)
                for u, v in g2.edges
            }
            glued = Graph(
                g1.n + g2.n - 1,
                g1.edges | {tuple(sorted(e)) for e in shift},
            )
            assert is_u2lc(glued) == (is_u2lc(g1) or is_u2lc(g2))

    def test_certificate_from_closure_verifies_on_original(self):
        for g in [theta_graph(1, 2, 2), theta_graph(2, 2, 4), theta_graph(2, 3, 3)]:
            t = max(3, chromatic_number(g))
            gs = gstar_closure(g, t)
            res = synthesize(gs)
            assert res.verified
            cnt, cols = list_colorings(g, res.assignment, 2)
            assert cnt == 1 and cols[0] == res.unique_coloring
