import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from listcolor.errors import GraphParseError
from listcolor.graphs import (
    Graph,
    add_edge,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    encode_graph6,
    induced_subgraph,
    is_2connected,
    is_connected,
    max_degree,
    parse_graph6,
    path_graph,
    theta_graph,
    theta_paths,
    to_dot,
)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, frozenset())
    edges = draw(st.frozensets(st.sampled_from(pairs)))
    return Graph(n, edges)


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and not g.edges

    def test_k2_hand_decoded(self):
        # 'A'=n=2, '_'=32=100000: the single upper-triangle bit (0,1) is set
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges == frozenset({(0, 1)})

    def test_five_vertex_star(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert g.edges == frozenset({(0, 4), (1, 4), (2, 4), (3, 4)})

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")

    def test_cross_check_against_networkx(self):
        nx = pytest.importorskip("networkx")
        import random

        rng = random.Random(20240817)
        for _ in range(20):
            n = rng.randint(1, 12)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            ]
            g = Graph.from_edges(n, edges)
            line = encode_graph6(g)
            h = nx.from_graph6_bytes(line.encode())
            assert set(h.nodes) == set(range(n))
            assert {tuple(sorted(e)) for e in h.edges} == set(g.edges)
            # and decode a networkx encoding with our parser
            enc = nx.to_graph6_bytes(h, header=False).strip().decode()
            assert parse_graph6(enc) == g

    @pytest.mark.parametrize(
        "bad",
        ["", "?", "A", "A_~", "D?", "\x1cfoo"],
    )
    def test_malformed_inputs_raise(self, bad):
        with pytest.raises(GraphParseError):
            parse_graph6(bad)

    def test_nonzero_padding_rejected(self):
        # K2 body with a stray low bit: '_' has value 100000, '`' is 100001
        with pytest.raises(GraphParseError) as ei:
            parse_graph6("A`")
        assert "padding" in str(ei.value)

    def test_parse_error_carries_offset(self):
        with pytest.raises(GraphParseError) as ei:
            parse_graph6("A" + chr(20))
        assert ei.value.offset == 1

    @settings(max_examples=150)
    @given(graphs())
    def test_roundtrip(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    def test_long_form_roundtrip(self):
        g = path_graph(70)
        enc = encode_graph6(g)
        assert enc.startswith("~")
        assert parse_graph6(enc) == g


class TestDot:
    def test_k2_with_labels(self):
        out = to_dot(complete_graph(2), {0: "{1,2}", 1: "{1,3}"})
        assert "0 -- 1;" in out
        assert '0 [label="{1,2}"];' in out
        assert '1 [label="{1,3}"];' in out
        assert out.startswith("graph G {")

    def test_edgeless(self):
        out = to_dot(Graph(3, frozenset()))
        assert out.count("--") == 0
        assert "  0;" in out and "  2;" in out

    def test_theta_224_labels_render(self):
        g = theta_graph(2, 2, 4)
        labels = {
            0: "{1,2}", 1: "{1,3}", 2: "{1,2}", 3: "{2,3}",
            4: "{1,2}", 5: "{2,3}", 6: "{1,3}",
        }
        out = to_dot(g, labels)
        for u, v in g.sorted_edges():
            assert f"{u} -- {v};" in out
        assert out.count("label=") == 7

    def test_labels_must_cover(self):
        with pytest.raises(ValueError):
            to_dot(complete_graph(2), {0: "a"})


class TestQueries:
    def test_max_degree(self):
        assert max_degree(complete_graph(4)) == 3
        assert max_degree(cycle_graph(5)) == 2
        assert max_degree(parse_graph6("D?{")) == 4  # the 4-star
        assert max_degree(Graph(3, frozenset())) == 0

    def test_connectivity(self):
        assert is_connected(path_graph(4)) and not is_2connected(path_graph(4))
        assert is_connected(cycle_graph(4)) and is_2connected(cycle_graph(4))
        two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(two_triangles)
        assert not is_2connected(complete_graph(2))  # by decision: needs n >= 3

    def test_induced_subgraph(self):
        k3, vmap = induced_subgraph(complete_graph(4), frozenset({0, 2, 3}))
        assert k3 == complete_graph(3) and vmap == (0, 2, 3)
        p3, _ = induced_subgraph(cycle_graph(5), frozenset({1, 2, 3}))
        assert p3.edges == frozenset({(0, 1), (1, 2)})
        e2, _ = induced_subgraph(cycle_graph(5), frozenset({0, 2}))
        assert e2.n == 2 and not e2.edges
        with pytest.raises(ValueError):
            induced_subgraph(complete_graph(3), frozenset())

    @given(graphs())
    def test_induced_on_everything_is_identity(self, g):
        sub, vmap = induced_subgraph(g, frozenset(range(g.n)))
        assert sub == g and vmap == tuple(range(g.n))

    def test_add_edge(self):
        p3 = path_graph(3)
        assert add_edge(p3, 0, 2) == complete_graph(3)
        assert add_edge(cycle_graph(4), 0, 2).edges == cycle_graph(4).edges | {(0, 2)}
        assert add_edge(Graph(2, frozenset()), 0, 1) == complete_graph(2)
        with pytest.raises(ValueError):
            add_edge(p3, 0, 0)
        with pytest.raises(ValueError):
            add_edge(p3, 0, 1)

    @given(graphs(max_n=6), st.data())
    def test_add_edge_changes_exactly_one_pair(self, g, data):
        non = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.adjacent(u, v)
        ]
        if not non:
            return
        u, v = data.draw(st.sampled_from(non))
        h = add_edge(g, u, v)
        assert h.edge_count == g.edge_count + 1
        assert h.edges - g.edges == {(u, v)}


class TestConstructors:
    def test_theta_layout(self):
        g = theta_graph(2, 2, 4)
        assert g.n == 7 and g.edge_count == 8
        assert g.degree(0) == 3 and g.degree(1) == 3
        assert theta_paths(2, 2, 4) == [[0, 2, 1], [0, 3, 1], [0, 4, 5, 6, 1]]

    def test_theta_rejects_double_unit(self):
        with pytest.raises(ValueError):
            theta_graph(1, 1, 3)

    def test_k23_is_theta_222(self):
        assert theta_graph(2, 2, 2).edge_count == 6
        assert max_degree(theta_graph(2, 2, 2)) == 3
        assert complete_bipartite_graph(2, 3).edge_count == 6
