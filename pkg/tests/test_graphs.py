"""Graph family builders, invariants, and edge-list serialization."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdrd.graphs import (
    build_block_graph,
    build_flower_snark,
    build_grid,
    build_petersen,
    parse_edge_list,
    serialize_edge_list,
)


class TestPetersen:
    def test_moebius_kantor_size(self):
        g = build_petersen(8, 3)
        assert (g.n, g.num_edges, g.is_cubic) == (16, 24, True)

    def test_smallest(self):
        g = build_petersen(3, 1)
        assert (g.n, g.num_edges, g.is_cubic) == (6, 9, True)

    def test_five_prism_structure(self):
        g = build_petersen(5, 1)
        want = {(i, (i + 1) % 5) for i in range(5)}
        want |= {(5 + i, 5 + (i + 1) % 5) for i in range(5)}
        want |= {(i, 5 + i) for i in range(5)}
        assert set(map(lambda e: (min(e), max(e)), want)) == set(g.edges())

    @pytest.mark.parametrize("m,k", [(2, 1), (3, 0), (3, 3), (4, 2), (6, 3), (8, 4)])
    def test_rejects_bad_parameters(self, m, k):
        with pytest.raises(ValueError):
            build_petersen(m, k)

    def test_cubic_across_parameters(self):
        for m in range(3, 13):
            for k in range(1, m):
                if 2 * k == m:
                    continue
                g = build_petersen(m, k)
                assert g.n == 2 * m
                assert all(g.degree(v) == 3 for v in range(g.n))

    def test_names(self):
        g = build_petersen(4, 1)
        assert g.names[:4] == ("u0", "u1", "u2", "u3")
        assert g.names[4:] == ("v0", "v1", "v2", "v3")
        assert g.id_of("v2") == 6


class TestGrid:
    def test_two_by_four(self):
        g = build_grid(2, 4)
        assert (g.n, g.num_edges) == (8, 10)

    def test_degenerate(self):
        g = build_grid(1, 1)
        assert (g.n, g.num_edges) == (1, 0)

    @pytest.mark.parametrize("m", [1, 2, 3, 7, 12])
    def test_two_row_edge_count(self, m):
        g = build_grid(2, m)
        assert (g.n, g.num_edges) == (2 * m, 3 * m - 2)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            build_grid(0, 5)

    def test_general_grid_names(self):
        g = build_grid(3, 2)
        assert g.names[0] == "r0c0" and g.names[5] == "r2c1"


class TestFlowerSnark:
    def test_j5(self):
        g = build_flower_snark(5)
        assert (g.n, g.num_edges, g.is_cubic) == (20, 30, True)

    def test_j9(self):
        g = build_flower_snark(9)
        assert (g.n, g.num_edges) == (36, 54)

    def test_rejects_small_m(self):
        with pytest.raises(ValueError):
            build_flower_snark(4)

    def test_cubic_range(self):
        for m in range(5, 31):
            g = build_flower_snark(m)
            assert g.n == 4 * m and g.is_cubic

    def test_long_cycle_wraps(self):
        g = build_flower_snark(5)
        ids = g.name_to_id()
        assert ids["d0"] in g.adjacency[ids["c4"]]
        assert ids["d4"] in g.adjacency[ids["c0"]]
        assert ids["c0"] not in g.adjacency[ids["c4"]]


class TestBlockGraphs:
    def test_full_block(self):
        g = build_block_graph("full")
        assert g.n == 24
        corners = [g.id_of(nm) for nm in ("lt", "lb", "rt", "rb")]
        assert all(g.degree(v) == 2 for v in corners)
        boundary = [g.id_of(nm) for nm in ("lti", "lbi", "rti", "rbi")]
        assert all(g.degree(v) == 3 for v in boundary)

    def test_reduced_block(self):
        g = build_block_graph("reduced")
        assert (g.n, g.num_edges) == (16, 22)

    def test_rejects_unknown_variant(self):
        with pytest.raises(ValueError):
            build_block_graph("half")

    def test_center_names_between_boundaries(self):
        g = build_block_graph("full")
        ids = g.name_to_id()
        assert ids["u0"] in g.adjacency[ids["lbi"]]
        assert ids["v7"] in g.adjacency[ids["rti"]]


def test_handshake_across_families():
    graphs = [
        build_petersen(7, 2),
        build_grid(3, 5),
        build_flower_snark(7),
        build_block_graph("full"),
    ]
    for g in graphs:
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges


def test_name_bijection_across_families():
    for g in (build_petersen(6, 2), build_grid(2, 5), build_flower_snark(6), build_block_graph("reduced")):
        assert len(set(g.names)) == g.n
        assert all(g.id_of(g.names[v]) == v for v in range(g.n))


class TestEdgeList:
    def test_single_edge(self):
        g = parse_edge_list("2 1\n0 1")
        assert (g.n, g.num_edges) == (2, 1)

    def test_round_trip_grid(self):
        g = build_grid(2, 4)
        reparsed = parse_edge_list(serialize_edge_list(g))
        assert reparsed.n == g.n and reparsed.adjacency == g.adjacency

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            parse_edge_list("2 1\n0 0")

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError):
            parse_edge_list("3 2\n0 1\n1 0")

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            parse_edge_list("2 1\n0 2")

    @pytest.mark.parametrize("text", ["", "2", "2 2\n0 1", "2 1\nx y"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ValueError):
            parse_edge_list(text)

    @settings(deadline=None, max_examples=60)
    @given(st.data())
    def test_round_trip_random_graphs(self, data):
        n = data.draw(st.integers(min_value=1, max_value=12))
        possible = [(a, b) for a in range(n) for b in range(a + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))) if possible else []
        text = f"{n} {len(edges)}\n" + "\n".join(f"{a} {b}" for a, b in edges)
        g = parse_edge_list(text)
        again = parse_edge_list(serialize_edge_list(g))
        assert again.adjacency == g.adjacency
