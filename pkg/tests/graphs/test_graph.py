# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

import networkx as nx
import pytest

from drdom.graphs.families import Cycle, Path, Tadpole, generate
from drdom.graphs.graph import (Graph, add_edge, build_graph, delete_edge, delete_vertices, disjoint_union,
                                empty_graph)
from drdom.graphs.random_models import random_graph
from drdom.utils.utils import instance_rng


class TestBuildGraph:

    def test_adjacency_sorted_and_deduplicated(self):
        g = build_graph(4, [(2, 0), (0, 2), (0, 1), (3, 2)])
        assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))
        assert g.edge_count == 3
        assert g.edges() == [(0, 1), (0, 2), (2, 3)]

    @pytest.mark.parametrize('edges', [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_invalid_edges(self, edges):
        with pytest.raises(ValueError):
            build_graph(3, edges)

    def test_negative_order(self):
        with pytest.raises(ValueError):
            build_graph(-1, [])

    def test_empty(self):
        g = empty_graph(0)
        assert g.n == 0
        assert g.max_degree == 0
        assert not g.is_connected()


class TestQueries:

    def test_degrees(self):
        g = build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
        assert g.degree(0) == 3
        assert g.max_degree == 3
        assert g.min_degree == 1
        assert g.degree_sequence() == [3, 2, 1, 1, 1]
        assert g.neighbors(3) == (0, 4)
        assert g.closed_neighborhood(3) == (0, 3, 4)
        assert g.has_edge(4, 3)
        assert not g.has_edge(1, 2)

    def test_components(self):
        g = build_graph(6, [(0, 4), (4, 2), (1, 5)])
        assert g.connected_components() == [[0, 2, 4], [1, 5], [3]]
        assert not g.is_connected()

    def test_induced_subgraph(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        sub, mapping = g.induced_subgraph([4, 0, 1])
        assert mapping == {0: 0, 1: 1, 4: 2}
        assert sub.edges() == [(0, 1), (0, 2)]

    def test_networkx_round_trip(self):
        g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
        assert Graph.from_networkx(g.to_networkx()) == g


class TestEdits:

    def test_delete_vertices(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        h, mapping = delete_vertices(g, [1])
        assert mapping == {0: 0, 2: 1, 3: 2}
        assert h.edges() == [(1, 2)]
        with pytest.raises(ValueError):
            delete_vertices(g, [7])

    def test_add_and_delete_edge(self):
        g = build_graph(3, [(0, 1)])
        h = add_edge(g, 2, 1)
        assert h.edges() == [(0, 1), (1, 2)]
        assert delete_edge(h, 1, 2) == g
        with pytest.raises(ValueError):
            add_edge(h, 0, 1)
        with pytest.raises(ValueError):
            delete_edge(g, 0, 2)

    def test_disjoint_union(self):
        a = build_graph(2, [(0, 1)])
        b = build_graph(3, [(0, 2)])
        union, offsets = disjoint_union(a, b)
        assert offsets == [0, 2]
        assert union.n == 5
        assert union.edges() == [(0, 1), (2, 4)]

    def test_delete_vertices_map_on_random_graphs(self):
        for index in range(100):
            rng = instance_rng(41, index)
            n = int(rng.integers(1, 16))
            g = random_graph(n, float(rng.uniform(0.1, 0.7)), rng)
            gone = set(rng.choice(n, size=int(rng.integers(0, n + 1)), replace=False).tolist())
            h, mapping = delete_vertices(g, gone)
            survivors = [v for v in range(n) if v not in gone]
            assert list(mapping) == survivors
            assert list(mapping.values()) == list(range(len(survivors)))
            assert h.n == len(survivors)
            for u in survivors:
                for v in survivors:
                    assert g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v]), index

    def test_delete_vertices_named_shapes(self):
        h, _ = delete_vertices(generate(Cycle(5)), [2])
        assert nx.is_isomorphic(h.to_networkx(), generate(Path(4)).to_networkx())
        h, mapping = delete_vertices(generate(Tadpole(5, 6)), range(5, 11))
        assert mapping == {v: v for v in range(5)}
        assert h == generate(Cycle(5))
