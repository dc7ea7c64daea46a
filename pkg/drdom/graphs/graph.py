# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Simple undirected graphs over dense integer vertex ids.

`Graph` is immutable: every editing operation returns a new graph, and the operations
that drop vertices also return the old -> new id map so callers can carry labelings across.
"""
from collections import deque
from dataclasses import dataclass
import typing as tp

import networkx as nx


Edge = tp.Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices `0..n-1`.

    Args:
        n (int): Number of vertices.
        adjacency (tuple of tuple of int): Sorted neighbor ids for each vertex.
        edge_count (int): Number of edges.
    Use `build_graph` rather than the constructor, it checks the invariants.
    """
    n: int
    adjacency: tp.Tuple[tp.Tuple[int, ...], ...]
    edge_count: int

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tp.Tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tp.Tuple[int, ...]:
        return tuple(sorted(self.adjacency[v] + (v,)))

    def has_edge(self, u: int, v: int) -> bool:
        adj = self.adjacency[u]
        if len(adj) > len(self.adjacency[v]):
            u, v = v, u
            adj = self.adjacency[u]
        return v in adj

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def degree_sequence(self) -> tp.List[int]:
        """Degrees in non-increasing order."""
        return sorted((len(a) for a in self.adjacency), reverse=True)

    def edges(self) -> tp.List[Edge]:
        """All edges as `(u, v)` with `u < v`, in lexicographic order."""
        return [(u, v) for u, adj in enumerate(self.adjacency) for v in adj if u < v]

    def connected_components(self) -> tp.List[tp.List[int]]:
        """Vertex lists of the connected components, each sorted, ordered by smallest id."""
        seen = [False] * self.n
        components = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            component = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        component.append(u)
                        queue.append(u)
            components.append(sorted(component))
        return components

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.connected_components()) == 1

    def induced_subgraph(self, vertices: tp.Iterable[int]) -> tp.Tuple['Graph', tp.Dict[int, int]]:
        """Subgraph induced by `vertices`, renumbered in increasing id order.

        Returns:
            tuple of Graph and dict: The subgraph and the old -> new id map.
        """
        kept = sorted(set(vertices))
        for v in kept:
            _check_vertex(self, v)
        mapping = {v: i for i, v in enumerate(kept)}
        adjacency = tuple(
            tuple(mapping[u] for u in self.adjacency[v] if u in mapping)
            for v in kept)
        edge_count = sum(len(a) for a in adjacency) // 2
        return Graph(len(kept), adjacency, edge_count), mapping

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        """Graph from a networkx graph, nodes renumbered in sorted order."""
        nodes = sorted(graph.nodes())
        mapping = {v: i for i, v in enumerate(nodes)}
        return build_graph(len(nodes), [(mapping[u], mapping[v]) for u, v in graph.edges()])


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise ValueError(f"Vertex id {v!r} out of range for a graph of order {g.n}.")


def build_graph(n: int, edges: tp.Iterable[tp.Sequence[int]]) -> Graph:
    """Build a simple graph from an edge list.

    Duplicate and reversed pairs collapse into a single edge.

    Args:
        n (int): Number of vertices.
        edges (iterable of pairs): Edges given as pairs of vertex ids.
    Returns:
        Graph: The graph.
    """
    if n < 0:
        raise ValueError(f"Graph order must be non-negative, got {n}.")
    neighbors: tp.List[tp.Set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"Edge ({u}, {v}) has an endpoint out of range [0, {n}).")
        if u == v:
            raise ValueError(f"Self-loop ({u}, {v}) is not allowed in a simple graph.")
        neighbors[u].add(v)
        neighbors[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in neighbors)
    return Graph(n, adjacency, sum(len(s) for s in neighbors) // 2)


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def delete_vertices(g: Graph, vertices: tp.Iterable[int]) -> tp.Tuple[Graph, tp.Dict[int, int]]:
    """Remove `vertices` from `g`.

    Returns:
        tuple of Graph and dict: The remaining graph and the old -> new id map of survivors.
    """
    removed = set(vertices)
    for v in removed:
        _check_vertex(g, v)
    return g.induced_subgraph(v for v in range(g.n) if v not in removed)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError(f"Cannot add self-loop ({u}, {v}).")
    if g.has_edge(u, v):
        raise ValueError(f"Edge ({u}, {v}) already exists.")
    return build_graph(g.n, g.edges() + [(u, v)])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise ValueError(f"Edge ({u}, {v}) does not exist.")
    pair = (min(u, v), max(u, v))
    return build_graph(g.n, [e for e in g.edges() if e != pair])


def disjoint_union(*graphs: Graph) -> tp.Tuple[Graph, tp.List[int]]:
    """Disjoint union, each graph shifted by the total order of the graphs before it.

    Returns:
        tuple of Graph and list of int: The union and the id offset of each input graph.
    """
    offsets = []
    edges: tp.List[Edge] = []
    total = 0
    for graph in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in graph.edges())
        total += graph.n
    return build_graph(total, edges), offsets
