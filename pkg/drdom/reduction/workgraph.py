# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Mutable graph the reduction engine edits in place.

Vertices keep their ids from the input graph. Removals hand back the removed adjacency so that
the engine can undo rewrites in reverse order while extending labelings.
"""
from collections import deque
import typing as tp

import networkx as nx

from ..graphs.graph import Edge, Graph


Saved = tp.Dict[int, tp.Set[int]]


class WorkGraph:
    def __init__(self, g: Graph):
        self.adj: tp.Dict[int, tp.Set[int]] = {v: set(a) for v, a in enumerate(g.adjacency)}

    def __contains__(self, v: int) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def remove_vertices(self, vertices: tp.Iterable[int]) -> Saved:
        """Remove `vertices`, returning their adjacency as it was for `restore`."""
        saved = {v: self.adj.pop(v) for v in vertices}
        for v, neighbors in saved.items():
            for u in neighbors:
                if u in self.adj:
                    self.adj[u].discard(v)
        return saved

    def restore(self, saved: Saved):
        self.adj.update(saved)
        for v, neighbors in saved.items():
            for u in neighbors:
                self.adj[u].add(v)

    def add_edges(self, edges: tp.Iterable[Edge]):
        for u, v in edges:
            assert u != v and v not in self.adj[u], f"Edge ({u}, {v}) cannot be added."
            self.adj[u].add(v)
            self.adj[v].add(u)

    def remove_edges(self, edges: tp.Iterable[Edge]):
        for u, v in edges:
            self.adj[u].discard(v)
            self.adj[v].discard(u)

    def components(self, vertices: tp.Iterable[int]) -> tp.List[tp.List[int]]:
        """Connected components among `vertices`, which must be closed under adjacency."""
        seen: tp.Set[int] = set()
        components = []
        for start in vertices:
            if start in seen:
                continue
            seen.add(start)
            component = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for u in self.adj[v]:
                    if u not in seen:
                        seen.add(u)
                        component.append(u)
                        queue.append(u)
            components.append(sorted(component))
        return components

    def side(self, start: int, blocked: int, limit: int) -> tp.Optional[tp.Set[int]]:
        """Vertices reachable from `start` without visiting `blocked`, or None past `limit` vertices."""
        side = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if u != blocked and u not in side:
                    side.add(u)
                    if len(side) > limit:
                        return None
                    queue.append(u)
        return side

    def to_graph(self, vertices: tp.Iterable[int]) -> tp.Tuple[Graph, tp.List[int]]:
        """Subgraph induced by `vertices` renumbered to `0..k-1`, with the ids of the new vertices."""
        ids = sorted(vertices)
        index = {v: i for i, v in enumerate(ids)}
        adjacency = tuple(tuple(sorted(index[u] for u in self.adj[v] if u in index)) for v in ids)
        return Graph(len(ids), adjacency, sum(len(a) for a in adjacency) // 2), ids

    def to_networkx(self, vertices: tp.Iterable[int]) -> nx.Graph:
        graph = nx.Graph()
        kept = set(vertices)
        graph.add_nodes_from(kept)
        graph.add_edges_from((v, u) for v in kept for u in self.adj[v] if u in kept and v < u)
        return graph
