# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Split of a graph into its high-degree vertices and the paths between them.

The vertices of degree at least 3 form the set `A` (`Decomposition.high_degree`). Removing
them leaves components of maximum degree 2, which are classified as:

- maximal paths: both end vertices adjacent to `A`, with `X_P` the set of those neighbors;
- pendant paths: only one end adjacent to `A`, reported attachment end first;
- floating cycles and floating paths: components of the whole graph without any `A` vertex.
"""
from collections import Counter
from dataclasses import dataclass, field
import typing as tp

from .graph import Graph


Adjacency = tp.Union[tp.Sequence[tp.Collection[int]], tp.Mapping[int, tp.Collection[int]]]


@dataclass(frozen=True)
class MaximalPath:
    vertices: tp.Tuple[int, ...]
    attachments: tp.FrozenSet[int]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class PendantPath:
    vertices: tp.Tuple[int, ...]
    attachment: int

    @property
    def order(self) -> int:
        return len(self.vertices)


@dataclass
class Decomposition:
    high_degree: tp.FrozenSet[int] = frozenset()
    maximal_paths: tp.List[MaximalPath] = field(default_factory=list)
    pendant_paths: tp.List[PendantPath] = field(default_factory=list)
    floating_cycles: tp.List[tp.Tuple[int, ...]] = field(default_factory=list)
    floating_paths: tp.List[tp.Tuple[int, ...]] = field(default_factory=list)
    path_counts: tp.Dict[int, int] = field(default_factory=dict)

    def vertex_groups(self) -> tp.Iterator[tp.Sequence[int]]:
        yield sorted(self.high_degree)
        for path in self.maximal_paths:
            yield path.vertices
        for pendant in self.pendant_paths:
            yield pendant.vertices
        yield from self.floating_cycles
        yield from self.floating_paths

    def paths_at(self, u: int) -> tp.List[MaximalPath]:
        """Maximal paths with `u` in their attachment set."""
        return [p for p in self.maximal_paths if u in p.attachments]


def walk_component(adj: Adjacency, start: int, inside: tp.Collection[int]) -> tp.List[int]:
    """Walk a path or cycle of max degree 2 inside `inside`, starting from `start`.

    On a cycle the walk leaves `start` towards its smaller neighbor.
    """
    sequence = [start]
    prev, current = -1, start
    while True:
        step = [u for u in adj[current] if u in inside and u != prev]
        if not step:
            return sequence
        nxt = min(step)
        if nxt == start:
            return sequence
        prev, current = current, nxt
        sequence.append(current)


def decompose_adjacency(adj: Adjacency, vertices: tp.Iterable[int]) -> Decomposition:
    """Decompose the subgraph spanned by `vertices`, which must be closed under adjacency."""
    vertices = sorted(vertices)
    high = frozenset(v for v in vertices if len(adj[v]) >= 3)
    decomposition = Decomposition(high_degree=high)
    seen: tp.Set[int] = set(high)
    for start in vertices:
        if start in seen:
            continue
        component = {start}
        stack = [start]
        ends = []
        while stack:
            v = stack.pop()
            inner = 0
            for u in adj[v]:
                if u in high:
                    continue
                inner += 1
                if u not in component:
                    component.add(u)
                    stack.append(u)
            if inner < 2:
                ends.append(v)
        seen |= component
        ends.sort()
        if not ends:
            decomposition.floating_cycles.append(tuple(walk_component(adj, min(component), component)))
            continue
        sequence = walk_component(adj, ends[0], component)
        first = [u for u in adj[sequence[0]] if u in high]
        last = [u for u in adj[sequence[-1]] if u in high]
        if len(sequence) == 1:
            if len(first) == 2:
                decomposition.maximal_paths.append(MaximalPath(tuple(sequence), frozenset(first)))
            elif len(first) == 1:
                decomposition.pendant_paths.append(PendantPath(tuple(sequence), first[0]))
            else:
                decomposition.floating_paths.append(tuple(sequence))
        elif first and last:
            decomposition.maximal_paths.append(MaximalPath(tuple(sequence), frozenset(first + last)))
        elif first:
            decomposition.pendant_paths.append(PendantPath(tuple(sequence), first[0]))
        elif last:
            decomposition.pendant_paths.append(PendantPath(tuple(reversed(sequence)), last[0]))
        else:
            decomposition.floating_paths.append(tuple(sequence))
    decomposition.path_counts = dict(sorted(Counter(p.order for p in decomposition.maximal_paths).items()))
    return decomposition


def decompose(g: Graph) -> Decomposition:
    """Decompose `g` into high-degree vertices, maximal paths, pendant paths and floating pieces.

    Maximal paths are oriented with the smaller end id first.
    """
    return decompose_adjacency(g.adjacency, range(g.n))
