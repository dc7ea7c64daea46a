# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Generators for the graph families used throughout the toolkit.

Every family fixes its vertex numbering so that callers can refer to structural
vertices by id:

- `Cycle(n)`: vertices `0..n-1` in cyclic order.
- `Path(n)`: vertices `0..n-1` in path order.
- `Complete(n)`: the complete graph on `0..n-1`.
- `Tadpole(m, k)`: cycle `0..m-1`, path `m..m+k-1`, joined by the edge `0 - m`.
- `Spider(legs)`: center `0`, legs laid out one after the other, each leg's first vertex adjacent to `0`.
- `QGraph()`: 5-cycles on `0..4` and `5..9` joined by the edge `0 - 5`.
- `GQ(base)`: base vertex `i` is identified with vertex `0` of a copy of Q whose other
  vertices `j = 1..9` get id `b + 9 * i + (j - 1)`, with `b` the base order.
- `GH(base)`: base vertex `i` is a hub joined to the first vertex of two 5-cycles
  occupying `b + 10 * i + 0..4` and `b + 10 * i + 5..9`.
- `StarOfTadpoles(tadpoles, attached_cycles, identified_cycles)`: hub `0`; each tadpole is
  numbered like `Tadpole` after the previous pieces and joined to the hub by the last
  path vertex; each attached cycle is joined to the hub by its first vertex; each identified
  cycle passes through the hub.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
import logging
import typing as tp

from .graph import Edge, Graph, build_graph


logger = logging.getLogger(__name__)


def _cycle_edges(vertices: tp.Sequence[int]) -> tp.List[Edge]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def _path_edges(vertices: tp.Sequence[int]) -> tp.List[Edge]:
    return [(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]


class FamilySpec(ABC):
    """Abstract description of a generated graph family member."""
    name: tp.ClassVar[str] = ''

    def validate(self) -> None:
        """Raise `ValueError` naming the violated constraint, if any."""

    @abstractmethod
    def build(self) -> Graph:
        ...

    @abstractmethod
    def expected_degrees(self) -> tp.List[int]:
        """Closed-form degree sequence in non-increasing order."""
        ...

    @classmethod
    def parse(cls, name: str, **params: tp.Any) -> 'FamilySpec':
        """Family spec from its registered name, e.g. `FamilySpec.parse('tadpole', m=5, k=6)`."""
        try:
            klass = FAMILIES[name.lower().replace('-', '_')]
        except KeyError:
            raise ValueError(f"Unknown family {name!r}, expected one of {sorted(FAMILIES)}.")
        try:
            return klass(**params)
        except TypeError as exc:
            raise ValueError(f"Invalid parameters {params} for family {name!r}: {exc}")


def _require(condition: bool, message: str):
    if not condition:
        raise ValueError(message)


@dataclass(frozen=True)
class Cycle(FamilySpec):
    n: int
    name: tp.ClassVar[str] = 'cycle'

    def validate(self):
        _require(self.n >= 3, f"Cycle requires n >= 3, got n={self.n}.")

    def build(self) -> Graph:
        return build_graph(self.n, _cycle_edges(range(self.n)))

    def expected_degrees(self):
        return [2] * self.n


@dataclass(frozen=True)
class Path(FamilySpec):
    n: int
    name: tp.ClassVar[str] = 'path'

    def validate(self):
        _require(self.n >= 1, f"Path requires n >= 1, got n={self.n}.")

    def build(self) -> Graph:
        return build_graph(self.n, _path_edges(range(self.n)))

    def expected_degrees(self):
        if self.n == 1:
            return [0]
        return [2] * (self.n - 2) + [1, 1]


@dataclass(frozen=True)
class Complete(FamilySpec):
    n: int
    name: tp.ClassVar[str] = 'complete'

    def validate(self):
        _require(self.n >= 1, f"Complete requires n >= 1, got n={self.n}.")

    def build(self) -> Graph:
        return build_graph(self.n, [(u, v) for u in range(self.n) for v in range(u + 1, self.n)])

    def expected_degrees(self):
        return [self.n - 1] * self.n


@dataclass(frozen=True)
class Tadpole(FamilySpec):
    """Cycle of length `m` with a path of `k` vertices hanging from cycle vertex 0."""
    m: int
    k: int
    name: tp.ClassVar[str] = 'tadpole'

    def validate(self):
        _require(self.m >= 3, f"Tadpole requires m >= 3, got m={self.m}.")
        _require(self.k >= 1, f"Tadpole requires k >= 1, got k={self.k}.")

    def build(self) -> Graph:
        return build_graph(self.m + self.k, _tadpole_edges(self.m, self.k, 0))

    def expected_degrees(self):
        return [3] + [2] * (self.m + self.k - 2) + [1]


def _tadpole_edges(m: int, k: int, offset: int) -> tp.List[Edge]:
    cycle = list(range(offset, offset + m))
    path = list(range(offset + m, offset + m + k))
    return _cycle_edges(cycle) + _path_edges(path) + [(cycle[0], path[0])]


@dataclass(frozen=True)
class Spider(FamilySpec):
    """Tree with a single branching center, given by its leg lengths."""
    legs: tp.Tuple[int, ...]
    name: tp.ClassVar[str] = 'spider'

    def __post_init__(self):
        object.__setattr__(self, 'legs', tuple(int(x) for x in self.legs))

    def validate(self):
        _require(len(self.legs) >= 3, f"Spider requires at least 3 legs, got {len(self.legs)}.")
        _require(all(x >= 1 for x in self.legs), f"Spider legs must have length >= 1, got {list(self.legs)}.")

    def build(self) -> Graph:
        n = 1 + sum(self.legs)
        edges: tp.List[Edge] = []
        offset = 1
        for length in self.legs:
            leg = list(range(offset, offset + length))
            edges.append((0, leg[0]))
            edges.extend(_path_edges(leg))
            offset += length
        return build_graph(n, edges)

    def expected_degrees(self):
        degrees = [len(self.legs)]
        for length in self.legs:
            degrees.extend([2] * (length - 1) + [1])
        return sorted(degrees, reverse=True)


@dataclass(frozen=True)
class QGraph(FamilySpec):
    """Two 5-cycles joined by a single edge."""
    name: tp.ClassVar[str] = 'q'

    def build(self) -> Graph:
        return build_graph(10, _cycle_edges(range(5)) + _cycle_edges(range(5, 10)) + [(0, 5)])

    def expected_degrees(self):
        return [3, 3] + [2] * 8


@dataclass(frozen=True)
class GQ(FamilySpec):
    """A copy of Q hanging from every vertex of `base`, sharing Q's vertex 0."""
    base: Graph
    name: tp.ClassVar[str] = 'gq'

    def validate(self):
        _require(self.base.n >= 1, "GQ requires a base graph with at least one vertex.")

    def build(self) -> Graph:
        b = self.base.n
        q_edges = QGraph().build().edges()
        edges = list(self.base.edges())
        for i in range(b):
            ids = [i] + [b + 9 * i + (j - 1) for j in range(1, 10)]
            edges.extend((ids[u], ids[v]) for u, v in q_edges)
        return build_graph(10 * b, edges)

    def expected_degrees(self):
        degrees = []
        for i in range(self.base.n):
            degrees.extend([self.base.degree(i) + 3, 3] + [2] * 8)
        return sorted(degrees, reverse=True)


@dataclass(frozen=True)
class GH(FamilySpec):
    """Every base vertex becomes a hub joined to one vertex of each of two disjoint 5-cycles."""
    base: Graph
    name: tp.ClassVar[str] = 'gh'

    def validate(self):
        _require(self.base.n >= 1, "GH requires a base graph with at least one vertex.")

    def build(self) -> Graph:
        b = self.base.n
        edges = list(self.base.edges())
        for i in range(b):
            first = b + 10 * i
            second = first + 5
            edges.extend(_cycle_edges(range(first, first + 5)))
            edges.extend(_cycle_edges(range(second, second + 5)))
            edges.extend([(i, first), (i, second)])
        return build_graph(11 * b, edges)

    def expected_degrees(self):
        degrees = []
        for i in range(self.base.n):
            degrees.extend([self.base.degree(i) + 2, 3, 3] + [2] * 8)
        return sorted(degrees, reverse=True)


@dataclass(frozen=True)
class StarOfTadpoles(FamilySpec):
    """Tadpoles and cycles gathered around a common hub `0`.

    Args:
        tadpoles (tuple of (m, k)): Tadpoles joined to the hub by their path end.
        attached_cycles (tuple of int): Cycle lengths, each joined to the hub by one edge.
        identified_cycles (tuple of int): Cycle lengths, each passing through the hub.
    """
    tadpoles: tp.Tuple[tp.Tuple[int, int], ...] = field(default_factory=tuple)
    attached_cycles: tp.Tuple[int, ...] = field(default_factory=tuple)
    identified_cycles: tp.Tuple[int, ...] = field(default_factory=tuple)
    name: tp.ClassVar[str] = 'star_of_tadpoles'

    def __post_init__(self):
        object.__setattr__(self, 'tadpoles', tuple((int(m), int(k)) for m, k in self.tadpoles))
        object.__setattr__(self, 'attached_cycles', tuple(int(m) for m in self.attached_cycles))
        object.__setattr__(self, 'identified_cycles', tuple(int(m) for m in self.identified_cycles))

    @property
    def piece_count(self) -> int:
        return len(self.tadpoles) + len(self.attached_cycles) + len(self.identified_cycles)

    def validate(self):
        _require(self.piece_count >= 2,
                 f"StarOfTadpoles requires at least 2 pieces in total, got {self.piece_count}.")
        for m, k in self.tadpoles:
            Tadpole(m, k).validate()
        for m in self.attached_cycles + self.identified_cycles:
            _require(m >= 3, f"StarOfTadpoles cycles require length >= 3, got {m}.")

    def build(self) -> Graph:
        edges: tp.List[Edge] = []
        offset = 1
        for m, k in self.tadpoles:
            edges.extend(_tadpole_edges(m, k, offset))
            edges.append((0, offset + m + k - 1))
            offset += m + k
        for m in self.attached_cycles:
            edges.extend(_cycle_edges(range(offset, offset + m)))
            edges.append((0, offset))
            offset += m
        for m in self.identified_cycles:
            edges.extend(_cycle_edges([0] + list(range(offset, offset + m - 1))))
            offset += m - 1
        return build_graph(offset, edges)

    def expected_degrees(self):
        hub = len(self.tadpoles) + len(self.attached_cycles) + 2 * len(self.identified_cycles)
        degrees = [hub]
        for m, k in self.tadpoles:
            degrees.extend([3] + [2] * (m + k - 1))
        for m in self.attached_cycles:
            degrees.extend([3] + [2] * (m - 1))
        for m in self.identified_cycles:
            degrees.extend([2] * (m - 1))
        return sorted(degrees, reverse=True)


FAMILIES: tp.Dict[str, tp.Type[FamilySpec]] = {
    'cycle': Cycle,
    'path': Path,
    'complete': Complete,
    'tadpole': Tadpole,
    'spider': Spider,
    'q': QGraph,
    'gq': GQ,
    'gh': GH,
    'star_of_tadpoles': StarOfTadpoles,
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by `spec` after checking its constraints."""
    spec.validate()
    graph = spec.build()
    logger.debug("Generated %s: n=%d, m=%d", spec, graph.n, graph.edge_count)
    return graph


def parse_family(text: str) -> FamilySpec:
    """Family spec from `name` or `name:key=value,key=value`, e.g. `tadpole:m=5,k=6`.

    Values are integers, or `-`-separated integer lists for spider legs (`spider:legs=1-2-3`).
    Families built on a base graph (`gq`, `gh`) are not expressible in this form.
    """
    name, _, rest = text.partition(':')
    params: tp.Dict[str, tp.Any] = {}
    for item in filter(None, rest.split(',')):
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep:
            raise ValueError(f"Invalid family parameter {item!r} in {text!r}, expected key=value.")
        try:
            params[key] = tuple(int(x) for x in value.split('-')) if key == 'legs' else int(value)
        except ValueError:
            raise ValueError(f"Invalid value {value!r} for {key!r} in {text!r}.")
    spec = FamilySpec.parse(name.strip(), **params)
    spec.validate()
    return spec
