# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Exhaustive enumeration of small graphs.

The default stream is labeled: every simple graph on `n` vertices passing the filters
appears exactly once, encoded by a bitmask over the vertex pairs. With `dedup=True` a single
representative per isomorphism class is produced instead.
"""
from functools import lru_cache
import itertools
import logging
import typing as tp

import networkx as nx

from .graph import Graph, build_graph


logger = logging.getLogger(__name__)

DEFAULT_CEILING = 8
ATLAS_MAX_ORDER = 7


class EnumerationLimitError(ValueError):
    """Raised when a request exceeds the order an exhaustive method supports."""


def _accept(g: Graph, min_degree: int, connected: bool) -> bool:
    if g.n and g.min_degree < min_degree:
        return False
    return not connected or g.is_connected()


def enumerate_small(n: int, min_degree: int = 0, connected: bool = False,
                    dedup: bool = False, ceiling: int = DEFAULT_CEILING) -> tp.Iterator[Graph]:
    """Stream the graphs on `n` vertices with minimum degree at least `min_degree`.

    Args:
        n (int): Graph order.
        min_degree (int): Minimum degree filter.
        connected (bool): Only yield connected graphs.
        dedup (bool): Yield one graph per isomorphism class instead of every labeled graph.
        ceiling (int): Largest order accepted.
    """
    if n < 0:
        raise ValueError(f"Graph order must be non-negative, got {n}.")
    if n > ceiling:
        raise EnumerationLimitError(f"Enumeration of order {n} exceeds the ceiling {ceiling}.")
    if dedup:
        yield from nonisomorphic_graphs(n, min_degree, connected)
        return
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        degrees = [0] * n
        edges = []
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                degrees[u] += 1
                degrees[v] += 1
                edges.append((u, v))
        if n and min(degrees) < min_degree:
            continue
        g = build_graph(n, edges)
        if connected and not g.is_connected():
            continue
        yield g


def count_labeled_naive(n: int, min_degree: int = 0, connected: bool = False) -> int:
    """Count labeled graphs by edge subsets of each size, independently from `enumerate_small`."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for size in range(len(pairs) + 1):
        for edges in itertools.combinations(pairs, size):
            if _accept(build_graph(n, edges), min_degree, connected):
                count += 1
    return count


def canonical_form(g: Graph) -> str:
    """Minimum adjacency string over the vertex orders that keep vertex classes in key order.

    A vertex key is its degree with the sorted degrees of its neighbors, refined once by the
    sorted keys of its neighbors. The string lists the upper triangle column by column, so orders
    are built one position at a time and a prefix above the best one is dropped. Two graphs are
    isomorphic iff their forms match.
    """
    if g.n > DEFAULT_CEILING:
        raise EnumerationLimitError(f"Canonical form limited to order {DEFAULT_CEILING}, got {g.n}.")
    base = {v: (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v)))) for v in range(g.n)}
    keys = {v: (base[v], tuple(sorted(base[u] for u in g.neighbors(v)))) for v in range(g.n)}
    slots = sorted(keys.values())
    best: tp.List[str] = []
    order: tp.List[int] = []
    columns: tp.List[str] = []

    def extend():
        nonlocal best
        j = len(order)
        if j == g.n:
            if not best or columns < best:
                best = list(columns)
            return
        for v in range(g.n):
            if v in order or keys[v] != slots[j]:
                continue
            column = ''.join('1' if g.has_edge(u, v) else '0' for u in order)
            columns.append(column)
            if not best or columns <= best[:j + 1]:
                order.append(v)
                extend()
                order.pop()
            columns.pop()

    extend()
    return f"{g.n}:{''.join(best)}"


@lru_cache(maxsize=None)
def _atlas(n: int) -> tp.Tuple[Graph, ...]:
    return tuple(Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n)


def _extensions(n: int) -> tp.Iterator[Graph]:
    # Every graph on n vertices is a graph on n - 1 vertices plus a vertex with some neighborhood.
    for base in _atlas(n - 1):
        edges = base.edges()
        for size in range(n):
            for neighborhood in itertools.combinations(range(n - 1), size):
                yield build_graph(n, edges + [(u, n - 1) for u in neighborhood])


def nonisomorphic_graphs(n: int, min_degree: int = 0, connected: bool = False) -> tp.List[Graph]:
    """One representative per isomorphism class of graphs on `n` vertices passing the filters.

    Orders up to 7 come from the networkx graph atlas. Order 8 extends the order 7 atlas by one
    vertex and keeps the first candidate of each `canonical_form`.
    """
    if n > DEFAULT_CEILING:
        raise EnumerationLimitError(f"Deduplicated enumeration limited to order {DEFAULT_CEILING}, got {n}.")
    if n <= ATLAS_MAX_ORDER:
        return [g for g in _atlas(n) if _accept(g, min_degree, connected)]
    forms: tp.Set[str] = set()
    found: tp.List[Graph] = []
    for g in _extensions(n):
        if not _accept(g, min_degree, connected):
            continue
        form = canonical_form(g)
        if form in forms:
            continue
        forms.add(form)
        found.append(g)
    logger.debug("Found %d isomorphism classes on %d vertices", len(found), n)
    return found
