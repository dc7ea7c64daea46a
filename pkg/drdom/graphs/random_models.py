# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Seeded random graph models.

All models take a `numpy.random.Generator`; use `drdom.utils.utils.instance_rng` to derive
one generator per instance index from a single seed.

`uniform_min_deg_2` samples G(n, p) with the fixed edge probability schedule
`p_c = min(1, c * ln(n) / n)` for `c` in `DEFAULT_SCHEDULE`, trying `attempts` samples at
each level and returning the first one with minimum degree at least 2. If every sample is
rejected, the last sample is completed by joining each deficient vertex to random non-neighbors.
"""
import logging
import math
import typing as tp

import numpy as np

from .families import Complete, Cycle, GH, Spider, StarOfTadpoles, Tadpole, generate
from .graph import Edge, Graph, build_graph


logger = logging.getLogger(__name__)

DEFAULT_SCHEDULE: tp.Tuple[float, ...] = (1.0, 1.5, 2.0, 3.0)
DEFAULT_ATTEMPTS = 20
MODELS = ('uniform-min-deg-2', 'cycle-union', 'family')


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rows, cols = np.triu_indices(n, 1)
    mask = rng.random(len(rows)) < p
    return build_graph(n, zip(rows[mask].tolist(), cols[mask].tolist()))


def _densify(g: Graph, rng: np.random.Generator, min_degree: int = 2) -> Graph:
    neighbors = [set(a) for a in g.adjacency]
    for v in range(g.n):
        while len(neighbors[v]) < min_degree:
            candidates = [u for u in range(g.n) if u != v and u not in neighbors[v]]
            u = int(rng.choice(candidates))
            neighbors[v].add(u)
            neighbors[u].add(v)
    return build_graph(g.n, [(u, v) for u in range(g.n) for v in neighbors[u] if u < v])


def uniform_min_deg_2(n: int, rng: np.random.Generator,
                      schedule: tp.Sequence[float] = DEFAULT_SCHEDULE,
                      attempts: int = DEFAULT_ATTEMPTS) -> Graph:
    if n < 3:
        raise ValueError(f"A simple graph with minimum degree 2 needs n >= 3, got n={n}.")
    last: tp.Optional[Graph] = None
    for c in schedule:
        p = min(1.0, c * math.log(n) / n)
        for _ in range(attempts):
            last = random_graph(n, p, rng)
            if last.min_degree >= 2:
                return last
    assert last is not None, "empty probability schedule"
    logger.debug("Rejection sampling exhausted for n=%d, completing the last sample", n)
    return _densify(last, rng)


def _composition(total: int, parts: int, rng: np.random.Generator) -> tp.List[int]:
    """Random composition of `total` into `parts` positive integers."""
    cuts = sorted(rng.choice(np.arange(1, total), size=parts - 1, replace=False).tolist())
    bounds = [0] + cuts + [total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def cycle_union(n: int, rng: np.random.Generator) -> Graph:
    """Disjoint cycles covering all `n` vertices, plus a few random chords."""
    if n < 3:
        raise ValueError(f"cycle-union needs n >= 3, got n={n}.")
    edges: tp.List[Edge] = []
    start, remaining = 0, n
    while remaining:
        length = int(rng.integers(3, remaining + 1))
        if remaining - length < 3:
            length = remaining
        edges.extend((start + i, start + (i + 1) % length) for i in range(length))
        start += length
        remaining -= length
    for _ in range(int(rng.integers(0, n // 4 + 1))):
        u, v = rng.choice(n, size=2, replace=False).tolist()
        edges.append((u, v))
    return build_graph(n, edges)


def random_spider(max_n: int, rng: np.random.Generator, min_n: int = 4) -> Spider:
    """Spider with order uniform in `[min_n, max_n]` and a random number of legs."""
    if max_n < 4 or min_n > max_n:
        raise ValueError(f"A spider needs order at least 4, got range [{min_n}, {max_n}].")
    n = int(rng.integers(max(4, min_n), max_n + 1))
    legs = int(rng.integers(3, n))
    return Spider(tuple(_composition(n - 1, legs, rng)))


def random_family(n: int, rng: np.random.Generator) -> Graph:
    """Random member of the generated families with order close to `n`."""
    if n < 4:
        return generate(Cycle(n) if n >= 3 else Complete(max(n, 1)))
    kind = str(rng.choice(['tadpole', 'spider', 'star_of_tadpoles', 'gh', 'cycle']))
    if kind == 'tadpole':
        m = int(rng.integers(3, n))
        return generate(Tadpole(m, n - m))
    if kind == 'spider':
        return generate(Spider(tuple(_composition(n - 1, int(rng.integers(3, n)), rng))))
    if kind == 'gh':
        base = random_graph(max(1, n // 11), 0.5, rng)
        return generate(GH(base))
    if kind == 'star_of_tadpoles':
        tadpoles: tp.List[tp.Tuple[int, int]] = []
        cycles: tp.List[int] = []
        size = 1
        while size < n or len(tadpoles) + len(cycles) < 2:
            if rng.random() < 0.5:
                m, k = int(rng.integers(3, 8)), int(rng.integers(1, 7))
                tadpoles.append((m, k))
                size += m + k
            else:
                m = int(rng.integers(3, 8))
                cycles.append(m)
                size += m
        return generate(StarOfTadpoles(tuple(tadpoles), tuple(cycles)))
    return generate(Cycle(n))


def sample(model: str, n: int, rng: np.random.Generator,
           schedule: tp.Sequence[float] = DEFAULT_SCHEDULE, attempts: int = DEFAULT_ATTEMPTS) -> Graph:
    """Draw one graph from the named model. `schedule` and `attempts` only apply to `uniform-min-deg-2`."""
    if model == 'uniform-min-deg-2':
        return uniform_min_deg_2(n, rng, schedule, attempts)
    if model == 'cycle-union':
        return cycle_union(n, rng)
    if model == 'family':
        return random_family(n, rng)
    raise ValueError(f"Unknown random model {model!r}, expected one of {MODELS}.")
