# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Exact double Roman domination number by depth-first branch and bound.

Connected components are solved independently. Within a component, vertices are assigned in
order of decreasing degree (ties by id), trying values 3, 2, 0 (3, 2, 1, 0 with `allow_ones`).
Per vertex the search keeps the number of neighbors labeled 3 and 2 and the number of
unassigned neighbors, so a labeled 0 or 1 vertex is rejected as soon as its last neighbor is
fixed without satisfying it.

Lower bound. A vertex is covered when no future assignment is needed for it: it holds at
least 2, or has a neighbor labeled 3, or two neighbors labeled 2, or holds 1 with a neighbor
labeled 2. Only an assignment of a positive value to a vertex `w` can cover new vertices,
at most `deg(w) + 1` of them. With `U` uncovered vertices and `M` the largest closed
neighborhood among unassigned vertices (the next one in the order), at least `ceil(U / M)`
more positive assignments are needed, each costing at least 2 (at least 1 with `allow_ones`,
since a vertex labeled 1 may cover itself).
"""
from dataclasses import dataclass, replace
from enum import Enum
import logging
import time
import typing as tp

from ..drdf import Labeling
from ..graphs.graph import Graph


logger = logging.getLogger(__name__)


class SolveStatus(Enum):
    OPTIMAL = 'optimal'
    TIMEOUT = 'timeout'


@dataclass
class SolveOptions:
    """Options of `gamma_dr`.

    Args:
        allow_ones (bool): Search over {0, 1, 2, 3} instead of {0, 2, 3}.
        timeout_s (float, optional): Wall clock budget in seconds.
        initial_upper (int, optional): Only look for labelings of weight at most this value first,
            the search restarts from the all-3 labeling if there is none.
        seed_from_construct (bool): Start from the constructive engine's labeling, else all-3.
        check_every (int): Number of node expansions between clock checks.
    """
    allow_ones: bool = False
    timeout_s: tp.Optional[float] = None
    initial_upper: tp.Optional[int] = None
    seed_from_construct: bool = True
    check_every: int = 1024


@dataclass
class SolveResult:
    value: int
    witness: Labeling
    nodes_expanded: int
    elapsed: float
    status: SolveStatus
    lower: int
    upper: int

    @property
    def optimal(self) -> bool:
        return self.status == SolveStatus.OPTIMAL

    def to_record(self, g: Graph) -> dict:
        return {
            'n': g.n,
            'm': g.edge_count,
            'gamma_dr': self.value,
            'witness': list(self.witness.values),
            'nodes': self.nodes_expanded,
            'millis': round(self.elapsed * 1000, 3),
            'status': self.status.value,
            'lower': self.lower,
            'upper': self.upper,
        }


class _Timeout(Exception):
    pass


class _BranchAndBound:
    """Search over a single connected graph."""

    def __init__(self, g: Graph, allow_ones: bool, deadline: tp.Optional[float], check_every: int):
        self.g = g
        self.adj = g.adjacency
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.domain = (3, 2, 1, 0) if allow_ones else (3, 2, 0)
        self.unit = 1 if allow_ones else 2
        self.deadline = deadline
        self.check_every = max(1, check_every)
        self.value = [-1] * g.n
        self.cnt3 = [0] * g.n
        self.cnt2 = [0] * g.n
        self.free = [g.degree(v) for v in range(g.n)]
        self.weight = 0
        self.uncovered = g.n
        self.nodes = 0
        self.best_weight = 3 * g.n + 1
        self.best_values: tp.Optional[tp.List[int]] = None

    def root_bound(self) -> int:
        return self.unit * -(-self.g.n // (self.g.max_degree + 1))

    def _covered(self, w: int) -> bool:
        x = self.value[w]
        if x >= 2 or self.cnt3[w] >= 1 or self.cnt2[w] >= 2:
            return True
        return x == 1 and self.cnt2[w] >= 1

    def _uncovered_around(self, v: int) -> int:
        count = 0 if self._covered(v) else 1
        for u in self.adj[v]:
            if not self._covered(u):
                count += 1
        return count

    def _assign(self, v: int, x: int):
        before = self._uncovered_around(v)
        self.value[v] = x
        self.weight += x
        for u in self.adj[v]:
            self.free[u] -= 1
            if x == 3:
                self.cnt3[u] += 1
            elif x == 2:
                self.cnt2[u] += 1
        self.uncovered += self._uncovered_around(v) - before

    def _unassign(self, v: int):
        before = self._uncovered_around(v)
        x = self.value[v]
        self.value[v] = -1
        self.weight -= x
        for u in self.adj[v]:
            self.free[u] += 1
            if x == 3:
                self.cnt3[u] -= 1
            elif x == 2:
                self.cnt2[u] -= 1
        self.uncovered += self._uncovered_around(v) - before

    def _dead(self, w: int) -> bool:
        x = self.value[w]
        if self.free[w] or x < 0 or x >= 2:
            return False
        if x == 0:
            return self.cnt3[w] == 0 and self.cnt2[w] < 2
        return self.cnt3[w] + self.cnt2[w] == 0

    def _violates(self, v: int) -> bool:
        if self._dead(v):
            return True
        return any(self._dead(u) for u in self.adj[v])

    def _bound(self, depth: int) -> int:
        if depth + 1 >= self.g.n:
            return self.weight if self.uncovered == 0 else self.best_weight
        reach = len(self.adj[self.order[depth + 1]]) + 1
        return self.weight + self.unit * -(-self.uncovered // reach)

    def run(self):
        """Improve on `best_weight`, raise `_Timeout` when the deadline passes."""
        n = self.g.n
        order, domain = self.order, self.domain
        cursor = [0] * (n + 1)
        depth = 0
        while depth >= 0:
            if depth == n:
                if self.uncovered == 0 and self.weight < self.best_weight:
                    self.best_weight = self.weight
                    self.best_values = list(self.value)
                    logger.debug("Improved to %d after %d nodes", self.weight, self.nodes)
                depth -= 1
                continue
            v = order[depth]
            if self.value[v] >= 0:
                self._unassign(v)
            k = cursor[depth]
            advanced = False
            while k < len(domain):
                x = domain[k]
                k += 1
                self.nodes += 1
                if self.deadline is not None and self.nodes % self.check_every == 0:
                    if time.perf_counter() > self.deadline:
                        raise _Timeout()
                if self.weight + x >= self.best_weight:
                    continue
                self._assign(v, x)
                if not self._violates(v) and self._bound(depth) < self.best_weight:
                    cursor[depth] = k
                    depth += 1
                    cursor[depth] = 0
                    advanced = True
                    break
                self._unassign(v)
            if not advanced:
                cursor[depth] = 0
                depth -= 1


def _seed(g: Graph, options: SolveOptions) -> tp.Tuple[int, tp.Optional[tp.List[int]]]:
    if options.initial_upper is not None:
        return options.initial_upper + 1, None
    if options.seed_from_construct:
        from ..reduction.engine import construct_drdf
        labeling, _ = construct_drdf(g, fallback_n=0, rescue_n=0)
        return labeling.weight, list(labeling.values)
    return 3 * g.n, [3] * g.n


def _solve_connected(g: Graph, options: SolveOptions,
                     deadline: tp.Optional[float]) -> tp.Tuple[int, int, tp.List[int], int, bool]:
    """Returns (lower, upper, witness values, nodes, timed_out)."""
    nodes = 0
    best_weight, best_values = _seed(g, options)
    for _ in range(2):
        search = _BranchAndBound(g, options.allow_ones, deadline, options.check_every)
        search.best_weight, search.best_values = best_weight, best_values
        try:
            search.run()
        except _Timeout:
            nodes += search.nodes
            values = search.best_values or [3] * g.n
            upper = sum(values)
            return min(search.root_bound(), upper), upper, values, nodes, True
        nodes += search.nodes
        if search.best_values is not None:
            return search.best_weight, search.best_weight, search.best_values, nodes, False
        logger.debug("No labeling of weight <= %d, restarting from all-3", best_weight - 1)
        best_weight, best_values = 3 * g.n, [3] * g.n
    raise RuntimeError("Branch and bound finished without a labeling.")


def gamma_dr(g: Graph, options: tp.Optional[SolveOptions] = None, **overrides: tp.Any) -> SolveResult:
    """Exact double Roman domination number of `g` with a witness labeling.

    Args:
        g (Graph): Non-empty graph.
        options (SolveOptions, optional): Solver options, fields can also be given as keywords.
    Returns:
        SolveResult: Value and witness. On timeout, `status` is `TIMEOUT`, `value` is the best weight
            found, and `lower` / `upper` bracket the true value.
    """
    options = replace(options or SolveOptions(), **overrides)
    if g.n == 0:
        raise ValueError("gamma_dr requires a non-empty graph.")
    start = time.perf_counter()
    deadline = None if options.timeout_s is None else start + options.timeout_s
    components = g.connected_components()
    if len(components) > 1 and options.initial_upper is not None:
        logger.debug("Ignoring initial_upper=%d on a graph with %d components",
                     options.initial_upper, len(components))
        options = replace(options, initial_upper=None)
    values = [0] * g.n
    lower = upper = nodes = 0
    timed_out = False
    for component in components:
        sub, mapping = g.induced_subgraph(component)
        part_lower, part_upper, part_values, part_nodes, part_timeout = _solve_connected(sub, options, deadline)
        for v in component:
            values[v] = part_values[mapping[v]]
        lower += part_lower
        upper += part_upper
        nodes += part_nodes
        timed_out = timed_out or part_timeout
    elapsed = time.perf_counter() - start
    status = SolveStatus.TIMEOUT if timed_out else SolveStatus.OPTIMAL
    if timed_out:
        logger.warning("gamma_dr timed out after %.3fs on n=%d, bounds [%d, %d]", elapsed, g.n, lower, upper)
    else:
        logger.debug("gamma_dr(n=%d) = %d in %.3fs, %d nodes", g.n, upper, elapsed, nodes)
    return SolveResult(upper, Labeling(tuple(values)), nodes, elapsed, status, lower, upper)
