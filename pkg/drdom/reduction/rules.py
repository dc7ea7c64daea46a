# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Reduction rules of the constructive engine.

A rule inspects one connected component of the working graph and either declines or returns a
`Rewrite`: vertices to remove, edges to delete or add among the remaining vertices, and candidate
values for the removed vertices (sometimes also for a few kept ones). Deleting an edge never breaks a
DRDF of the thinner graph, so those rewrites carry one empty candidate. Once the reduced graph is
labeled, the engine undoes the rewrite and keeps the cheapest candidate after repair.

Standalone rewrites remove a piece together with a labeling that is a DRDF of the piece on its
own: the union with any DRDF of the rest is then a DRDF of the whole graph, no repair needed.

Rules are tried in the order of `RULES`. Sub-cases carry dotted ids (`R7.1` ... `R7.5`) and can be
masked individually, or as a family by their prefix.
"""
from dataclasses import dataclass, field
import logging
import typing as tp

import networkx as nx

from ..drdf import closed_form_cycle, closed_form_path
from ..graphs.decomposition import Decomposition, MaximalPath, PendantPath
from ..graphs.graph import Edge
from ..solvers.exact import gamma_dr
from .workgraph import WorkGraph


logger = logging.getLogger(__name__)

Values = tp.Dict[int, int]
BAILOUT = 'R∞-bailout'


@dataclass
class Rewrite:
    rule: str
    matched: tp.Tuple[int, ...]
    removed: tp.Tuple[int, ...]
    added_edges: tp.Tuple[Edge, ...] = ()
    candidates: tp.List[Values] = field(default_factory=list)
    standalone: bool = False
    deleted_edges: tp.Tuple[Edge, ...] = ()


@dataclass(frozen=True)
class Arm:
    """Maximal path seen from one of its attachments.

    `vertices` starts next to the hub, `far` is the attachment at the other end.
    """
    vertices: tp.Tuple[int, ...]
    far: int

    @property
    def order(self) -> int:
        return len(self.vertices)


def fits_share(weight: int, order: int) -> bool:
    """Whether a piece of `order` vertices labeled with `weight` stays within 12/11 per vertex."""
    return 11 * weight <= 12 * order


def path_values(vertices: tp.Sequence[int]) -> Values:
    if not vertices:
        return {}
    _, labeling = closed_form_path(len(vertices))
    return dict(zip(vertices, labeling))


def cycle_values(vertices: tp.Sequence[int]) -> Values:
    _, labeling = closed_form_cycle(len(vertices))
    return dict(zip(vertices, labeling))


class RuleContext:
    """Everything a rule may look at for the current component."""

    def __init__(self, work: WorkGraph, component: tp.Sequence[int], decomposition: Decomposition,
                 fallback_n: int, rule_mask: tp.Sequence[str] = (),
                 exact_timeout_s: tp.Optional[float] = None, memo: tp.Optional[dict] = None):
        self.work = work
        self.adj = work.adj
        self.component = component
        self.decomposition = decomposition
        self.fallback_n = fallback_n
        self.rule_mask = tuple(rule_mask)
        self.exact_timeout_s = exact_timeout_s
        self.memo = {} if memo is None else memo
        self.pendant_by_first: tp.Dict[int, PendantPath] = {p.vertices[0]: p for p in decomposition.pendant_paths}
        self.path_by_end: tp.Dict[int, MaximalPath] = {}
        for path in decomposition.maximal_paths:
            self.path_by_end[path.first] = path
            self.path_by_end[path.last] = path
        self._arms: tp.Optional[tp.Dict[int, tp.List[Arm]]] = None

    def enabled(self, rule: str) -> bool:
        return not any(rule == m or rule.startswith(m + '.') for m in self.rule_mask)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def arms(self, u: int) -> tp.List[Arm]:
        """Maximal paths joining `u` to another high-degree vertex, oriented away from `u`."""
        if self._arms is None:
            self._arms = {}
            for path in self.decomposition.maximal_paths:
                if len(path.attachments) != 2:
                    continue
                for hub in sorted(path.attachments):
                    far = next(x for x in path.attachments if x != hub)
                    vertices = path.vertices if hub in self.adj[path.first] else path.vertices[::-1]
                    self._arms.setdefault(hub, []).append(Arm(vertices, far))
        return self._arms.get(u, [])

    def fresh_edges(self, pairs: tp.Sequence[Edge]) -> tp.Optional[tp.Tuple[Edge, ...]]:
        """`pairs` as new edges, or None if one is a loop, already present or repeated."""
        seen: tp.Set[tp.FrozenSet[int]] = set()
        for u, v in pairs:
            key = frozenset((u, v))
            if u == v or v in self.adj[u] or key in seen:
                return None
            seen.add(key)
        return tuple(pairs)

    def solve_exact(self, vertices: tp.Iterable[int]) -> tp.Tuple[int, Values]:
        """Optimal labeling of the subgraph induced by `vertices`, memoized on its structure."""
        sub, ids = self.work.to_graph(vertices)
        key = (tuple(ids), sub.adjacency)
        if key not in self.memo:
            result = gamma_dr(sub, seed_from_construct=False, timeout_s=self.exact_timeout_s)
            self.memo[key] = (result.value, dict(zip(ids, result.witness)))
        return self.memo[key]


def _loops(ctx: RuleContext, order: tp.Optional[int] = None,
           degree: tp.Optional[int] = None) -> tp.Iterator[tp.Tuple[int, MaximalPath]]:
    """Maximal paths whose two ends hang from the same vertex `a`, i.e. cycles through `a`."""
    for path in ctx.decomposition.maximal_paths:
        if len(path.attachments) != 1:
            continue
        (a,) = path.attachments
        if order is not None and path.order != order:
            continue
        if degree is not None and ctx.degree(a) != degree:
            continue
        yield a, path


def _third_neighbor(ctx: RuleContext, a: int, path: MaximalPath) -> int:
    (b,) = [u for u in ctx.adj[a] if u != path.first and u != path.last]
    return b


def pendant_cycle(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Cycle hanging from the rest of the graph by a single edge."""
    for a, path in _loops(ctx, degree=3):
        cycle = (a,) + path.vertices
        weight, _ = closed_form_cycle(len(cycle))
        if fits_share(weight, len(cycle)):
            return Rewrite('R2', cycle, cycle, candidates=[cycle_values(cycle)], standalone=True)
    return None


def pendant_tadpole(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Tadpole hanging from the rest of the graph by its path end, or forming the whole component."""
    for a, path in _loops(ctx, degree=3):
        b = _third_neighbor(ctx, a, path)
        pendant = ctx.pendant_by_first.get(b)
        if pendant is not None and pendant.attachment == a:
            tail = pendant.vertices
        else:
            access = ctx.path_by_end.get(b)
            if access is None or len(access.attachments) != 2 or a not in access.attachments:
                continue
            tail = access.vertices if access.first == b else access.vertices[::-1]
        m, k = path.order + 1, len(tail)
        if m in (5, 7) and k in (2, 3, 5):
            continue
        piece = (a,) + path.vertices + tail
        if len(piece) <= ctx.fallback_n:
            weight, values = ctx.solve_exact(piece)
        else:
            spine = path.vertices + (a,) + tail
            weight, _ = closed_form_path(len(spine))
            values = path_values(spine)
        if fits_share(weight, len(piece)):
            return Rewrite('R3', piece, piece, candidates=[values], standalone=True)
    return None


def bridge_piece(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Small side of a bridge whose optimal labeling meets its share, e.g. a chain of 5-cycles."""
    if ctx.fallback_n < 1:
        return None
    graph = ctx.work.to_networkx(ctx.component)
    for u, v in sorted(tuple(sorted(e)) for e in nx.bridges(graph)):
        for near, far in ((u, v), (v, u)):
            side = ctx.work.side(far, near, ctx.fallback_n)
            if side is None:
                continue
            weight, values = ctx.solve_exact(side)
            if fits_share(weight, len(side)):
                return Rewrite('R4', (near, far), tuple(sorted(side)), candidates=[values], standalone=True)
    return None


def _splits_short_odd_cycle(work: WorkGraph, ends: Edge) -> bool:
    for x in ends:
        if work.degree(x) != 2:
            continue
        side = work.side(x, -1, 7)
        if side is not None and len(side) in (5, 7) and all(work.degree(y) == 2 for y in side):
            return True
    return False


def thin_edges(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Delete edges joining two vertices of degree at least 3, unless a 5- or 7-cycle splits off."""
    work = ctx.work
    deleted: tp.List[Edge] = []
    for v in sorted(ctx.component):
        for u in sorted(ctx.adj[v]):
            if u < v or work.degree(u) < 3 or work.degree(v) < 3:
                continue
            work.remove_edges([(v, u)])
            if _splits_short_odd_cycle(work, (v, u)):
                work.add_edges([(v, u)])
            else:
                deleted.append((v, u))
    work.add_edges(deleted)
    if not deleted:
        return None
    ends = tuple(sorted({x for edge in deleted for x in edge}))
    return Rewrite('R-thin', ends, (), deleted_edges=tuple(deleted), candidates=[{}])


def odd_path(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Contract an odd maximal path between two hubs to its middle vertex."""
    high = ctx.decomposition.high_degree
    for path in ctx.decomposition.maximal_paths:
        if len(path.attachments) != 2 or path.order % 2 == 0 or not 3 <= path.order <= 9:
            continue
        k = path.order // 2
        a1 = next(u for u in ctx.adj[path.first] if u in high)
        a2 = next(u for u in ctx.adj[path.last] if u in high)
        mid = path.vertices[k]
        added = ctx.fresh_edges([(a1, mid), (a2, mid)])
        if added is None:
            continue
        removed = tuple(x for x in path.vertices if x != mid)
        alternating = {x: 2 if i % 2 == 1 else 0 for i, x in enumerate(path.vertices) if x != mid}
        halves = {**path_values(path.vertices[:k]), **path_values(path.vertices[k + 1:])}
        return Rewrite('R5', path.vertices, removed, added, [alternating, halves])
    return None


def two_hubs(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Label a component with exactly two high-degree vertices directly."""
    high = ctx.decomposition.high_degree
    if len(high) != 2:
        return None
    values: Values = {a: 3 for a in high}
    for path in ctx.decomposition.maximal_paths:
        values[path.first] = values[path.last] = 0
        values.update(path_values(path.vertices[1:-1]))
    for pendant in ctx.decomposition.pendant_paths:
        values[pendant.vertices[0]] = 0
        values.update(path_values(pendant.vertices[1:]))
    if len(values) != len(ctx.component) or not fits_share(sum(values.values()), len(values)):
        return None
    return Rewrite('R6', tuple(sorted(high)), tuple(sorted(values)), candidates=[values], standalone=True)


def _hub_p2_p4(ctx: RuleContext, u: int, arms: tp.List[Arm]) -> tp.Optional[Rewrite]:
    if ctx.degree(u) != 3:
        return None
    for x in arms:
        if x.order != 2:
            continue
        for y in arms:
            if y.order != 4:
                continue
            (z,) = [w for w in ctx.adj[u] if w != x.vertices[0] and w != y.vertices[0]]
            y1, y2, y3, _ = y.vertices
            added = ctx.fresh_edges([(y3, x.vertices[0]), (y3, z)])
            if added is None:
                continue
            return Rewrite('R7.1', (u,) + x.vertices + y.vertices, (u, y1, y2), added,
                           [{u: 3, y1: 0, y2: 0}, {u: 0, y1: 0, y2: 3}])
    return None


def _hub_two_p2(ctx: RuleContext, u: int, arms: tp.List[Arm]) -> tp.Optional[Rewrite]:
    short = [arm for arm in arms if arm.order == 2]
    for i, x in enumerate(short):
        for y in short[i + 1:]:
            x1, x2 = x.vertices
            y1, y2 = y.vertices
            if x.far == y.far:
                added = ctx.fresh_edges([(x1, x.far)])
                if added is None:
                    continue
                return Rewrite('R7.2', (u,) + x.vertices + y.vertices, (x2,), added, [{x2: 0}, {x2: 2}])
            pairs = [(x2, y2)]
            for w in sorted(ctx.adj[u]):
                if w in (x1, y1):
                    continue
                for hub in (x.far, y.far):
                    if w != hub and hub not in ctx.adj[w] and (w, hub) not in pairs:
                        pairs.append((w, hub))
                        break
            added = ctx.fresh_edges(pairs)
            if added is None:
                continue
            return Rewrite('R7.2', (u,) + x.vertices + y.vertices, (x1, u, y1), added, [{u: 3, x1: 0, y1: 0}])
    return None


def _hub_long_even(ctx: RuleContext, u: int, arms: tp.List[Arm]) -> tp.Optional[Rewrite]:
    for arm in arms:
        if arm.order < 6 or arm.order % 2:
            continue
        before, second_last, last = arm.vertices[-3:]
        added = ctx.fresh_edges([(before, arm.far)])
        if added is None:
            continue
        return Rewrite('R7.3', (u,) + arm.vertices, (second_last, last), added,
                       [{second_last: 2, last: 0}, {second_last: 0, last: 3}])
    return None


def _hub_two_p4(ctx: RuleContext, u: int, arms: tp.List[Arm]) -> tp.Optional[Rewrite]:
    fours = [arm for arm in arms if arm.order == 4]
    for i, x in enumerate(fours):
        for y in fours[i + 1:]:
            if not (ctx.degree(u) >= 4 or (ctx.degree(u) == 3 and x.far == y.far)):
                continue
            y1, y2, y3, y4 = y.vertices
            added = ctx.fresh_edges([(u, y4)])
            if added is None:
                continue
            patterns = [(0, 3, 0), (3, 0, 0), (0, 0, 3)]
            return Rewrite('R7.4', (u,) + x.vertices + y.vertices, (y1, y2, y3), added,
                           [dict(zip((y1, y2, y3), p)) for p in patterns])
    return None


def _hub_p4_singles(ctx: RuleContext, u: int, arms: tp.List[Arm]) -> tp.Optional[Rewrite]:
    singles = {arm.vertices[0] for arm in arms if arm.order == 1}
    for arm in arms:
        if arm.order != 4:
            continue
        x1, x2 = arm.vertices[:2]
        others = sorted(w for w in ctx.adj[u] if w != x1)
        if not others or any(w not in singles for w in others):
            continue
        added = ctx.fresh_edges([(x2, w) for w in others])
        if added is None:
            continue
        return Rewrite('R7.5', (u,) + arm.vertices + tuple(others), (u, x1), added,
                       [{u: 2, x1: 0}, {u: 3, x1: 0}])
    return None


HUB_CASES: tp.List[tp.Tuple[str, tp.Callable[[RuleContext, int, tp.List[Arm]], tp.Optional[Rewrite]]]] = [
    ('R7.1', _hub_p2_p4),
    ('R7.2', _hub_two_p2),
    ('R7.3', _hub_long_even),
    ('R7.4', _hub_two_p4),
    ('R7.5', _hub_p4_singles),
]


def hub_paths(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Shorten the maximal paths around a high-degree vertex."""
    for u in sorted(ctx.decomposition.high_degree):
        arms = ctx.arms(u)
        if not arms:
            continue
        for rule, case in HUB_CASES:
            if not ctx.enabled(rule):
                continue
            rewrite = case(ctx, u, arms)
            if rewrite is not None:
                return rewrite
    return None


def hub_p4_pieces(ctx: RuleContext) -> tp.Optional[Rewrite]:
    """Remove a degree-3 hub together with its P4 arms (three P4, or two P4 and a P1)."""
    for u in sorted(ctx.decomposition.high_degree):
        if ctx.degree(u) != 3:
            continue
        arms = ctx.arms(u)
        fours = [arm for arm in arms if arm.order == 4]
        singles = [arm for arm in arms if arm.order == 1]
        if len(fours) == 3 and ctx.enabled('R8.1'):
            piece = (u,) + sum((arm.vertices for arm in fours), ())
            values = {x: 0 for x in piece}
            values[u] = 3
            for arm in fours:
                values[arm.vertices[2]] = 3
            return Rewrite('R8.1', piece, piece, candidates=[values], standalone=True)
        if len(fours) == 2 and len(singles) == 1 and ctx.enabled('R8.2'):
            piece = (u,) + fours[0].vertices + fours[1].vertices + singles[0].vertices
            values = {x: 0 for x in piece}
            values[u] = values[fours[0].vertices[2]] = values[fours[1].vertices[2]] = 3
            return Rewrite('R8.2', piece, piece, candidates=[values], standalone=True)
    return None


def _multiple_of_three(ctx: RuleContext) -> tp.Optional[Rewrite]:
    pieces = [p.vertices for p in ctx.decomposition.maximal_paths]
    pieces += [p.vertices for p in ctx.decomposition.pendant_paths]
    for vertices in pieces:
        if len(vertices) % 3 == 0:
            return Rewrite('R9.1', vertices, vertices, candidates=[path_values(vertices)], standalone=True)
    return None


def _five_cycle_slide(ctx: RuleContext) -> tp.Optional[Rewrite]:
    for a, path in _loops(ctx, order=4, degree=3):
        b = _third_neighbor(ctx, a, path)
        access = ctx.path_by_end.get(b)
        if access is None or len(access.attachments) != 2 or access.order not in (2, 3, 5):
            continue
        steps = access.vertices if access.first == b else access.vertices[::-1]
        far = next(x for x in access.attachments if x != a)
        hub = steps[2] if access.order >= 3 else far
        x1, x4 = path.first, path.last
        added = ctx.fresh_edges([(hub, x1), (hub, x4)])
        if added is None:
            continue
        q0, q1 = steps[0], steps[1]
        return Rewrite('R9.4', (a,) + path.vertices + steps, (a, q0, q1), added,
                       [{a: 3, q0: 0, q1: 0}, {a: 3, q0: 0, q1: 2}, {a: 3, q0: 0, q1: 2, x1: 0}])
    return None


def _seven_cycle(ctx: RuleContext) -> tp.Optional[Rewrite]:
    for a, path in _loops(ctx, order=6, degree=3):
        x1, x2, x3 = path.vertices[:3]
        added = ctx.fresh_edges([(a, x3)])
        if added is None:
            continue
        return Rewrite('R9.7', (a,) + path.vertices, (x1, x2), added, [{x1: 0, x2: 2}, {x1: 2, x2: 0}])
    return None


def _identified_cycle(ctx: RuleContext) -> tp.Optional[Rewrite]:
    for a, path in _loops(ctx):
        if ctx.degree(a) < 4:
            continue
        vertices = path.vertices
        inner = {vertices[0]: 0, vertices[-1]: 0, **path_values(vertices[1:-1]), a: 3}
        return Rewrite('R9.8', (a,) + vertices, vertices, (), [path_values(vertices), inner])
    return None


CYCLE_CASES = [
    ('R9.1', _multiple_of_three),
    ('R9.4', _five_cycle_slide),
    ('R9.7', _seven_cycle),
    ('R9.8', _identified_cycle),
]


def cycle_cases(ctx: RuleContext) -> tp.Optional[Rewrite]:
    for rule, case in CYCLE_CASES:
        if ctx.enabled(rule):
            rewrite = case(ctx)
            if rewrite is not None:
                return rewrite
    return None


def bailout(ctx: RuleContext) -> Rewrite:
    """Star at a maximum-degree vertex: center 3, leaves 0."""
    center = min(ctx.component, key=lambda v: (-ctx.degree(v), v))
    star = (center,) + tuple(sorted(ctx.adj[center]))
    values = {v: 0 for v in star}
    values[center] = 3
    return Rewrite(BAILOUT, star, star, candidates=[values], standalone=True)


RULES: tp.List[tp.Tuple[str, tp.Callable[[RuleContext], tp.Optional[Rewrite]]]] = [
    ('R2', pendant_cycle),
    ('R3', pendant_tadpole),
    ('R4', bridge_piece),
    ('R-thin', thin_edges),
    ('R5', odd_path),
    ('R6', two_hubs),
    ('R7', hub_paths),
    ('R8', hub_p4_pieces),
    ('R9', cycle_cases),
]
