# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Constructive double Roman dominating functions by reduction.

The engine labels the graph component by component on a `WorkGraph`:

- components of maximum degree at most 2 are paths or cycles and get their closed-form labeling (R1);
- components of at most `fallback_n` vertices are solved exactly;
- otherwise a rule of `rules.RULES` rewrites the component, the reduced components are labeled
  recursively, and the rewrite is undone while extending their labeling.

Every rewrite removes at least one vertex or one edge, so the recursion terminates.

A component with minimum degree at least 2 and order at least 5 is expected to end up within
its share of 12 per 11 vertices. When the first matching rule misses that share, the engine
tries a local search on the result, then the next matching rules, keeping the lightest labeling,
and finally an exact solve when the component is small enough. Alternatives are bounded by
`max_retries` per run. Below `max_depth` nested rewrites, components are reduced in a single
greedy pass without alternatives.

Extensions of non-standalone rewrites go through `repair_vertex` on every vertex whose
neighborhood or value changed, which makes the result a DRDF whatever the candidate values were.
When no candidate stays within the rule's share, the extension searches all assignments of the
removed vertices and raises of their kept neighbors, as long as there are few of them.
"""
from dataclasses import dataclass, field, replace
import itertools
import logging
import time
import typing as tp

from ..drdf import Labeling, closed_form_cycle, closed_form_path, improve, repair_vertex, validate
from ..graphs.decomposition import decompose_adjacency, walk_component
from ..graphs.graph import Graph
from ..solvers.exact import gamma_dr
from .rules import BAILOUT, RULES, Rewrite, RuleContext, bailout, fits_share
from .trace import ReductionTrace, TerminalRecord, TraceStep
from .workgraph import Saved, WorkGraph


logger = logging.getLogger(__name__)

DEFAULT_FALLBACK_N = 12
LOCAL_SEARCH_MAX = 5


@dataclass
class ConstructOptions:
    """Options of `construct_drdf`.

    Args:
        fallback_n (int): Components of at most this order are solved exactly.
        rule_mask (tuple of str): Rule ids to skip. A family id such as `R7` masks all its cases.
        exact_timeout_s (float, optional): Budget of each exact solve.
        max_retries (int): Alternative rewrites tried over the whole run once a component misses
            its share.
        rescue_n (int): Components of at most this order that still miss their share are solved
            exactly. 0 disables it.
        rescue_timeout_s (float, optional): Budget of each of those exact solves.
        max_depth (int): Nesting of rewrites beyond which components are reduced greedily.
    """
    fallback_n: int = DEFAULT_FALLBACK_N
    rule_mask: tp.Tuple[str, ...] = field(default_factory=tuple)
    exact_timeout_s: tp.Optional[float] = None
    max_retries: int = 64
    rescue_n: int = 40
    rescue_timeout_s: tp.Optional[float] = 2.
    max_depth: int = 200


@dataclass
class _Outcome:
    """Labeling of one component with the part of the trace that produced it."""
    values: tp.Dict[int, int]
    steps: tp.List[TraceStep] = field(default_factory=list)
    terminals: tp.List[TerminalRecord] = field(default_factory=list)
    fallback_used: bool = False

    @property
    def weight(self) -> int:
        return sum(self.values.values())

    def within(self, order: int) -> bool:
        return fits_share(self.weight, order)


@dataclass
class _Terminal:
    saved: Saved
    values: tp.Dict[int, int]


@dataclass
class _Applied:
    rewrite: Rewrite
    saved: Saved
    step: TraceStep


class _Overlay(dict):
    """Tentative values on top of the committed ones."""

    def __init__(self, base: tp.Mapping[int, int]):
        super().__init__()
        self.base = base

    def __missing__(self, v: int) -> int:
        return self.base[v]


def _is_masked(rule: str, mask: tp.Sequence[str]) -> bool:
    return any(rule == m or rule.startswith(m + '.') for m in mask)


def _closed_form(work: WorkGraph, component: tp.List[int]) -> Rewrite:
    inside = set(component)
    if all(len(work.adj[v]) == 2 for v in component):
        sequence = walk_component(work.adj, component[0], inside)
        _, labeling = closed_form_cycle(len(sequence))
    else:
        start = next(v for v in component if len(work.adj[v]) <= 1)
        sequence = walk_component(work.adj, start, inside)
        _, labeling = closed_form_path(len(sequence))
    assert len(sequence) == len(component), "component of max degree 2 is not a single path or cycle"
    matched = tuple(sequence)
    return Rewrite('R1', matched, matched, candidates=[dict(zip(matched, labeling))], standalone=True)


def _apply(work: WorkGraph, rewrite: Rewrite) -> Saved:
    saved = work.remove_vertices(rewrite.removed)
    work.remove_edges(rewrite.deleted_edges)
    work.add_edges(rewrite.added_edges)
    return saved


def _undo(work: WorkGraph, rewrite: Rewrite, saved: Saved):
    work.remove_edges(rewrite.added_edges)
    work.add_edges(rewrite.deleted_edges)
    work.restore(saved)


def _extend(work: WorkGraph, values: tp.Dict[int, int], rewrite: Rewrite) -> int:
    """Assign the removed vertices of `rewrite`, returning the weight added to `values`."""
    if rewrite.standalone:
        chosen = min(rewrite.candidates, key=lambda c: sum(c.values()))
        for v in rewrite.removed:
            values[v] = chosen[v]
        return sum(chosen[v] for v in rewrite.removed)
    removed = set(rewrite.removed)
    touched = set(removed)
    for u, v in rewrite.added_edges:
        touched.add(u)
        touched.add(v)
    for candidate in rewrite.candidates:
        touched.update(candidate)
    region = set(touched)
    for v in touched:
        region.update(work.adj[v])
    order = sorted(region)

    def evaluate(assignment: tp.Mapping[int, int]) -> tp.Tuple[int, _Overlay]:
        overlay = _Overlay(values)
        for v in removed:
            overlay[v] = 0
        for v, x in assignment.items():
            overlay[v] = x if v in removed else max(values[v], x)
        for v in order:
            repair_vertex(work.adj, overlay, v)
        return sum(x - values.get(v, 0) for v, x in overlay.items()), overlay

    assert rewrite.candidates, f"rule {rewrite.rule} offered no candidate"
    best = min((evaluate(c) for c in rewrite.candidates), key=lambda item: item[0])
    if not fits_share(best[0], len(removed)) and 0 < len(removed) <= LOCAL_SEARCH_MAX:
        anchors = sorted({u for v in removed for u in work.adj[v] if u not in removed})
        variables = sorted(removed) + anchors[:LOCAL_SEARCH_MAX - len(removed)]
        choices = [(0, 2, 3) if v in removed else tuple(sorted({values[v], 2, 3}))
                   for v in variables]
        for combo in itertools.product(*choices):
            delta, overlay = evaluate(dict(zip(variables, combo)))
            if delta < best[0]:
                best = (delta, overlay)
    delta, overlay = best
    for v, x in overlay.items():
        values[v] = x
    return delta


class _Reducer:
    def __init__(self, g: Graph, options: ConstructOptions):
        self.options = options
        self.mask = tuple(options.rule_mask)
        self.work = WorkGraph(g)
        self.memo: dict = {}
        self.retries_left = options.max_retries

    def _context(self, component: tp.List[int]) -> RuleContext:
        return RuleContext(self.work, component, decompose_adjacency(self.work.adj, component),
                           self.options.fallback_n, self.mask, self.options.exact_timeout_s, self.memo)

    def _exact(self, component: tp.List[int], kind: str = 'exact', **kwargs: tp.Any) -> _Outcome:
        sub, ids = self.work.to_graph(component)
        result = gamma_dr(sub, **kwargs)
        values = dict(zip(ids, result.witness))
        return _Outcome(values, terminals=[TerminalRecord(kind, len(component), result.witness.weight)])

    def _expects_bound(self, component: tp.List[int]) -> bool:
        return len(component) >= 5 and all(len(self.work.adj[v]) >= 2 for v in component)

    def _rewrites(self, component: tp.List[int]) -> tp.Iterator[Rewrite]:
        ctx = self._context(component)
        for rule, match in RULES:
            if ctx.enabled(rule):
                rewrite = match(ctx)
                if rewrite is not None:
                    yield rewrite
        yield bailout(ctx)

    def label(self, component: tp.List[int], depth: int = 0) -> _Outcome:
        if not _is_masked('R1', self.mask) and all(len(self.work.adj[v]) <= 2 for v in component):
            rewrite = _closed_form(self.work, component)
            values = dict(rewrite.candidates[0])
            step = TraceStep('R1', rewrite.matched, len(component), sum(values.values()))
            return _Outcome(values, steps=[step])
        if len(component) <= self.options.fallback_n:
            return self._exact(component, seed_from_construct=True, timeout_s=self.options.exact_timeout_s)
        if depth >= self.options.max_depth:
            return self._greedy(component)
        expects = self._expects_bound(component)
        best: tp.Optional[_Outcome] = None
        for rewrite in self._rewrites(component):
            outcome = self._attempt(component, rewrite, depth)
            if expects and not outcome.within(len(component)):
                outcome = self._polish(component, outcome)
            if best is None or outcome.weight < best.weight:
                best = outcome
            if not expects or best.within(len(component)) or self.retries_left <= 0:
                break
            self.retries_left -= 1
            logger.debug("%s left weight %d on %d vertices, trying the next rule",
                         rewrite.rule, outcome.weight, len(component))
        assert best is not None
        if expects and not best.within(len(component)) and len(component) <= self.options.rescue_n:
            rescued = self._exact(component, kind='exact-rescue', seed_from_construct=False,
                                  initial_upper=best.weight - 1, timeout_s=self.options.rescue_timeout_s)
            if rescued.weight < best.weight:
                best = rescued
        return best

    def _attempt(self, component: tp.List[int], rewrite: Rewrite, depth: int) -> _Outcome:
        logger.debug("%s on component of order %d removes %d vertices",
                     rewrite.rule, len(component), len(rewrite.removed))
        saved = _apply(self.work, rewrite)
        removed = set(rewrite.removed)
        rest = [v for v in component if v not in removed]
        parts = self.work.components(rest) if rest else []
        outcomes = [self.label(part, depth + 1) for part in parts]
        _undo(self.work, rewrite, saved)
        values: tp.Dict[int, int] = {}
        steps = [TraceStep(rewrite.rule, rewrite.matched, len(rewrite.removed))]
        if len(parts) > 1:
            steps.append(TraceStep('R0', (), 0))
        terminals: tp.List[TerminalRecord] = []
        for outcome in outcomes:
            values.update(outcome.values)
            steps.extend(outcome.steps)
            terminals.extend(outcome.terminals)
        steps[0].weight_added = _extend(self.work, values, rewrite)
        fallback_used = rewrite.rule == BAILOUT or any(o.fallback_used for o in outcomes)
        return _Outcome(values, steps, terminals, fallback_used)

    def _polish(self, component: tp.List[int], outcome: _Outcome) -> _Outcome:
        values = dict(outcome.values)
        gained = improve(self.work.adj, values, component)
        if not gained:
            return outcome
        changed = tuple(v for v in component if values[v] != outcome.values[v])
        step = TraceStep('polish', changed, 0, -gained)
        return _Outcome(values, outcome.steps + [step], outcome.terminals, outcome.fallback_used)

    def _greedy(self, component: tp.List[int]) -> _Outcome:
        """Single greedy reduction pass, forward then backward, without recursion."""
        events: tp.List[tp.Union[_Terminal, _Applied]] = []
        steps: tp.List[TraceStep] = []
        terminals: tp.List[TerminalRecord] = []
        fallback_used = False
        pending = [component]
        while pending:
            current = pending.pop()
            if not _is_masked('R1', self.mask) and all(len(self.work.adj[v]) <= 2 for v in current):
                rewrite = _closed_form(self.work, current)
            elif len(current) <= self.options.fallback_n:
                outcome = self._exact(current, seed_from_construct=True, timeout_s=self.options.exact_timeout_s)
                events.append(_Terminal(self.work.remove_vertices(current), outcome.values))
                terminals.extend(outcome.terminals)
                continue
            else:
                rewrite = next(self._rewrites(current))
                fallback_used = fallback_used or rewrite.rule == BAILOUT
            saved = _apply(self.work, rewrite)
            step = TraceStep(rewrite.rule, rewrite.matched, len(rewrite.removed))
            steps.append(step)
            events.append(_Applied(rewrite, saved, step))
            removed = set(rewrite.removed)
            rest = [v for v in current if v not in removed]
            if rest:
                parts = self.work.components(rest)
                if len(parts) > 1:
                    steps.append(TraceStep('R0', (), 0))
                pending.extend(parts[::-1])

        values: tp.Dict[int, int] = {}
        for event in reversed(events):
            if isinstance(event, _Terminal):
                self.work.restore(event.saved)
                values.update(event.values)
            else:
                _undo(self.work, event.rewrite, event.saved)
                event.step.weight_added = _extend(self.work, values, event.rewrite)
        return _Outcome(values, steps, terminals, fallback_used)


def construct_drdf(g: Graph, options: tp.Optional[ConstructOptions] = None,
                   **overrides: tp.Any) -> tp.Tuple[Labeling, ReductionTrace]:
    """Double Roman dominating function of `g` built by reduction, with its trace.

    Args:
        g (Graph): Any simple graph.
        options (ConstructOptions, optional): Engine options, fields can also be given as keywords.
    Returns:
        tuple of Labeling and ReductionTrace: A DRDF of `g` and the audit trail of its construction.
    """
    options = replace(options or ConstructOptions(), **overrides)
    start = time.perf_counter()
    reducer = _Reducer(g, options)
    trace = ReductionTrace()
    components = g.connected_components()
    if len(components) > 1:
        trace.steps.append(TraceStep('R0', (), 0))
    values = [0] * g.n
    for component in components:
        outcome = reducer.label(sorted(component))
        for v, x in outcome.values.items():
            values[v] = x
        trace.steps.extend(outcome.steps)
        trace.terminals.extend(outcome.terminals)
        trace.fallback_used = trace.fallback_used or outcome.fallback_used
    labeling = Labeling(tuple(values))
    violations = validate(g, labeling)
    if violations:
        raise RuntimeError(f"Reduction produced an invalid labeling: {violations[:5]}")
    trace.check(g.n, labeling.weight)
    logger.debug("construct_drdf(n=%d): weight %d in %.3fs, %d steps, %d terminals",
                 g.n, labeling.weight, time.perf_counter() - start, len(trace.steps), len(trace.terminals))
    return labeling, trace
