# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

import time

import pytest

from drdom.drdf import is_drdf
from drdom.graphs.decomposition import decompose_adjacency
from drdom.graphs.enumeration import nonisomorphic_graphs
from drdom.graphs.families import GH, Complete, Cycle, Path, QGraph, Spider, StarOfTadpoles, Tadpole, generate
from drdom.graphs.graph import build_graph, disjoint_union
from drdom.graphs.random_models import MODELS, random_graph, sample
from drdom.reduction import engine
from drdom.reduction.bounds import MembershipStatus, membership_e
from drdom.reduction.engine import ConstructOptions, construct_drdf
from drdom.reduction.rules import Rewrite, RuleContext, odd_path, thin_edges
from drdom.reduction.workgraph import WorkGraph
from drdom.solvers.exact import gamma_dr
from drdom.utils.utils import instance_rng


def _all_threes_rule(ctx):
    vertices = tuple(ctx.component)
    return Rewrite('R-heavy', vertices, vertices, candidates=[{v: 3 for v in vertices}], standalone=True)


class TestConstruct:

    @pytest.mark.parametrize('n', [1, 2, 3, 5, 10, 31])
    def test_paths_and_cycles_use_closed_forms(self, n):
        g = generate(Path(n))
        labeling, trace = construct_drdf(g)
        assert trace.rule_summary() == {'R1': 1}
        assert labeling.weight == (n if n % 3 == 0 else n + 1)
        if n >= 3:
            labeling, trace = construct_drdf(generate(Cycle(n)))
            assert trace.rule_summary() == {'R1': 1}

    def test_small_components_solved_exactly(self):
        g = generate(QGraph())
        labeling, trace = construct_drdf(g)
        assert labeling.weight == gamma_dr(g).value
        assert trace.final_base == 'exact(n=10)'
        assert [step.rule for step in trace.steps] == []

    def test_gh_on_an_edge(self):
        g = generate(GH(build_graph(2, [(0, 1)])))
        labeling, trace = construct_drdf(g)
        assert g.n == 22
        assert labeling.weight == 24
        assert [step.rule for step in trace.steps] == ['R4']
        assert trace.steps[0].removed == 11
        assert trace.final_base == 'exact(n=11)'
        assert is_drdf(g, labeling)

    def test_rule_mask(self):
        g = generate(GH(build_graph(2, [(0, 1)])))
        labeling, trace = construct_drdf(g, rule_mask=('R4',))
        assert 'R4' not in trace.rule_summary()
        assert is_drdf(g, labeling)

    def test_disconnected_records_split(self):
        g, _ = disjoint_union(generate(Cycle(4)), generate(Path(3)))
        labeling, trace = construct_drdf(g)
        assert trace.steps[0].rule == 'R0'
        assert trace.rule_summary() == {'R0': 1, 'R1': 2}
        assert labeling.weight == 4 + 3

    def test_empty_graph(self):
        labeling, trace = construct_drdf(build_graph(0, []))
        assert labeling.values == ()
        assert trace.final_base == 'none'

    def test_options_object(self):
        g = generate(Tadpole(4, 20))
        labeling, trace = construct_drdf(g, ConstructOptions(fallback_n=0))
        assert is_drdf(g, labeling)
        assert trace.reconciles(g.n, labeling.weight)
        assert 11 * labeling.weight <= 12 * g.n

    @pytest.mark.parametrize('spec', [
        Tadpole(4, 30), Tadpole(6, 17), Spider((2, 5, 7, 1)), StarOfTadpoles(((4, 6), (3, 8)), (6, 9), (4,)),
        GH(build_graph(4, [(0, 1), (1, 2), (2, 3)])),
    ], ids=str)
    @pytest.mark.parametrize('fallback_n', [0, 5, 12])
    def test_families_valid_and_reconciled(self, spec, fallback_n):
        g = generate(spec)
        labeling, trace = construct_drdf(g, fallback_n=fallback_n)
        assert is_drdf(g, labeling)
        assert trace.reconciles(g.n, labeling.weight)
        assert labeling.weight <= 3 * g.n


class TestPerformance:

    @pytest.mark.parametrize('spec', [Cycle(100_000), Tadpole(5, 100_000 - 5)], ids=['cycle', 'tadpole'])
    def test_large_inputs(self, spec):
        g = generate(spec)
        begin = time.perf_counter()
        labeling, _ = construct_drdf(g)
        assert time.perf_counter() - begin < 1
        assert 11 * labeling.weight <= 12 * g.n


class TestSoundness:

    @pytest.mark.slow
    def test_random_graphs(self):
        for index in range(2000):
            rng = instance_rng(2024, index)
            n = int(rng.integers(3, 201))
            if index % 4 == 3:
                g = random_graph(n, float(rng.uniform(0.01, 0.1)), rng)
            else:
                g = sample(MODELS[index % 3], n, rng)
            labeling, trace = construct_drdf(g)
            assert is_drdf(g, labeling), index
            assert trace.reconciles(g.n, labeling.weight), index

    @pytest.mark.slow
    def test_never_below_optimum(self):
        for n in range(1, 8):
            for g in nonisomorphic_graphs(n, connected=True):
                optimum = gamma_dr(g).value
                for fallback_n in (0, 12):
                    labeling, _ = construct_drdf(g, fallback_n=fallback_n)
                    assert is_drdf(g, labeling)
                    assert labeling.weight >= optimum

    def test_sandwich_on_random_graphs(self):
        for index in range(300):
            rng = instance_rng(99, index)
            n = int(rng.integers(1, 13))
            g = random_graph(n, float(rng.uniform(0.15, 0.6)), rng)
            labeling, _ = construct_drdf(g, fallback_n=0)
            assert gamma_dr(g).value <= labeling.weight <= 3 * g.n

    @pytest.mark.slow
    def test_bound_on_desk_graphs(self):
        for n in range(5, 8):
            for g in nonisomorphic_graphs(n, min_degree=2, connected=True):
                if membership_e(g).status != MembershipStatus.IN:
                    continue
                labeling, _ = construct_drdf(g, fallback_n=0)
                assert 11 * labeling.weight <= 12 * n

    @pytest.mark.slow
    def test_bound_on_random_cycle_unions(self):
        checked = 0
        for seed in range(200):
            rng = instance_rng(seed, 0)
            n = int(rng.integers(13, 61))
            g = sample('cycle-union', n, rng)
            if membership_e(g).status != MembershipStatus.IN:
                continue
            labeling, trace = construct_drdf(g)
            assert is_drdf(g, labeling), seed
            assert trace.reconciles(g.n, labeling.weight), seed
            assert 11 * labeling.weight <= 12 * n, (seed, labeling.weight, trace.rule_summary())
            checked += 1
        assert checked > 50


class TestAlternatives:

    def test_thinning_on_complete_graph(self):
        g = generate(Complete(5))
        labeling, trace = construct_drdf(g, fallback_n=0, rescue_n=0)
        assert 'R-thin' in trace.rule_summary()
        assert is_drdf(g, labeling)
        assert trace.reconciles(g.n, labeling.weight)
        assert 11 * labeling.weight <= 12 * g.n

    def test_thinning_keeps_odd_cycles_attached(self):
        # 5-cycle on 0..4 hanging from a K4 on 5..8 by the edge (0, 5).
        edges = [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)]
        edges += [(a, b) for a in range(5, 9) for b in range(a + 1, 9)]
        g = build_graph(9, edges)
        work = WorkGraph(g)
        component = list(range(g.n))
        rewrite = thin_edges(RuleContext(work, component, decompose_adjacency(work.adj, component), 0))
        assert rewrite is not None
        assert rewrite.removed == ()
        assert (0, 5) not in rewrite.deleted_edges
        assert work.adj == WorkGraph(g).adj
        work.remove_edges(rewrite.deleted_edges)
        for part in work.components(component):
            assert not (len(part) in (5, 7) and all(work.degree(v) == 2 for v in part))

    def test_odd_path_leaves_middle_to_the_reduced_graph(self):
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)]
        g = build_graph(7, edges)
        work = WorkGraph(g)
        component = list(range(g.n))
        rewrite = odd_path(RuleContext(work, component, decompose_adjacency(work.adj, component), 0))
        assert rewrite.rule == 'R5'
        assert set(rewrite.removed) == {1, 3}
        assert all(2 not in candidate for candidate in rewrite.candidates)
        labeling, trace = construct_drdf(g, fallback_n=0, rescue_n=0)
        assert is_drdf(g, labeling)
        assert trace.reconciles(g.n, labeling.weight)

    def test_next_rule_after_heavy_rewrite(self, monkeypatch):
        monkeypatch.setattr(engine, 'RULES', [('R-heavy', _all_threes_rule)])
        monkeypatch.setattr(engine, 'improve', lambda adjacency, values, vertices: 0)
        g = generate(Complete(5))
        labeling, trace = construct_drdf(g, fallback_n=0, rescue_n=0)
        assert labeling.weight == 3
        assert trace.rule_summary() == {'R∞-bailout': 1}
        assert trace.fallback_used

    def test_polish_heavy_rewrite(self, monkeypatch):
        monkeypatch.setattr(engine, 'RULES', [('R-heavy', _all_threes_rule)])
        g = generate(Complete(5))
        labeling, trace = construct_drdf(g, fallback_n=0, rescue_n=0, max_retries=0)
        assert [step.rule for step in trace.steps] == ['R-heavy', 'polish']
        assert trace.steps[1].weight_added < 0
        assert 11 * labeling.weight <= 12 * g.n
        assert trace.reconciles(g.n, labeling.weight)

    def test_rescue_heavy_rewrite(self, monkeypatch):
        monkeypatch.setattr(engine, 'RULES', [('R-heavy', _all_threes_rule)])
        monkeypatch.setattr(engine, 'improve', lambda adjacency, values, vertices: 0)
        g = generate(Complete(5))
        labeling, trace = construct_drdf(g, fallback_n=0, max_retries=0)
        assert labeling.weight == 3
        assert trace.steps == []
        assert trace.final_base == 'exact-rescue(n=5)'
        assert trace.reconciles(g.n, labeling.weight)

    @pytest.mark.parametrize('max_depth', [0, 1, 3])
    def test_greedy_below_max_depth(self, max_depth):
        g = generate(StarOfTadpoles(((4, 6), (3, 8)), (6, 9), (4,)))
        labeling, trace = construct_drdf(g, fallback_n=0, max_depth=max_depth)
        assert is_drdf(g, labeling)
        assert trace.reconciles(g.n, labeling.weight)
