# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

import time

import pytest

from drdom.drdf import closed_form_cycle, closed_form_path, is_drdf
from drdom.graphs.enumeration import nonisomorphic_graphs
from drdom.graphs.families import GH, Complete, Cycle, Path, QGraph, Spider, Tadpole, generate
from drdom.graphs.graph import build_graph, delete_edge, disjoint_union
from drdom.graphs.random_models import random_graph, uniform_min_deg_2
from drdom.solvers.exact import SolveOptions, SolveStatus, gamma_dr
from drdom.solvers.naive import FULL_DOMAIN, NO_ONES_DOMAIN, gamma_dr_naive
from drdom.utils.utils import instance_rng


EXCLUDED_TADPOLES = {(m, k) for m in (5, 7) for k in (2, 3, 5)}


class TestKnownValues:

    @pytest.mark.parametrize('spec', [Cycle(11), Tadpole(5, 6), GH(build_graph(1, []))], ids=str)
    def test_sharp_examples(self, spec):
        g = generate(spec)
        begin = time.perf_counter()
        result = gamma_dr(g)
        assert time.perf_counter() - begin < 5
        assert g.n == 11
        assert result.value == 12
        assert 11 * result.value == 12 * g.n
        assert result.optimal
        assert is_drdf(g, result.witness)
        assert result.witness.weight == 12

    @pytest.mark.parametrize('spec,value', [
        (Cycle(5), 6), (Cycle(7), 8), (Cycle(3), 3), (Path(4), 5), (Path(1), 2), (Path(2), 3),
        (Complete(5), 3), (Spider((1, 1, 1)), 3),
    ], ids=str)
    def test_small_values(self, spec, value):
        assert gamma_dr(generate(spec)).value == value

    def test_short_cycles_exceed_bound(self):
        for n in (5, 7):
            value = gamma_dr(generate(Cycle(n))).value
            assert 11 * value > 12 * n

    def test_q_matches_oracle(self):
        g = generate(QGraph())
        assert gamma_dr(g).value == gamma_dr_naive(g)

    @pytest.mark.parametrize('n', range(3, 15))
    def test_closed_forms(self, n):
        assert gamma_dr(generate(Path(n))).value == closed_form_path(n)[0]
        assert gamma_dr(generate(Cycle(n))).value == closed_form_cycle(n)[0]

    @pytest.mark.slow
    def test_tadpole_table(self):
        begin = time.perf_counter()
        sharp = []
        for m in range(3, 9):
            for k in range(1, 9):
                if (m, k) in EXCLUDED_TADPOLES:
                    continue
                value = gamma_dr(generate(Tadpole(m, k))).value
                assert 11 * value <= 12 * (m + k), (m, k, value)
                if 11 * value == 12 * (m + k):
                    sharp.append((m, k))
        assert sharp == [(5, 6)]
        assert time.perf_counter() - begin < 600


class TestAgainstOracle:

    def test_random_graphs(self):
        for index in range(80):
            rng = instance_rng(5, index)
            n = int(rng.integers(1, 9))
            g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
            result = gamma_dr(g)
            assert result.value == gamma_dr_naive(g), index
            assert is_drdf(g, result.witness)

    @pytest.mark.slow
    @pytest.mark.parametrize('allow_ones', [False, True])
    def test_all_connected_graphs(self, allow_ones):
        domain = FULL_DOMAIN if allow_ones else NO_ONES_DOMAIN
        for n in range(1, 8):
            for g in nonisomorphic_graphs(n, connected=True):
                result = gamma_dr(g, allow_ones=allow_ones)
                assert result.optimal
                assert result.value == gamma_dr_naive(g, domain), g.edges()
                assert is_drdf(g, result.witness)

    def test_edge_deletion_never_lowers_value(self):
        for index in range(60):
            rng = instance_rng(17, index)
            n = int(rng.integers(2, 10))
            g = random_graph(n, float(rng.uniform(0.3, 0.9)), rng)
            if not g.edge_count:
                continue
            u, v = g.edges()[int(rng.integers(0, g.edge_count))]
            assert gamma_dr(delete_edge(g, u, v)).value >= gamma_dr(g).value, index

    def test_additive_over_random_unions(self):
        for index in range(40):
            rng = instance_rng(19, index)
            a = random_graph(int(rng.integers(1, 8)), float(rng.uniform(0.3, 0.9)), rng)
            b = random_graph(int(rng.integers(1, 8)), float(rng.uniform(0.3, 0.9)), rng)
            union, _ = disjoint_union(a, b)
            assert gamma_dr(union).value == gamma_dr(a).value + gamma_dr(b).value, index

    @pytest.mark.parametrize('seed_from_construct', [True, False])
    def test_seeding_does_not_change_value(self, seed_from_construct):
        g = generate(Tadpole(4, 5))
        assert gamma_dr(g, seed_from_construct=seed_from_construct).value == gamma_dr_naive(g)

    def test_allow_ones_same_value(self):
        for spec in [Path(5), Cycle(7), Tadpole(3, 4), Spider((2, 2, 1))]:
            g = generate(spec)
            assert gamma_dr(g, allow_ones=True).value == gamma_dr(g).value


class TestOptions:

    def test_disconnected(self):
        g, _ = disjoint_union(generate(Cycle(5)), generate(Path(2)), build_graph(1, []))
        result = gamma_dr(g)
        assert result.value == 6 + 3 + 2
        assert is_drdf(g, result.witness)

    def test_initial_upper_too_low_restarts(self):
        g = generate(Cycle(6))
        result = gamma_dr(g, initial_upper=3)
        assert result.value == 6
        assert result.optimal

    def test_options_object(self):
        options = SolveOptions(seed_from_construct=False, check_every=16)
        assert gamma_dr(generate(Cycle(9)), options).value == 9

    def test_empty_graph(self):
        with pytest.raises(ValueError):
            gamma_dr(build_graph(0, []))

    def test_timeout(self):
        g = uniform_min_deg_2(80, instance_rng(0, 0))
        result = gamma_dr(g, timeout_s=0., check_every=1)
        assert result.status == SolveStatus.TIMEOUT
        assert not result.optimal
        assert result.lower <= result.upper == result.value
        assert is_drdf(g, result.witness)

    def test_record(self):
        g = generate(Cycle(4))
        record = gamma_dr(g).to_record(g)
        assert record['gamma_dr'] == 4
        assert record['n'] == 4 and record['m'] == 4
        assert record['status'] == 'optimal'
        assert record['lower'] == record['upper'] == 4
        assert len(record['witness']) == 4
