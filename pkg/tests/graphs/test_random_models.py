# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

import numpy as np
import pytest

from drdom.graphs.families import generate
from drdom.graphs.random_models import (MODELS, cycle_union, random_family, random_graph, random_spider, sample,
                                        uniform_min_deg_2)
from drdom.utils.utils import instance_rng


class TestRandomModels:

    @pytest.mark.parametrize('n', [3, 5, 30, 120])
    def test_uniform_min_deg_2(self, n):
        for index in range(5):
            g = uniform_min_deg_2(n, instance_rng(0, index))
            assert g.n == n
            assert g.min_degree >= 2

    def test_uniform_min_deg_2_rejects_small(self):
        with pytest.raises(ValueError):
            uniform_min_deg_2(2, np.random.default_rng(0))

    def test_densify_after_schedule(self):
        g = uniform_min_deg_2(40, np.random.default_rng(1), schedule=(0.01,), attempts=1)
        assert g.min_degree >= 2

    @pytest.mark.parametrize('n', [3, 7, 50])
    def test_cycle_union(self, n):
        g = cycle_union(n, np.random.default_rng(n))
        assert g.n == n
        assert g.min_degree >= 2

    def test_random_spider(self):
        for index in range(50):
            spec = random_spider(14, instance_rng(3, index))
            g = generate(spec)
            assert 4 <= g.n <= 14
            assert len(spec.legs) >= 3
            assert g.edge_count == g.n - 1
            assert g.is_connected()

    def test_random_family(self):
        for index in range(30):
            g = random_family(25, instance_rng(4, index))
            assert g.n >= 4
            assert g.min_degree >= 1

    def test_random_graph_extremes(self):
        rng = np.random.default_rng(0)
        assert random_graph(6, 0., rng).edge_count == 0
        assert random_graph(6, 1., rng).edge_count == 15

    @pytest.mark.parametrize('model', MODELS)
    def test_reproducible(self, model):
        a = [sample(model, 30, instance_rng(7, i)) for i in range(2)]
        b = [sample(model, 30, instance_rng(7, i)) for i in range(2)]
        assert a == b

    def test_unknown_model(self):
        with pytest.raises(ValueError):
            sample('petersen', 10, np.random.default_rng(0))
