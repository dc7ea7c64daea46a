# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

from concurrent.futures import ProcessPoolExecutor

import omegaconf
import pytest

from drdom.utils.utils import InlineExecutor, config_section, instance_rng, worker_pool


def _square(x):
    return x * x


def _fail(x):
    raise ValueError(f"bad instance {x}")


class TestConfigSection:

    def test_resolves_interpolations(self):
        cfg = omegaconf.OmegaConf.create({'engine': {'fallback_n': 7}, 'sweep': {'fallback_n': '${engine.fallback_n}'}})
        assert config_section(cfg, 'sweep') == {'fallback_n': 7}

    def test_missing_section(self):
        assert config_section(omegaconf.OmegaConf.create({'solver': {}}), 'sweep') == {}

    def test_not_a_mapping(self):
        with pytest.raises(ValueError):
            config_section(omegaconf.OmegaConf.create({'sweep': [1, 2]}), 'sweep')


class TestWorkerPool:

    def test_single_job_runs_inline(self):
        with worker_pool(1) as pool:
            assert isinstance(pool, InlineExecutor)
            futures = [pool.submit(_square, x) for x in range(4)]
        assert [f.result() for f in futures] == [0, 1, 4, 9]

    def test_inline_errors_raised_on_result(self):
        future = InlineExecutor().submit(_fail, 3)
        with pytest.raises(ValueError):
            future.result()

    def test_several_jobs_use_processes(self):
        with worker_pool(2) as pool:
            assert isinstance(pool, ProcessPoolExecutor)
            assert pool.submit(_square, 5).result() == 25


def test_instance_rng_depends_on_seed_and_index():
    first = instance_rng(3, 1).integers(0, 1 << 30, size=4).tolist()
    assert first == instance_rng(3, 1).integers(0, 1 << 30, size=4).tolist()
    assert first != instance_rng(3, 2).integers(0, 1 << 30, size=4).tolist()
    assert first != instance_rng(4, 1).integers(0, 1 << 30, size=4).tolist()
