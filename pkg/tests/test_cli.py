# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

import json

from omegaconf import OmegaConf
import pytest

from drdom.cli import EXIT_INVALID, EXIT_OK, EXIT_TIMEOUT, EXIT_VIOLATIONS, main
from drdom.environment import DRDomEnvironment
from drdom.graphs.io import parse_edge_list, read_edge_list
from drdom.drdf import is_drdf, read_labeling

from .common_utils import TempDirMixin


class TestCli(TempDirMixin):

    def setup_method(self):
        DRDomEnvironment.reset()

    def _gen(self, name, *args):
        path = self.get_temp_path(name)
        assert main(['gen', *args, '--out', path]) == EXIT_OK
        return path

    def test_gamma_of_gen_cycle(self, capsys):
        path = self._gen('c11.txt', '--family', 'cycle', '--n', '11')
        capsys.readouterr()
        assert main(['gamma', '--input', path]) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record['gamma_dr'] == 12
        assert record['status'] == 'optimal'

    def test_gamma_naive_and_allow_ones(self, capsys):
        path = self._gen('p5.txt', '--family', 'path:n=5')
        capsys.readouterr()
        values = []
        for flags in ([], ['--allow-ones'], ['--naive'], ['--naive', '--allow-ones']):
            assert main(['gamma', '--input', path, *flags]) == EXIT_OK
            values.append(json.loads(capsys.readouterr().out)['gamma_dr'])
        assert values == [6, 6, 6, 6]

    def test_gamma_writes_witness(self):
        path = self._gen('c7.txt', '--family', 'cycle', '--n', '7')
        out = self.get_temp_path('c7.lab')
        assert main(['gamma', '--input', path, '--out', out]) == EXIT_OK
        labeling = read_labeling(out)
        assert labeling.weight == 8
        assert is_drdf(read_edge_list(path), labeling)

    def test_gamma_on_empty_file(self):
        path = self.get_temp_path('empty.txt')
        open(path, 'w').close()
        assert main(['gamma', '--input', path]) == EXIT_INVALID

    def test_parse_error(self, caplog):
        path = self.get_temp_path('bad.txt')
        with open(path, 'w') as fp:
            fp.write('3 2\n0 1\n1 7\n')
        assert main(['gamma', '--input', path]) == EXIT_INVALID
        assert 'line 3' in caplog.text

    def test_timeout(self, capsys):
        config = OmegaConf.load(DRDomEnvironment.instance().config_path)
        config.solver.check_every = 1
        config_path = self.get_temp_path('config.yaml')
        OmegaConf.save(config, config_path)
        graph = self.get_temp_path('random', 'random_0.txt')
        assert main(['random', '--model', 'uniform-min-deg-2', '--n', '80', '--out',
                     self.get_temp_path('random')]) == EXIT_OK
        capsys.readouterr()
        assert main(['--config', config_path, 'gamma', '--input', graph, '--timeout-s', '0']) == EXIT_TIMEOUT
        record = json.loads(capsys.readouterr().out)
        assert record['status'] == 'timeout'
        assert record['lower'] <= record['upper']

    def test_gen_tadpole(self, capsys):
        assert main(['gen', '--family', 'tadpole', '--m', '5', '--k', '6']) == EXIT_OK
        g = parse_edge_list(capsys.readouterr().out)
        assert g.n == 11
        assert g.degree_sequence() == [3] + [2] * 9 + [1]

    def test_gen_on_base(self, capsys):
        assert main(['gen', '--family', 'gh', '--base', 'path:n=2']) == EXIT_OK
        assert parse_edge_list(capsys.readouterr().out).n == 22
        assert main(['gen', '--family', 'gq']) == EXIT_INVALID

    @pytest.mark.parametrize('args', [['--family', 'petersen'], ['--family', 'cycle', '--n', '2'],
                                      ['--family', 'tadpole', '--m', '5']])
    def test_gen_errors(self, args):
        assert main(['gen', *args]) == EXIT_INVALID

    def test_random_is_reproducible(self, capsys):
        outputs = []
        for _ in range(2):
            assert main(['random', '--model', 'uniform-min-deg-2', '--n', '30', '--seed', '7', '--count', '2']) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert outputs[0].count('# uniform-min-deg-2 n=30 seed=7') == 2

    def test_check(self, capsys):
        graph = self._gen('c4.txt', '--family', 'cycle', '--n', '4')
        labeling = self.get_temp_path('c4.lab')
        with open(labeling, 'w') as fp:
            fp.write('4\n2 0 2 0\n')
        capsys.readouterr()
        assert main(['check', '--input', graph, '--labeling', labeling]) == EXIT_OK
        assert capsys.readouterr().out.strip() == 'VALID weight=4'
        with open(labeling, 'w') as fp:
            fp.write('4\n2 0 0 0\n')
        assert main(['check', '--input', graph, '--labeling', labeling]) == EXIT_INVALID
        assert capsys.readouterr().out.splitlines() == ['vertex 1: zero-uncovered', 'vertex 2: zero-uncovered',
                                                         'vertex 3: zero-uncovered']

    def test_construct(self, capsys):
        graph = self._gen('gh.txt', '--family', 'gh', '--base', 'path:n=2')
        out = self.get_temp_path('gh.lab')
        capsys.readouterr()
        assert main(['construct', '--input', graph, '--out', out, '--trace']) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record['weight'] == 24
        assert record['satisfied'] is True
        assert record['rules']['R4'] == 1
        assert 'membership' in record
        assert [step['rule'] for step in record['trace']['steps']] == ['R4']
        assert read_labeling(out).weight == 24

    def test_sweep(self, capsys):
        report = self.get_temp_path('sweep', 'report.jsonl')
        args = ['--no-progress', 'sweep', '--n-min', '3', '--n-max', '5', '--min-degree', '2', '--out', report,
                '--fail-on-violation']
        assert main(args + ['--exclude', 'cycle:n=5']) == EXIT_OK
        assert 'violations=0' in capsys.readouterr().out
        assert main(args) == EXIT_VIOLATIONS
        assert 'violations=1' in capsys.readouterr().out

    def test_sweep_preset_with_overrides(self, capsys):
        report = self.get_temp_path('preset', 'report.jsonl')
        assert main(['--no-progress', 'sweep', '--preset', 'bound_desk', '--out', report, 'sweep.n_max=5']) == 0
        assert 'excluded=1' in capsys.readouterr().out

    def test_unknown_preset(self):
        assert main(['sweep', '--preset', 'nope']) == EXIT_INVALID
