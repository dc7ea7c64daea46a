# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.

import pytest

from drdom.graphs.families import GH, Tadpole, generate
from drdom.graphs.graph import build_graph
from drdom.graphs.io import GraphFormatError, format_edge_list, parse_edge_list, read_edge_list, write_edge_list

from ..common_utils import TempDirMixin


class TestEdgeList(TempDirMixin):

    def test_format(self):
        g = build_graph(3, [(1, 2), (0, 1)])
        assert format_edge_list(g, 'path\nof three') == '# path\n# of three\n3 2\n0 1\n1 2\n'

    def test_parse_with_comments_and_blanks(self):
        g = parse_edge_list('# a comment\n\n4 2\n0 3\n  2 1  \n')
        assert g == build_graph(4, [(0, 3), (1, 2)])

    def test_isolated_vertices(self):
        assert parse_edge_list('3 0\n').n == 3

    def test_file_round_trip(self):
        for spec in [Tadpole(5, 6), GH(build_graph(2, [(0, 1)]))]:
            g = generate(spec)
            path = self.get_temp_path('graph.txt')
            write_edge_list(path, g, str(spec))
            assert read_edge_list(path) == g

    @pytest.mark.parametrize('text,line', [
        ('', 1),
        ('# only a comment\n', 1),
        ('3\n', 1),
        ('3 x\n', 1),
        ('3 1\n0 3\n', 2),
        ('3 1\n1 1\n', 2),
        ('3 2\n0 1\n', 2),
        ('3 1\n0 1\n1 2\n', 3),
        ('3 1\n# c\n0 1 2\n', 3),
        ('-1 0\n', 1),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(GraphFormatError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
