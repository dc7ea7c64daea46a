# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""
drdom is a toolkit for double Roman domination: exact values with a branch and bound solver,
constructive labelings of weight at most 12n/11 by graph reduction, and reproducible sweeps
checking upper bounds over enumerated and random graph collections.
"""
# flake8: noqa
from . import drdf, graphs, reduction, solvers
from .drdf import Labeling, is_drdf, validate
from .graphs import Graph, build_graph, generate
from .reduction import construct_drdf
from .solvers import gamma_dr, gamma_dr_naive

__version__ = '0.1.1'
