# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Exact solvers for the double Roman domination number."""
# flake8: noqa
from .exact import SolveOptions, SolveResult, SolveStatus, gamma_dr
from .naive import gamma_dr_naive
