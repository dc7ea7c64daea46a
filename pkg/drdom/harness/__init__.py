# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Experiment sweeps and their reports."""
# flake8: noqa
from .report import ReportRow, SweepSummary, load_rows, summarize, write_rows
from .sweep import SweepConfig, iter_instances, run_instance, run_sweep, threshold
