# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Constructive 12n/11 labelings by graph reduction, and bound checks."""
# flake8: noqa
from .bounds import BoundReport, Membership, MembershipStatus, check_bound, has_induced_q, membership_e
from .engine import ConstructOptions, construct_drdf
from .trace import ReductionTrace, TerminalRecord, TraceStep
