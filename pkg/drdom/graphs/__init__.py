# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Graph representation, family generators, decomposition, enumeration and file formats."""

# flake8: noqa
from .graph import Edge, Graph, add_edge, build_graph, delete_edge, delete_vertices, disjoint_union, empty_graph
from .families import (
    FAMILIES, FamilySpec, Complete, Cycle, GH, GQ, Path, QGraph, Spider, StarOfTadpoles, Tadpole, generate,
    parse_family)
from .decomposition import (
    Decomposition, MaximalPath, PendantPath, decompose, decompose_adjacency, walk_component)
from .enumeration import (
    EnumerationLimitError, canonical_form, count_labeled_naive, enumerate_small, nonisomorphic_graphs)
from .io import GraphFormatError, format_edge_list, parse_edge_list, read_edge_list, write_edge_list
