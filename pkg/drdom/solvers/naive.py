# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Exhaustive oracle for the double Roman domination number.

Labelings are enumerated as mixed-radix integers in chunks. Each chunk is decoded into an
`(rows, n)` value matrix and validated at once: multiplying the indicator matrices of
values 3 and 2 by the adjacency matrix counts, for every row and vertex, the neighbors
holding each value.
"""
import logging
import typing as tp

import numpy as np

from ..drdf import VALUES
from ..graphs.enumeration import EnumerationLimitError
from ..graphs.graph import Graph


logger = logging.getLogger(__name__)

MAX_N = 12
DEFAULT_CHUNK_SIZE = 1 << 16
FULL_DOMAIN = VALUES
NO_ONES_DOMAIN = (0, 2, 3)


def adjacency_matrix(g: Graph) -> np.ndarray:
    matrix = np.zeros((g.n, g.n), dtype=np.int32)
    for u, v in g.edges():
        matrix[u, v] = matrix[v, u] = 1
    return matrix


def gamma_dr_naive(g: Graph, domain: tp.Sequence[int] = NO_ONES_DOMAIN,
                   chunk_size: int = DEFAULT_CHUNK_SIZE, max_n: int = MAX_N) -> int:
    """Minimum DRDF weight over all labelings in `domain ** n`.

    Args:
        g (Graph): Graph, at most `max_n` vertices.
        domain (sequence of int): Allowed values, must contain 3.
        chunk_size (int): Number of labelings validated per batch.
        max_n (int): Hard cap on the graph order.
    Returns:
        int: The double Roman domination number of `g`.
    """
    if g.n > max_n:
        raise EnumerationLimitError(f"Naive enumeration limited to n <= {max_n}, got n={g.n}.")
    dom = np.array(sorted(set(domain)), dtype=np.int64)
    if not set(dom.tolist()) <= set(VALUES) or 3 not in dom:
        raise ValueError(f"Domain must be a subset of {VALUES} containing 3, got {list(domain)}.")
    n = g.n
    if n == 0:
        return 0
    adj = adjacency_matrix(g)
    radix = len(dom)
    total = radix ** n
    best = 3 * n
    for start in range(0, total, chunk_size):
        codes = np.arange(start, min(total, start + chunk_size), dtype=np.int64)
        digits = np.empty((len(codes), n), dtype=np.int64)
        for j in range(n):
            digits[:, j] = codes % radix
            codes //= radix
        labels = dom[digits]
        weights = labels.sum(axis=1)
        keep = weights < best
        if not keep.any():
            continue
        labels, weights = labels[keep], weights[keep]
        threes = (labels == 3).astype(np.int32) @ adj
        twos = (labels == 2).astype(np.int32) @ adj
        zero_ok = (labels != 0) | (threes >= 1) | (twos >= 2)
        one_ok = (labels != 1) | (threes + twos >= 1)
        valid = (zero_ok & one_ok).all(axis=1)
        if valid.any():
            best = min(best, int(weights[valid].min()))
    logger.debug("Naive oracle on n=%d over domain %s: %d", n, dom.tolist(), best)
    return best
