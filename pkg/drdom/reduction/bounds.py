# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Comparison of labeling weights against the 12n/11 bound and its hypothesis class.

Thresholds are kept as integer pairs `(numerator, denominator)`, so every comparison is exact.
"""
from dataclasses import dataclass, field
from enum import Enum
import functools
import logging
import typing as tp

from networkx.algorithms import isomorphism
import networkx as nx

from ..drdf import Labeling, require_drdf
from ..graphs.families import QGraph, generate
from ..graphs.graph import Graph


logger = logging.getLogger(__name__)

DEFAULT_Q_CAP = 60
Q_ORDER = 10


def relation(weight: int, threshold: tp.Tuple[int, int]) -> str:
    """'<', '=' or '>' comparing `weight` with `numerator / denominator`."""
    num, den = threshold
    lhs = weight * den
    return '<' if lhs < num else '=' if lhs == num else '>'


@dataclass
class BoundReport:
    n: int
    weight: int
    tags: tp.List[str] = field(default_factory=list)

    @property
    def threshold(self) -> tp.Tuple[int, int]:
        return (12 * self.n, 11)

    @property
    def satisfied(self) -> bool:
        return 11 * self.weight <= 12 * self.n

    def comparisons(self) -> tp.Dict[str, str]:
        return {
            '12n/11': relation(self.weight, self.threshold),
            '11n/10': relation(self.weight, (11 * self.n, 10)),
            '13n/11': relation(self.weight, (13 * self.n, 11)),
        }

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'weight': self.weight,
            'threshold': list(self.threshold),
            'satisfied': self.satisfied,
            'tags': list(self.tags),
            'comparisons': self.comparisons(),
        }


class MembershipStatus(Enum):
    IN = 'in-E'
    EXCLUDED = 'excluded'
    UNKNOWN = 'unknown'


class Membership(tp.NamedTuple):
    status: MembershipStatus
    reason: str = ''

    def __str__(self):
        return f"{self.status.value}({self.reason})" if self.reason else self.status.value


@functools.lru_cache(maxsize=None)
def _q_networkx() -> nx.Graph:
    return generate(QGraph()).to_networkx()


def short_cycle_components(g: Graph) -> tp.List[str]:
    """Tags for the components of `g` that are 5-cycles or 7-cycles."""
    tags = []
    for component in g.connected_components():
        if len(component) in (5, 7) and all(g.degree(v) == 2 for v in component):
            tags.append(f"C{len(component)}-component")
    return tags


def has_induced_q(g: Graph) -> bool:
    """Whether `g` has an induced subgraph isomorphic to Q (two 5-cycles joined by an edge)."""
    if g.n < Q_ORDER or g.edge_count < 11 or sum(1 for v in range(g.n) if g.degree(v) >= 3) < 2:
        return False
    matcher = isomorphism.GraphMatcher(g.to_networkx(), _q_networkx())
    return matcher.subgraph_is_isomorphic()


def is_q(g: Graph) -> bool:
    if g.n != Q_ORDER or g.edge_count != 11:
        return False
    return nx.is_isomorphic(g.to_networkx(), _q_networkx())


def check_bound(g: Graph, f: tp.Union[Labeling, tp.Sequence[int]], q_cap: int = DEFAULT_Q_CAP) -> BoundReport:
    """Compare the weight of the DRDF `f` of `g` with 12n/11 and tag the known exclusions.

    Raises:
        InvalidLabelingError: If `f` is not a DRDF of `g`.
    """
    f = require_drdf(g, f)
    tags = short_cycle_components(g)
    if g.n <= q_cap:
        if has_induced_q(g):
            tags.append('induced-Q')
    else:
        tags.append('Q-undetermined')
    report = BoundReport(g.n, f.weight, tags)
    if not report.satisfied:
        logger.warning("Weight %d exceeds 12n/11 for n=%d, tags %s", f.weight, g.n, tags)
    return report


def membership_e(g: Graph, q_cap: int = DEFAULT_Q_CAP) -> Membership:
    """Whether `g` belongs to the hypothesis class of the 12n/11 bound.

    Definite exclusions are order below 5, a vertex of degree below 2, a 5-cycle or 7-cycle
    component, and `g` being Q itself. Graphs containing Q as a proper induced subgraph fall under
    clauses that cannot be decided here and are reported unknown, as is every graph above `q_cap`.
    """
    if g.n < 5:
        return Membership(MembershipStatus.EXCLUDED, 'order < 5')
    if g.min_degree < 2:
        return Membership(MembershipStatus.EXCLUDED, 'minimum degree < 2')
    cycles = short_cycle_components(g)
    if cycles:
        return Membership(MembershipStatus.EXCLUDED, cycles[0])
    if is_q(g):
        return Membership(MembershipStatus.EXCLUDED, 'induced-Q')
    if g.n > q_cap:
        return Membership(MembershipStatus.UNKNOWN, 'Q-undetermined')
    if has_induced_q(g):
        return Membership(MembershipStatus.UNKNOWN, 'induced-Q')
    return Membership(MembershipStatus.IN)
