# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Audit trail of a constructive reduction run."""
from collections import Counter
from dataclasses import asdict, dataclass, field
import typing as tp


@dataclass
class TraceStep:
    """One applied rule.

    Args:
        rule (str): Rule id, e.g. `R7.3`.
        vertices (tuple of int): Vertices of the matched configuration, as ids of the input graph.
        removed (int): Number of vertices removed by the rule.
        weight_added (int): Weight added when extending the labeling of the reduced graph,
            including the weight of any repair.
    """
    rule: str
    vertices: tp.Tuple[int, ...]
    removed: int
    weight_added: int = 0

    def to_dict(self) -> dict:
        return {
            'rule': self.rule,
            'vertices': list(self.vertices),
            'removed': self.removed,
            'weight_added': self.weight_added,
        }


@dataclass(frozen=True)
class TerminalRecord:
    """Subproblem solved outright instead of being reduced further."""
    kind: str
    order: int
    weight: int


@dataclass
class ReductionTrace:
    steps: tp.List[TraceStep] = field(default_factory=list)
    terminals: tp.List[TerminalRecord] = field(default_factory=list)
    fallback_used: bool = False

    @property
    def final_base(self) -> str:
        if not self.terminals:
            return 'none'
        return ', '.join(f"{t.kind}(n={t.order})" for t in self.terminals)

    @property
    def removed_total(self) -> int:
        return sum(step.removed for step in self.steps) + sum(t.order for t in self.terminals)

    @property
    def weight_total(self) -> int:
        return sum(step.weight_added for step in self.steps) + sum(t.weight for t in self.terminals)

    def to_records(self) -> tp.List[dict]:
        return [step.to_dict() for step in self.steps]

    def to_dict(self) -> dict:
        return {
            'steps': self.to_records(),
            'terminals': [asdict(t) for t in self.terminals],
            'fallback_used': self.fallback_used,
            'final_base': self.final_base,
        }

    def rule_summary(self) -> tp.Dict[str, int]:
        """Number of applications per rule id, terminal solves counted under their kind."""
        counts = Counter(step.rule for step in self.steps)
        counts.update(t.kind for t in self.terminals)
        return dict(sorted(counts.items()))

    def reconciles(self, n: int, weight: int) -> bool:
        return self.removed_total == n and self.weight_total == weight

    def check(self, n: int, weight: int):
        assert self.removed_total == n, \
            f"Trace removes {self.removed_total} vertices, graph has {n}."
        assert self.weight_total == weight, \
            f"Trace accounts for weight {self.weight_total}, labeling weighs {weight}."
