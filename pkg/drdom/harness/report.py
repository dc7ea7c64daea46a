# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Sweep reports: JSON lines of `ReportRow`, a CSV summary table and counterexample certificates."""
from collections import defaultdict
import csv
from dataclasses import asdict, dataclass, field, fields
import json
from pathlib import Path
import typing as tp

from ..drdf import format_labeling
from ..graphs.graph import Graph
from ..graphs.io import format_edge_list


def within_threshold(values: tp.Iterable[tp.Optional[int]], num: int, den: int) -> bool:
    return all(x * den <= num for x in values if x is not None)


@dataclass
class ReportRow:
    """One sweep instance.

    `value` is the exact value when the sweep solved exactly, the constructed weight otherwise.
    `weight` keeps the constructed weight in mode `both`. The row is satisfied when every
    computed quantity among `gamma` and `weight` stays within `threshold_num / threshold_den`.
    `bailout` tells whether the construction fell back to the star bailout.
    """
    instance: int
    name: str
    n: int
    m: int
    value: int
    threshold_num: int
    threshold_den: int
    satisfied: bool
    gamma: tp.Optional[int] = None
    weight: tp.Optional[int] = None
    status: str = 'optimal'
    excluded: bool = False
    tags: tp.List[str] = field(default_factory=list)
    rules: str = ''
    runtime_ms: float = 0.
    witness: tp.List[int] = field(default_factory=list)
    bailout: bool = False

    def recompute_satisfied(self) -> bool:
        return within_threshold((self.value, self.gamma, self.weight), self.threshold_num, self.threshold_den)

    @property
    def violation(self) -> bool:
        return not self.satisfied and not self.excluded

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, dictionary: dict) -> 'ReportRow':
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in dictionary.items() if k in names})


@dataclass
class SweepSummary:
    instances: int = 0
    satisfied: int = 0
    violations: int = 0
    excluded: int = 0
    timeouts: int = 0
    bailouts: int = 0

    def add(self, row: ReportRow):
        self.instances += 1
        self.satisfied += int(row.satisfied)
        self.violations += int(row.violation)
        self.excluded += int(row.excluded)
        self.timeouts += int(row.status == 'timeout')
        self.bailouts += int(row.bailout)

    def __str__(self):
        return (f"instances={self.instances} satisfied={self.satisfied} "
                f"violations={self.violations} excluded={self.excluded} bailouts={self.bailouts}")


def summary_path(report: tp.Union[str, Path]) -> Path:
    report = Path(report)
    return report.with_name(report.name + '.summary.csv')


def certificates_dir(report: tp.Union[str, Path]) -> Path:
    report = Path(report)
    return report.with_name(report.name + '.certificates')


def write_rows(path: tp.Union[str, Path], rows: tp.Iterable[ReportRow]):
    Path(path).parent.mkdir(exist_ok=True, parents=True)
    with open(path, 'w') as fp:
        for row in rows:
            fp.write(json.dumps(row.to_dict()) + '\n')


def load_rows(path: tp.Union[str, Path]) -> tp.List[ReportRow]:
    with open(path, 'r') as fp:
        return [ReportRow.from_dict(json.loads(line)) for line in fp if line.strip()]


def summarize(rows: tp.Iterable[ReportRow]) -> tp.Tuple[SweepSummary, tp.Dict[int, SweepSummary]]:
    """Overall counts and counts per graph order."""
    total = SweepSummary()
    per_order: tp.Dict[int, SweepSummary] = defaultdict(SweepSummary)
    for row in rows:
        total.add(row)
        per_order[row.n].add(row)
    return total, dict(sorted(per_order.items()))


def write_summary(path: tp.Union[str, Path], rows: tp.Sequence[ReportRow]) -> SweepSummary:
    total, per_order = summarize(rows)
    columns = ['n', 'instances', 'satisfied', 'violations', 'excluded', 'timeouts', 'bailouts']
    with open(path, 'w', newline='') as fp:
        writer = csv.writer(fp)
        writer.writerow(columns)
        for n, counts in per_order.items():
            writer.writerow([n] + [getattr(counts, c) for c in columns[1:]])
        writer.writerow(['total'] + [getattr(total, c) for c in columns[1:]])
    return total


def write_certificate(directory: tp.Union[str, Path], row: ReportRow, g: Graph) -> Path:
    """Edge list of a violating instance, with its labeling and threshold in the header comments."""
    directory = Path(directory)
    directory.mkdir(exist_ok=True, parents=True)
    comment = '\n'.join([
        f"instance {row.instance} {row.name}",
        f"value {row.value} threshold {row.threshold_num}/{row.threshold_den}",
        "labeling " + format_labeling(row.witness).replace('\n', ' ').strip(),
    ])
    path = directory / f"instance_{row.instance}.txt"
    with open(path, 'w') as fp:
        fp.write(format_edge_list(g, comment))
    return path
