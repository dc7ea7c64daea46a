# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Experiment sweeps over graph collections.

A sweep draws its instances from a source, computes a value per instance (exact, constructed or
both), compares it with the threshold of the chosen property, and writes one `ReportRow` per
instance. Instances are built in the parent process and fanned out to a worker pool; rows are
collected by instance id, so the report does not depend on the number of workers.

Properties and their thresholds `(numerator, denominator)`:

- `bound`: value <= 12n/11;
- `max_degree`: value <= 2n - 2 max_degree + 1;
- `spider`: value <= n + 1.
"""
from dataclasses import dataclass, field, fields
import logging
from pathlib import Path
import time
import typing as tp

import networkx as nx
import omegaconf
from tqdm import tqdm

from ..graphs.enumeration import DEFAULT_CEILING, enumerate_small
from ..graphs.families import Tadpole, generate, parse_family
from ..graphs.graph import Graph
from ..graphs.random_models import MODELS, random_spider, sample
from ..reduction.bounds import check_bound
from ..reduction.engine import construct_drdf
from ..solvers.exact import SolveStatus, gamma_dr
from ..utils.utils import config_section, instance_rng, worker_pool
from .report import (ReportRow, SweepSummary, certificates_dir, summary_path, within_threshold,
                     write_certificate, write_rows, write_summary)


logger = logging.getLogger(__name__)

MODES = ('exact', 'construct', 'both')
SOURCES = ('enumerate', 'spiders', 'tadpoles', 'random')
PROPERTIES = ('bound', 'max_degree', 'spider')
TADPOLE_EXCLUSIONS = {(m, k) for m in (5, 7) for k in (2, 3, 5)}


@dataclass
class SweepConfig:
    """Sweep parameters, see `config/config.yaml` for the defaults of each field."""
    n_min: int = 1
    n_max: int = 7
    min_degree: int = 0
    connected: bool = True
    exclude: tp.List[str] = field(default_factory=list)
    mode: str = 'exact'
    source: str = 'enumerate'
    property: str = 'bound'
    report: str = 'sweep.jsonl'
    jobs: int = 1
    seed: int = 0
    count: int = 200
    dedup: bool = True
    timeout_s: tp.Optional[float] = None
    fallback_n: int = 12
    q_detection_cap: int = 60
    allow_ones: bool = False
    model: str = 'uniform-min-deg-2'
    ceiling: int = DEFAULT_CEILING

    def validate(self):
        if self.mode not in MODES:
            raise ValueError(f"Unknown mode {self.mode!r}, expected one of {MODES}.")
        if self.source not in SOURCES:
            raise ValueError(f"Unknown source {self.source!r}, expected one of {SOURCES}.")
        if self.property not in PROPERTIES:
            raise ValueError(f"Unknown property {self.property!r}, expected one of {PROPERTIES}.")
        if self.model not in MODELS:
            raise ValueError(f"Unknown random model {self.model!r}, expected one of {MODELS}.")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"Invalid order range [{self.n_min}, {self.n_max}].")
        if self.source == 'enumerate' and self.n_max > self.ceiling:
            raise ValueError(f"Enumeration up to n={self.n_max} exceeds the ceiling {self.ceiling}.")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}.")
        for spec in self.exclude:
            parse_family(spec)

    @classmethod
    def from_config(cls, cfg: omegaconf.DictConfig) -> 'SweepConfig':
        """Sweep config from the `sweep` section of a configuration, unknown keys are rejected."""
        section = config_section(cfg, 'sweep')
        names = {f.name for f in fields(cls)}
        unknown = sorted(set(section) - names)
        if unknown:
            raise ValueError(f"Unknown sweep keys {unknown}.")
        if section.get('exclude') is not None:
            section['exclude'] = list(section['exclude'])
        return cls(**section)


@dataclass
class Instance:
    index: int
    name: str
    graph: Graph
    excluded: bool = False


def _excluded_graphs(config: SweepConfig) -> tp.List[nx.Graph]:
    return [generate(parse_family(spec)).to_networkx() for spec in config.exclude]


def _is_excluded(g: Graph, excluded: tp.List[nx.Graph]) -> bool:
    if not excluded:
        return False
    h = g.to_networkx()
    return any(e.number_of_nodes() == g.n and e.number_of_edges() == g.edge_count and nx.is_isomorphic(h, e)
               for e in excluded)


def iter_instances(config: SweepConfig) -> tp.Iterator[Instance]:
    """Instances of the sweep in id order."""
    excluded = _excluded_graphs(config)
    index = 0
    if config.source == 'enumerate':
        for n in range(config.n_min, config.n_max + 1):
            for i, g in enumerate(enumerate_small(n, config.min_degree, config.connected,
                                                  config.dedup, config.ceiling)):
                yield Instance(index, f"n{n}-{i}", g, _is_excluded(g, excluded))
                index += 1
    elif config.source == 'tadpoles':
        for m in range(3, 9):
            for k in range(1, 9):
                if (m, k) in TADPOLE_EXCLUSIONS or not config.n_min <= m + k <= config.n_max:
                    continue
                g = generate(Tadpole(m, k))
                yield Instance(index, f"tadpole-{m}-{k}", g, _is_excluded(g, excluded))
                index += 1
    elif config.source == 'spiders':
        for index in range(config.count):
            spec = random_spider(config.n_max, instance_rng(config.seed, index), min_n=max(4, config.n_min))
            g = generate(spec)
            yield Instance(index, f"spider-{'-'.join(map(str, spec.legs))}", g, _is_excluded(g, excluded))
    else:
        for index in range(config.count):
            rng = instance_rng(config.seed, index)
            n = int(rng.integers(max(3, config.n_min), config.n_max + 1))
            g = sample(config.model, n, rng)
            yield Instance(index, f"{config.model}-{index}", g, _is_excluded(g, excluded))


def threshold(g: Graph, prop: str) -> tp.Tuple[int, int]:
    if prop == 'bound':
        return (12 * g.n, 11)
    if prop == 'max_degree':
        return (2 * g.n - 2 * g.max_degree + 1, 1)
    if prop == 'spider':
        return (g.n + 1, 1)
    raise ValueError(f"Unknown property {prop!r}, expected one of {PROPERTIES}.")


def run_instance(instance: Instance, config: SweepConfig) -> ReportRow:
    """Evaluate one instance. Top-level so that it can run in a worker process."""
    begin = time.perf_counter()
    g = instance.graph
    gamma: tp.Optional[int] = None
    weight: tp.Optional[int] = None
    status = SolveStatus.OPTIMAL.value
    rules = ''
    bailout = False
    witness: tp.List[int] = []
    if config.mode in ('construct', 'both'):
        labeling, trace = construct_drdf(g, fallback_n=config.fallback_n, exact_timeout_s=config.timeout_s)
        weight = labeling.weight
        witness = list(labeling.values)
        rules = ' '.join(f"{rule}:{count}" for rule, count in trace.rule_summary().items())
        bailout = trace.fallback_used
    if config.mode in ('exact', 'both'):
        result = gamma_dr(g, allow_ones=config.allow_ones, timeout_s=config.timeout_s)
        gamma = result.value
        status = result.status.value
        witness = list(result.witness.values)
    value = gamma if gamma is not None else weight
    assert value is not None
    num, den = threshold(g, config.property)
    tags = check_bound(g, witness, config.q_detection_cap).tags if g.n else []
    row = ReportRow(
        instance=instance.index, name=instance.name, n=g.n, m=g.edge_count, value=value,
        threshold_num=num, threshold_den=den, satisfied=within_threshold((gamma, weight), num, den),
        gamma=gamma, weight=weight, status=status, excluded=instance.excluded, tags=tags, rules=rules,
        runtime_ms=round((time.perf_counter() - begin) * 1000, 3), witness=witness, bailout=bailout)
    if row.violation:
        logger.warning("Instance %d (%s) violates %s: gamma %s, weight %s > %d/%d",
                       row.instance, row.name, config.property, gamma, weight, num, den)
    return row


def run_sweep(config: SweepConfig, progress: bool = True) -> tp.Tuple[SweepSummary, tp.List[ReportRow]]:
    """Run the sweep and write its report, summary table and certificates.

    Returns:
        tuple of SweepSummary and list of ReportRow: Overall counts and the rows in instance order.
    """
    config.validate()
    report = Path(config.report)
    report.parent.mkdir(exist_ok=True, parents=True)
    instances = list(iter_instances(config))
    logger.info("Sweep over %d instances from %s, mode %s, property %s, %d jobs",
                len(instances), config.source, config.mode, config.property, config.jobs)
    with worker_pool(config.jobs) as pool:
        futures = [pool.submit(run_instance, instance, config) for instance in instances]
        rows = [future.result() for future in tqdm(futures, disable=not progress, desc='sweep')]
    write_rows(report, rows)
    summary = write_summary(summary_path(report), rows)
    violations = [(row, instance) for row, instance in zip(rows, instances) if row.violation]
    for row, instance in violations:
        path = write_certificate(certificates_dir(report), row, instance.graph)
        logger.warning("Certificate for instance %d written to %s", row.instance, path)
    logger.info("Sweep done: %s", summary)
    return summary, rows
