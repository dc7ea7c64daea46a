# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Command line entry point: `drdom VERB [options]`.

Verbs: `gamma`, `construct`, `check`, `gen`, `random` and `sweep`. Graphs are read from
`--input` (standard input when omitted or `-`) in the edge list format, records are printed
on standard output as JSON and logs go to standard error.

Exit statuses: 0 on success, 1 on input, parse or validation errors, 2 when an exact solve
timed out, 3 when a sweep run with `--fail-on-violation` found violations.
"""
import argparse
import json
import logging
from pathlib import Path
import sys
import typing as tp

import omegaconf

from .drdf import InvalidLabelingError, read_labeling, validate, write_labeling
from .environment import DRDomEnvironment
from .graphs.families import GH, GQ, FamilySpec, generate, parse_family
from .graphs.graph import Graph
from .graphs.io import GraphFormatError, format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .graphs.random_models import MODELS, sample
from .harness.sweep import MODES, PROPERTIES, SOURCES, SweepConfig, run_sweep
from .reduction.bounds import check_bound, membership_e
from .reduction.engine import construct_drdf
from .solvers.exact import gamma_dr
from .solvers.naive import gamma_dr_naive
from .utils.utils import instance_rng


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_TIMEOUT = 2
EXIT_VIOLATIONS = 3


def _pick(value: tp.Any, default: tp.Any) -> tp.Any:
    return default if value is None else value


def _read_graph(path: tp.Optional[str]) -> Graph:
    if path is None or path == '-':
        return parse_edge_list(sys.stdin.read())
    return read_edge_list(path)


def _emit(record: dict):
    print(json.dumps(record))


def cmd_gamma(args: argparse.Namespace, cfg: omegaconf.DictConfig) -> int:
    g = _read_graph(args.input)
    allow_ones = _pick(args.allow_ones, cfg.solver.allow_ones)
    if args.naive:
        domain = (0, 1, 2, 3) if allow_ones else (0, 2, 3)
        value = gamma_dr_naive(g, domain, chunk_size=cfg.naive.chunk_size, max_n=cfg.naive.max_n)
        _emit({'n': g.n, 'm': g.edge_count, 'gamma_dr': value, 'method': 'naive'})
        return EXIT_OK
    result = gamma_dr(g, allow_ones=allow_ones, timeout_s=_pick(args.timeout_s, cfg.solver.timeout_s),
                      check_every=cfg.solver.check_every)
    if args.out:
        write_labeling(args.out, result.witness)
    _emit(result.to_record(g))
    return EXIT_OK if result.optimal else EXIT_TIMEOUT


def cmd_construct(args: argparse.Namespace, cfg: omegaconf.DictConfig) -> int:
    g = _read_graph(args.input)
    rule_mask = tuple(args.rule_mask.split(',')) if args.rule_mask else tuple(cfg.engine.rule_mask)
    labeling, trace = construct_drdf(g, fallback_n=_pick(args.fallback_n, cfg.engine.fallback_n),
                                     rule_mask=rule_mask,
                                     exact_timeout_s=_pick(args.timeout_s, cfg.solver.timeout_s),
                                     max_retries=cfg.engine.max_retries, rescue_n=cfg.engine.rescue_n,
                                     rescue_timeout_s=cfg.engine.rescue_timeout_s)
    if args.out:
        write_labeling(args.out, labeling)
    q_cap = cfg.engine.q_detection_cap
    record: tp.Dict[str, tp.Any] = {'m': g.edge_count}
    record.update(check_bound(g, labeling, q_cap).to_dict())
    record.update({
        'membership': str(membership_e(g, q_cap)),
        'rules': trace.rule_summary(),
        'final_base': trace.final_base,
        'fallback_used': trace.fallback_used,
        'witness': list(labeling.values),
    })
    if args.trace:
        record['trace'] = trace.to_dict()
    _emit(record)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, cfg: omegaconf.DictConfig) -> int:
    g = _read_graph(args.input)
    labeling = read_labeling(args.labeling)
    violations = validate(g, labeling)
    if violations:
        for violation in violations:
            print(violation)
        return EXIT_INVALID
    print(f"VALID weight={labeling.weight}")
    return EXIT_OK


def _family_from_args(args: argparse.Namespace) -> FamilySpec:
    name, _, _ = args.family.partition(':')
    if name.lower() in (GQ.name, GH.name):
        if not args.base:
            raise ValueError(f"Family {name!r} requires --base, e.g. --base path:n=2.")
        base = generate(parse_family(args.base))
        return GQ(base) if name.lower() == GQ.name else GH(base)
    text = args.family
    extra = [f"{key}={getattr(args, key)}" for key in ('n', 'm', 'k') if getattr(args, key) is not None]
    if args.legs:
        extra.append('legs=' + '-'.join(x.strip() for x in args.legs.split(',')))
    if extra:
        text += (',' if ':' in text else ':') + ','.join(extra)
    return parse_family(text)


def cmd_gen(args: argparse.Namespace, cfg: omegaconf.DictConfig) -> int:
    spec = _family_from_args(args)
    g = generate(spec)
    comment = f"{spec}"
    if args.out:
        write_edge_list(args.out, g, comment)
    else:
        sys.stdout.write(format_edge_list(g, comment))
    return EXIT_OK


def cmd_random(args: argparse.Namespace, cfg: omegaconf.DictConfig) -> int:
    schedule = tuple(cfg.random.edge_probability_schedule)
    for index in range(args.count):
        g = sample(args.model, args.n, instance_rng(args.seed, index), schedule, cfg.random.max_attempts)
        comment = f"{args.model} n={args.n} seed={args.seed} index={index}"
        if args.out:
            directory = Path(args.out)
            directory.mkdir(exist_ok=True, parents=True)
            write_edge_list(directory / f"random_{index}.txt", g, comment)
        else:
            sys.stdout.write(format_edge_list(g, comment))
    return EXIT_OK


SWEEP_FLAGS = ['n_min', 'n_max', 'min_degree', 'connected', 'mode', 'source', 'property', 'jobs', 'seed',
               'count', 'dedup', 'timeout_s', 'fallback_n', 'allow_ones', 'model']


def cmd_sweep(args: argparse.Namespace, cfg: omegaconf.DictConfig) -> int:
    overrides = {key: getattr(args, key) for key in SWEEP_FLAGS if getattr(args, key) is not None}
    if args.out:
        overrides['report'] = args.out
    if args.exclude:
        overrides['exclude'] = list(args.exclude)
    cfg = omegaconf.OmegaConf.merge(cfg, {'sweep': overrides})
    config = SweepConfig.from_config(cfg)
    summary, _ = run_sweep(config, progress=not args.no_progress)
    print(summary)
    if args.fail_on_violation and summary.violations:
        return EXIT_VIOLATIONS
    return EXIT_OK


def _add_solver_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--timeout-s', type=float, help='Wall clock budget of each exact solve.')
    parser.add_argument('--allow-ones', action='store_const', const=True,
                        help='Search over {0, 1, 2, 3} instead of {0, 2, 3}.')


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='drdom',
        description='Double Roman domination: exact values, constructive labelings and bound sweeps.')
    parser.add_argument('--config', help='Base configuration file, defaults to config/config.yaml.')
    parser.add_argument('--log-level', help='Logging level, overrides logging.level.')
    parser.add_argument('--no-progress', action='store_true', help='Disable progress bars.')
    subparsers = parser.add_subparsers(dest='verb', required=True)

    gamma = subparsers.add_parser('gamma', help='Exact double Roman domination number.')
    gamma.add_argument('--input', help='Edge list file, standard input when omitted.')
    gamma.add_argument('--out', help='Write the witness labeling to this file.')
    gamma.add_argument('--naive', action='store_true', help='Use the exhaustive oracle (small graphs only).')
    _add_solver_flags(gamma)
    gamma.set_defaults(func=cmd_gamma)

    construct = subparsers.add_parser('construct', help='Double Roman dominating function by reduction.')
    construct.add_argument('--input', help='Edge list file, standard input when omitted.')
    construct.add_argument('--out', help='Write the labeling to this file.')
    construct.add_argument('--fallback-n', type=int, help='Solve components of at most this order exactly.')
    construct.add_argument('--rule-mask', help='Comma separated rule ids to skip, e.g. R6,R7.3.')
    construct.add_argument('--trace', action='store_true', help='Include the full reduction trace.')
    construct.add_argument('--timeout-s', type=float, help='Wall clock budget of each exact solve.')
    construct.set_defaults(func=cmd_construct)

    check = subparsers.add_parser('check', help='Validate a labeling.')
    check.add_argument('--input', help='Edge list file, standard input when omitted.')
    check.add_argument('--labeling', required=True, help='Labeling file.')
    check.set_defaults(func=cmd_check)

    gen = subparsers.add_parser('gen', help='Generate a family member.')
    gen.add_argument('--family', required=True,
                     help='Family name, optionally with parameters, e.g. tadpole or tadpole:m=5,k=6.')
    gen.add_argument('--n', type=int)
    gen.add_argument('--m', type=int)
    gen.add_argument('--k', type=int)
    gen.add_argument('--legs', help='Comma separated spider leg lengths.')
    gen.add_argument('--base', help='Base family of gq and gh, e.g. path:n=2.')
    gen.add_argument('--out', help='Output file, standard output when omitted.')
    gen.set_defaults(func=cmd_gen)

    rand = subparsers.add_parser('random', help='Sample random graphs.')
    rand.add_argument('--model', choices=MODELS, default=MODELS[0])
    rand.add_argument('--n', type=int, required=True)
    rand.add_argument('--seed', type=int, default=0)
    rand.add_argument('--count', type=int, default=1)
    rand.add_argument('--out', help='Output directory, standard output when omitted.')
    rand.set_defaults(func=cmd_random)

    sweep = subparsers.add_parser('sweep', help='Run a sweep and write its report.')
    sweep.add_argument('--preset', help='Sweep preset name under config/sweep, or a yaml path.')
    sweep.add_argument('--out', help='Report path, overrides sweep.report.')
    sweep.add_argument('--n-min', type=int)
    sweep.add_argument('--n-max', type=int)
    sweep.add_argument('--min-degree', type=int)
    sweep.add_argument('--connected', action='store_const', const=True)
    sweep.add_argument('--all-graphs', dest='connected', action='store_const', const=False,
                       help='Include disconnected graphs.')
    sweep.add_argument('--exclude', action='append', help='Family spec to exclude, e.g. cycle:n=5. Repeatable.')
    sweep.add_argument('--mode', choices=MODES)
    sweep.add_argument('--source', choices=SOURCES)
    sweep.add_argument('--property', choices=PROPERTIES)
    sweep.add_argument('--jobs', type=int)
    sweep.add_argument('--seed', type=int)
    sweep.add_argument('--count', type=int)
    sweep.add_argument('--model', choices=MODELS)
    sweep.add_argument('--dedup', action='store_const', const=True)
    sweep.add_argument('--no-dedup', dest='dedup', action='store_const', const=False)
    sweep.add_argument('--fallback-n', type=int)
    sweep.add_argument('--fail-on-violation', action='store_true')
    sweep.add_argument('overrides', nargs='*', help='Configuration overrides as key=value.')
    _add_solver_flags(sweep)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: tp.Optional[tp.Sequence[str]] = None) -> int:
    args = get_parser().parse_args(argv)
    try:
        if args.config:
            DRDomEnvironment.use_config(args.config)
        cfg = DRDomEnvironment.get_config(getattr(args, 'preset', None), getattr(args, 'overrides', None) or ())
    except ValueError as exc:
        logging.basicConfig(stream=sys.stderr, level=logging.INFO)
        logger.error("%s", exc)
        return EXIT_INVALID
    level = _pick(args.log_level, cfg.logging.level)
    logging.basicConfig(stream=sys.stderr, level=str(level).upper())
    try:
        return args.func(args, cfg)
    except GraphFormatError as exc:
        logger.error("Invalid input (line %d): %s", exc.line, exc)
    except InvalidLabelingError as exc:
        logger.error("Invalid labeling: %s", exc)
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
    return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
