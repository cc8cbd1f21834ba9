"""
Fullab - fullerene dual graph laboratory
Command-line entry point (fullab) tying the library modules together
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

import config
from constructions import CONVENTIONS, dodecahedron, goldberg, gsw_free_family, nanotube_50, seed_for
from cut_partition import conjecture2_report, cut_partition
from database import IsomerDb
from errors import FormatError, FullabError, InvalidPath
from formats import FORMATS, encode_planar_code, read_graphs, spiral_lines, write_graphs
from graph_core import counts
from models import GswPath, PentagonVector, RotationSystem, SamplerConfig
from sampling import psw_chain, spiral_ar_samples, uniformity_report
from spectral import REPRESENTATIONS, histogram, spectral_summary, sweep, to_csv
from spiral import canonical_pentagon_vector, enumerate_isomers, windup
from sw_ops import apply_gsw, check_gsw_path, classic_sw_sites, find_gsw_paths, psw_flip

logger = logging.getLogger('fullab')


# ============================================================================
# Output helpers
# ============================================================================

def _emit_graphs(graphs: Sequence[RotationSystem], args, default_format: str = 'planar_code') -> None:
    fmt = args.format or default_format
    if args.out:
        write_graphs(graphs, args.out, fmt)
    elif fmt == 'planar_code':
        sys.stdout.buffer.write(encode_planar_code(graphs))
        sys.stdout.buffer.flush()
    else:
        for line in spiral_lines(canonical_pentagon_vector(g) for g in graphs):
            sys.stdout.write(line + '\n')
    logger.info(f"Wrote {len(graphs)} graphs ({fmt}) to {args.out or 'stdout'}")


def _emit_json(data: Any, path: Optional[str] = None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + '\n'
    if path:
        try:
            with open(path, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
        except OSError as e:
            raise FormatError(f"cannot write {path}: {e}") from e
    else:
        sys.stdout.write(text)


def _emit_frame(df: pd.DataFrame, path: Optional[str] = None) -> None:
    try:
        to_csv(df, path or sys.stdout)
    except OSError as e:
        raise FormatError(f"cannot write {path}: {e}") from e


def _load(args, strict: bool = True) -> List[RotationSystem]:
    if not args.input:
        raise ValueError("this command needs --in FILE")
    return read_graphs(args.input, args.format, strict=strict)


def _isomers(n: int, args) -> List[RotationSystem]:
    """C_n from the database when built, else by enumeration"""
    db = IsomerDb(args.db_dir)
    if db.has(n):
        return [windup(pv) for pv in db.vectors(n)]
    return enumerate_isomers(n, budget=args.budget, workers=args.threads)


def _parse_ints(text: str) -> List[int]:
    return [int(x) for x in text.replace(',', ' ').split()]


# ============================================================================
# Commands
# ============================================================================

def cmd_make(args) -> int:
    """Build one of the named constructions"""
    if args.family == 'dodeca':
        g = dodecahedron()
    elif args.family == 'nanotube50':
        g = nanotube_50(args.r)
    elif args.family == 'goldberg':
        g = goldberg(args.p, args.q)
    elif args.family == 'gswfree':
        g = gsw_free_family(args.t, args.convention or config.CONVENTION)
    else:
        g = seed_for(args.n, budget=args.budget)
    logger.info(f"Built {args.family}: {counts(g)}")
    _emit_graphs([g], args)
    return 0


def cmd_enumerate(args) -> int:
    isomers = enumerate_isomers(args.n, budget=args.budget, workers=args.threads)
    _emit_graphs(isomers, args, default_format='spiral')
    return 0


def cmd_character(args) -> int:
    rows = []
    for j, g in enumerate(_load(args), start=1):
        summary = spectral_summary(g, args.alpha, args.beta, args.rep, graph_id=str(j))
        rows.append(summary.to_dict())
    _emit_json(rows, args.out)
    return 0


def cmd_sweep(args) -> int:
    isomers = _load(args) if args.input else _isomers(args.n, args)
    df = sweep(args.n, isomers, args.alpha, args.beta, args.rep)
    _emit_frame(df, args.csv or args.out)
    return 0


def cmd_hist(args) -> int:
    try:
        values = pd.read_csv(args.csv)[args.column]
    except (OSError, KeyError, ValueError) as e:
        raise FormatError(f"cannot read column {args.column} from {args.csv}: {e}") from e
    value_range = (0.0, 1.0) if args.column == 'normalized' else None
    _emit_frame(histogram(values, args.bins, value_range), args.out)
    return 0


def cmd_gsw(args) -> int:
    graphs = _load(args)
    if args.action == 'find':
        result = []
        for j, g in enumerate(graphs, start=1):
            paths = find_gsw_paths(g, args.w_max, unique_fragments=True)
            result.append({
                'graph': j,
                'paths': [p.to_dict() for p in paths],
                'classic_sites': [s.to_dict() for s in classic_sw_sites(g)],
            })
        _emit_json(result, args.out)
        return 0

    if not args.path:
        raise ValueError(f"gsw {args.action} needs --path v1,v2,...")
    try:
        path = GswPath(_parse_ints(args.path))
    except ValueError as e:
        raise InvalidPath(str(e)) from e
    if args.action == 'check':
        check_gsw_path(graphs[0], path)
        _emit_json({'path': path.to_dict(), 'valid': True}, args.out)
        return 0
    _emit_graphs([apply_gsw(graphs[0], path)], args)
    return 0


def cmd_psw(args) -> int:
    graphs = _load(args, strict=False)
    edge = _parse_ints(args.edge)
    if len(edge) != 2:
        raise ValueError(f"--edge needs two vertices, got {args.edge}")
    flipped = psw_flip(graphs[0], (edge[0], edge[1]))
    args.format = 'planar_code'
    _emit_graphs([flipped], args)
    return 0


def cmd_cutpartition(args) -> int:
    reports = []
    for j, g in enumerate(_load(args), start=1):
        partition = cut_partition(g, args.convention)
        if args.report == 'json':
            reports.append({'graph': j, **partition.to_dict()})
        else:
            labels = ', '.join(str(label) for label in partition.labels()) or 'none'
            reports.append(f"graph {j}: {len(partition)} components [{labels}], "
                           f"unresolved {partition.unresolved}")
    if args.report == 'json':
        _emit_json(reports, args.out)
    else:
        sys.stdout.write(''.join(line + '\n' for line in reports))
    return 0


def cmd_conjecture2(args) -> int:
    graphs = _load(args) if args.input else _isomers(args.n, args)
    conventions = [args.convention.upper()] if args.convention else list(CONVENTIONS)
    rows = []
    for j, g in enumerate(graphs, start=1):
        for convention, verdict in conjecture2_report(g, conventions).items():
            rows.append({'n': 2 * (g.m - 2), 'j': j, 'convention': convention, **verdict})
    columns = ['n', 'j', 'convention', 'has_gsw', 'all_triangular', 'zero_only', 'components', 'verdict']
    df = pd.DataFrame(rows, columns=columns)
    logger.info(f"Conjecture check: {df['verdict'].value_counts().to_dict()}")
    _emit_frame(df, args.csv or args.out)
    return 0


def cmd_sample(args) -> int:
    if args.method == 'spiral':
        cfg = SamplerConfig(args.n, seed=args.seed, method='spiral_ar', workers=args.threads)
        graphs, report = spiral_ar_samples(cfg, args.count)
    else:
        cfg = SamplerConfig(args.n, seed=args.seed, method='psw_chain', steps=args.steps,
                            burn_in=args.burnin)
        _, report = psw_chain(cfg)
        graphs = [windup(pv) for pv in sorted(report.counts)]

    summary = report.to_dict()
    if args.uniformity:
        check = uniformity_report([pv for pv, c in report.counts.items() for _ in range(c)],
                                  args.n, budget=args.budget)
        summary['chi_square'] = check['chi_square']
        summary['p_value'] = check['p_value']
    if args.out:
        _emit_graphs(graphs, args)
    _emit_json(summary, args.report)
    return 0


def cmd_db(args) -> int:
    db = IsomerDb(args.db_dir)
    if args.action in ('build', 'get') and args.n is None:
        raise ValueError(f"db {args.action} needs --n")
    if args.action == 'build':
        vectors = db.build(args.n, budget=args.budget, workers=args.threads)
        _emit_json({'n': args.n, 'isomers': len(vectors), 'path': str(db.spiral_path(args.n))}, args.out)
    elif args.action == 'lookup':
        if args.vector:
            n, j = db.lookup(PentagonVector.from_line(args.vector))
        else:
            n, j = db.lookup_graph(_load(args)[0])
        _emit_json({'n': n, 'j': j}, args.out)
    else:
        _emit_graphs([db.graph(args.n, args.j)], args)
    return 0


# ============================================================================
# Argument parsing
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--in', dest='input', help='input graph file (planar_code or spiral)')
    common.add_argument('--out', help='output file (default stdout)')
    common.add_argument('--format', choices=FORMATS, help='graph file format')
    common.add_argument('--threads', type=int, default=config.THREADS)
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('--budget', type=int, default=config.ENUMERATION_BUDGET,
                        help='maximum number of windups')
    common.add_argument('--db-dir', default=config.DB_DIR)
    common.add_argument('--log-level', default=config.LOG_LEVEL)

    parser = argparse.ArgumentParser(prog='fullab', description='Fullerene dual graph laboratory')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('make', parents=[common], help='build a named construction')
    p.add_argument('family', choices=['dodeca', 'nanotube50', 'goldberg', 'gswfree', 'seed'])
    p.add_argument('--r', type=int, default=0)
    p.add_argument('--p', type=int, default=1)
    p.add_argument('--q', type=int, default=0)
    p.add_argument('--t', type=int, default=2)
    p.add_argument('--n', type=int, default=20)
    p.add_argument('--convention', choices=CONVENTIONS)
    p.set_defaults(handler=cmd_make)

    p = sub.add_parser('enumerate', parents=[common], help='all isomers of C_n')
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser('character', parents=[common], help='spectrum and character per graph')
    p.add_argument('--alpha', type=float, default=config.DEFAULT_ALPHA)
    p.add_argument('--beta', type=float, default=config.DEFAULT_BETA)
    p.add_argument('--rep', choices=REPRESENTATIONS, default='dual')
    p.set_defaults(handler=cmd_character)

    p = sub.add_parser('sweep', parents=[common], help='characters over C_n as CSV')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--csv', help='output CSV (same as --out)')
    p.add_argument('--alpha', type=float, default=config.DEFAULT_ALPHA)
    p.add_argument('--beta', type=float, default=config.DEFAULT_BETA)
    p.add_argument('--rep', choices=REPRESENTATIONS, default='dual')
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser('hist', parents=[common], help='density histogram of a sweep CSV')
    p.add_argument('--csv', required=True, help='sweep CSV to read')
    p.add_argument('--bins', type=int, default=1000)
    p.add_argument('--column', default='normalized')
    p.set_defaults(handler=cmd_hist)

    p = sub.add_parser('gsw', parents=[common], help='find, check or apply gSW paths')
    p.add_argument('action', choices=['find', 'check', 'apply'])
    p.add_argument('--path', help='comma separated vertices v1,...,v2w')
    p.add_argument('--w-max', type=int)
    p.set_defaults(handler=cmd_gsw)

    p = sub.add_parser('psw', parents=[common], help='flip one edge')
    p.add_argument('action', choices=['flip'])
    p.add_argument('--edge', required=True, help='u,v')
    p.set_defaults(handler=cmd_psw)

    p = sub.add_parser('cutpartition', parents=[common], help='cut partition of T^6')
    p.add_argument('--report', choices=['summary', 'json'], default='summary')
    p.add_argument('--convention', choices=CONVENTIONS)
    p.set_defaults(handler=cmd_cutpartition)

    p = sub.add_parser('conjecture2', parents=[common], help='gSW-free vs triangular pieces table')
    p.add_argument('--n', type=int, default=20)
    p.add_argument('--csv')
    p.add_argument('--convention', choices=CONVENTIONS)
    p.set_defaults(handler=cmd_conjecture2)

    p = sub.add_parser('sample', parents=[common], help='random isomers')
    p.add_argument('method', choices=['spiral', 'psw'])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--count', type=int, default=1)
    p.add_argument('--steps', type=int, default=10000)
    p.add_argument('--burnin', type=int, default=0)
    p.add_argument('--report', help='JSON SampleReport file (default stdout)')
    p.add_argument('--uniformity', action='store_true', help='add a chi-square test against C_n')
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser('db', parents=[common], help='isomer database')
    p.add_argument('action', choices=['build', 'lookup', 'get'])
    p.add_argument('--n', type=int)
    p.add_argument('--j', type=int, default=1)
    p.add_argument('--vector', help='"n p1 ... p12"')
    p.set_defaults(handler=cmd_db)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except FullabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ValueError as e:
        logger.error(f"Invalid argument: {e}")
        return 2
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return 4


if __name__ == '__main__':
    sys.exit(main())
