# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Command Line Interface(CLI), entry points of console_scripts.
'''

import os
import sys
import time
import argparse

from .glogger import logfile, getGLogger
from .errors import SvemError
from .__about__ import __version__, __userbase__

__all__ = ['cli_script', 'get_parser', 'main']

log = getGLogger('G')
SUBCOMMANDS = ('run', 'convergence', 'dofs', 'bench', 'fixtures')
MESH_CHOICES = ('distorted', 'structured', 'voronoi', 'nonconvex')


def print_version():
    print('svem version %s' % __version__)
    print('Copyright (C) 2024-%s svem developers' % time.strftime('%Y'))


def get_parser_top():
    '''Create top-level parser.'''
    parser = argparse.ArgumentParser(
        prog='svem',
        description="Interpolatory serendipity VEM solver for semilinear "
                    "parabolic problems, with convergence, DoF and timing "
                    "studies.",
        epilog="User's directory is %s\nFor more log details, please see: %s"
        % (__userbase__, logfile),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        add_help=False,
    )
    subparsers = parser.add_subparsers(title='subcommands', dest='subcmd')
    optgrp = parser.add_argument_group('options')
    optgrp.add_argument('-h', '--help', action='store_true',
                        help='Show this help message and exit')
    optgrp.add_argument('-V', '--version', action='store_true',
                        help='Print version and exit')
    return parser, subparsers


def get_parser_base():
    '''Create parent parser for sub-commands.'''
    parser = argparse.ArgumentParser(
        description="parent parser for sub-commands",
        add_help=False,
    )
    optgrp = parser.add_argument_group('common options')
    optgrp.add_argument('--threads', type=int, default=None, metavar='N',
                        help="Worker processes building element operators, "
                        "0 for all cores, (default: threads of the run "
                        "config, else 1)")
    optgrp.add_argument('--seed', type=int, default=None, metavar='U64',
                        help="Seed of distorted and Voronoi meshes")
    optgrp.add_argument('--out', type=str, default=None, metavar='Dir',
                        help="Directory of result files")
    optgrp.add_argument('-h', '--help', action='store_true',
                        help='Show this help message and exit')
    return parser


def get_parser_run(subparsers, parents=[]):
    '''Create the parser for the "run" sub-command.'''
    parser = subparsers.add_parser(
        'run',
        usage='%(prog)s --config file [options]...',
        description="Run the scenario of a JSON config file, write "
                    "summary.json, snapshots.npz and VTK files to --out.",
        add_help=False,
        parents=parents,
    )
    optgrp = parser.add_argument_group('run options')
    optgrp.add_argument('--config', type=str, metavar='File',
                        help='JSON config of the run')
    return parser


def get_parser_convergence(subparsers, parents=[]):
    '''Create the parser for the "convergence" sub-command.'''
    parser = subparsers.add_parser(
        'convergence',
        usage='%(prog)s [options]...',
        description="Convergence study of a manufactured scenario, "
                    "refining h with tau = c h^((k+1)/2), or tau alone "
                    "on the finest mesh with --time-mode.",
        add_help=False,
        parents=parents,
    )
    optgrp = parser.add_argument_group('convergence options')
    optgrp.add_argument('--scenario', type=str, default='accuracy',
                        choices=['accuracy', 'heat'],
                        help="Manufactured scenario, (default: %(default)s)")
    optgrp.add_argument('--mesh', type=str, default='distorted',
                        choices=MESH_CHOICES,
                        help="Mesh family, (default: %(default)s)")
    optgrp.add_argument('--k', type=int, default=2,
                        help="Polynomial degree 1..6, (default: %(default)s)")
    optgrp.add_argument('--levels', type=int, default=4,
                        help="Number of mesh levels, (default: %(default)s)")
    optgrp.add_argument('--time-mode', action='store_true',
                        help="Refine tau on the finest mesh")
    optgrp.add_argument('--variant', type=str, default='DRD',
                        choices=['DRD', 'RDR'],
                        help="Splitting variant, (default: %(default)s)")
    optgrp.add_argument('--linear-solver', type=str, default='direct',
                        choices=['direct', 'iterative'],
                        help="Diffusion solver, (default: %(default)s)")
    return parser


def get_parser_dofs(subparsers, parents=[]):
    '''Create the parser for the "dofs" sub-command.'''
    parser = subparsers.add_parser(
        'dofs',
        usage='%(prog)s [options]...',
        description="Global DoF counts of the serendipity and the "
                    "enhanced spaces. '*' marks meshes with cells "
                    "k >= eta_E, '!' non-convex ones among them.",
        add_help=False,
        parents=parents,
    )
    optgrp = parser.add_argument_group('dofs options')
    optgrp.add_argument('--k-min', type=int, default=1,
                        help="(default: %(default)s)")
    optgrp.add_argument('--k-max', type=int, default=6,
                        help="(default: %(default)s)")
    optgrp.add_argument('--mesh', type=str, action='append',
                        choices=MESH_CHOICES,
                        help="Mesh families, (default: all)")
    optgrp.add_argument('--level', type=int, default=1,
                        help="Mesh level, (default: %(default)s)")
    optgrp.add_argument('--eta', type=str, default='adaptive_stingy',
                        choices=['lazy', 'stingy', 'adaptive_stingy'],
                        help="eta_E strategy, (default: %(default)s)")
    optgrp.add_argument('--verify', action='store_true',
                        help="Check counts against built DoF maps")
    return parser


def get_parser_bench(subparsers, parents=[]):
    '''Create the parser for the "bench" sub-command.'''
    parser = subparsers.add_parser(
        'bench',
        usage='%(prog)s [options]...',
        description="Time linear and nonlinear substeps, best of "
                    "--repeats runs per mode.",
        add_help=False,
        parents=parents,
    )
    optgrp = parser.add_argument_group('bench options')
    optgrp.add_argument('--mode', type=str, action='append',
                        choices=['interp', 'coupled', 'unstabilized'],
                        help="Reaction modes, the first is the reference, "
                        "(default: interp coupled)")
    optgrp.add_argument('--scenario', type=str, default='allen_cahn',
                        choices=['accuracy', 'heat', 'allen_cahn', 'sine'],
                        help="(default: %(default)s)")
    optgrp.add_argument('--k', type=int, default=2,
                        help="(default: %(default)s)")
    optgrp.add_argument('--mesh', type=str, default='voronoi',
                        choices=MESH_CHOICES,
                        help="(default: %(default)s)")
    optgrp.add_argument('--level', type=int, default=3,
                        help="Mesh level, (default: %(default)s)")
    optgrp.add_argument('--steps', type=int, default=20,
                        help="Time steps per run, 0 for all, "
                        "(default: %(default)s)")
    optgrp.add_argument('--repeats', type=int, default=3,
                        help="(default: %(default)s)")
    return parser


def get_parser_fixtures(subparsers, parents=[]):
    '''Create the parser for the "fixtures" sub-command.'''
    parser = subparsers.add_parser(
        'fixtures',
        usage='%(prog)s --out dir [options]...',
        description="Write the Voronoi and non-convex fixture mesh files.",
        add_help=False,
        parents=parents,
    )
    optgrp = parser.add_argument_group('fixtures options')
    optgrp.add_argument('--levels', type=int, default=4,
                        help="Number of levels, (default: %(default)s)")
    return parser


def get_parser():
    '''Assemble top-level parser and sub-command parsers.'''
    top, subparsers = get_parser_top()
    base = get_parser_base()
    parserlib = {'top': top}
    for name in SUBCOMMANDS:
        getter = globals()['get_parser_%s' % name]
        parserlib[name] = getter(subparsers, parents=[base])
    return parserlib


def _workers(args):
    return 1 if args.threads is None else args.threads


def _outfile(args, name):
    if not args.out:
        return None
    os.makedirs(args.out, exist_ok=True)
    return os.path.join(args.out, name)


def do_run(args):
    from .harness import run_config
    if not args.config:
        raise ValueError("Subcommand run needs --config!")
    summary = run_config(args.config, out=args.out,
                         threads=args.threads, seed=args.seed)
    print("%s: %d DoFs, %d steps, t=%g, linear %.3fs, nonlinear %.3fs"
          % (summary['config']['scenario'], summary['n_dofs'],
             summary['n_steps'], summary['t_final'],
             summary['timings']['linear'], summary['timings']['nonlinear']))
    if 'l2_error' in summary:
        print("L2 error at T: %.6e" % summary['l2_error'])


def do_convergence(args):
    from .harness import run_convergence, export_csv
    from ._json import dump_json
    mesh = {} if args.seed is None else {'seed': args.seed}
    report = run_convergence(
        args.scenario, k=args.k, family=args.mesh, levels=args.levels,
        time_mode=args.time_mode, variant=args.variant,
        workers=_workers(args), mesh=mesh,
        splitting={'linear_solver': args.linear_solver})
    print(report.format_table())
    stem = 'convergence-%s-%s-k%d-%s-%s' % (
        args.scenario, args.mesh, args.k, report.mode, args.variant)
    path = _outfile(args, stem + '.csv')
    if path:
        export_csv(report, path)
        dump_json(report, _outfile(args, stem + '.json'))


def do_dofs(args):
    from .harness import dof_report, format_dof_report
    from .mesh import mesh_family, EtaStrategy
    from ._json import dump_json
    meshes = {}
    for name in args.mesh or MESH_CHOICES:
        mesh = mesh_family(name, args.level, seed=args.seed)
        meshes[mesh.name] = mesh
    rows = dof_report(meshes, args.k_min, args.k_max,
                      strategy=EtaStrategy(args.eta), verify=args.verify)
    print(format_dof_report(rows))
    path = _outfile(args, 'dofs.json')
    if path:
        dump_json({'eta': args.eta, 'rows': rows}, path)


def do_bench(args):
    from .harness import get_scenario, benchmark, format_benchmark
    from ._json import dump_json
    mesh = {} if args.seed is None else {'seed': args.seed}
    sc = get_scenario(args.scenario, k=args.k, mesh_family=args.mesh,
                      level=args.level, mesh=mesh)
    result = benchmark(sc, modes=args.mode or ('interp', 'coupled'),
                       repeats=args.repeats, n_steps=args.steps,
                       workers=_workers(args))
    print(format_benchmark(result))
    path = _outfile(args, 'bench-%s-%s-k%d.json'
                    % (args.scenario, args.mesh, args.k))
    if path:
        dump_json(result, path)


def do_fixtures(args):
    from .mesh import LADDER, voronoi_mesh, nonconvex_mesh
    if not args.out:
        raise ValueError("Subcommand fixtures needs --out!")
    os.makedirs(args.out, exist_ok=True)
    for level in range(args.levels):
        n = LADDER[0] * 2 ** level
        seed = 0 if args.seed is None else args.seed
        for mesh in (voronoi_mesh(n, seed=seed, cache_dir=args.out),
                     nonconvex_mesh(n, cache_dir=args.out)):
            print("%s: %d cells, h=%.4g" % (mesh.name, mesh.n_cells, mesh.h))


def main(argv=None):
    '''
    Parse *argv* and run the subcommand. Return the exit status,
    0 on success, 1 for solver errors, 2 for invalid input.
    '''
    parserlib = get_parser()
    args = parserlib['top'].parse_args(argv)
    log.debug("Get input arguments: %s" % args)

    if args.help:
        if args.subcmd:
            parserlib[args.subcmd].print_help()
        else:
            parserlib['top'].print_help()
        return 0
    if args.version:
        print_version()
        return 0
    if not args.subcmd:
        parserlib['top'].print_help()
        return 0

    try:
        globals()['do_%s' % args.subcmd](args)
    except SvemError as exc:
        log.error("Subcommand %s failed: %s" % (args.subcmd, exc))
        return 1
    except (ValueError, IOError) as exc:
        log.error("Invalid input for %s: %s" % (args.subcmd, exc))
        return 2
    return 0


def cli_script():
    '''Entry point for svem'''
    sys.exit(main())
