# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Phase timings of the interpolatory reaction step against the
quadrature based baselines.
'''

import numpy as np

from ..timestep import Splitting, SplittingConfig
from ..assembly import l2_difference
from ..glogger import getGLogger

__all__ = ['BENCH_MODES', 'run_mode', 'benchmark', 'format_benchmark']
hlog = getGLogger('H')

# mode -> (space, reaction)
BENCH_MODES = {
    'interp': ('serendipity', 'interpolatory'),
    'coupled': ('enhanced', 'coupled'),
    'unstabilized': ('serendipity', 'unstabilized'),
}


def _limited(config, n_steps):
    opts = config.to_dict()
    if n_steps:
        opts['T'] = n_steps * opts['tau']
    return opts


def run_mode(scenario, mode, repeats=3, n_steps=None, workers=1, mesh=None):
    '''
    Time *scenario* in *mode* of :data:`BENCH_MODES`, best of *repeats*
    runs on one space, so the linear operators stay cached after the
    first run.

    Returns
    -------
    dict with mode, space (the :class:`VemSpace`), dofs, linear,
    nonlinear, total (seconds of the fastest run) and state
    (final :class:`StateVector`)
    '''
    if mode not in BENCH_MODES:
        raise ValueError("Invalid benchmark mode '%s', choose from %s!"
                         % (mode, sorted(BENCH_MODES)))
    space_name, reaction = BENCH_MODES[mode]
    space = scenario.build_space(mesh, workers=workers, space=space_name)
    opts = _limited(scenario.splitting, n_steps)
    opts['reaction'] = reaction
    config = SplittingConfig(**opts)
    stepper = Splitting(space, scenario.problem, config)
    U0 = space.interpolate(scenario.problem.u0)
    best, state = None, None
    for i in range(max(1, int(repeats))):
        stepper.reset_timers()
        U = stepper.run(U0)
        t = stepper.timings()
        hlog.debug("Benchmark %s run %d: %s." % (mode, i, t))
        if best is None or t['total'] < best['total']:
            best, state = t, U
    hlog.info("Benchmark %s: %d DoFs, linear %.3fs, nonlinear %.3fs."
              % (mode, space.n_dofs, best['linear'], best['nonlinear']))
    return dict(mode=mode, space=space, dofs=space.n_dofs, steps=config.n_steps,
                linear=best['linear'], nonlinear=best['nonlinear'],
                total=best['total'], state=state)


def benchmark(scenario, modes=('interp', 'coupled'), repeats=3, n_steps=None,
              workers=1):
    '''
    Run *scenario* in each of *modes* from the same initial data and
    tau. With two or more modes the nonlinear and linear time ratios
    and the L2 distance of the final states are given relative to the
    first mode.

    Returns
    -------
    dict with 'runs' (list of :func:`run_mode` results without states)
    and 'comparisons' (list of dicts)
    '''
    mesh = scenario.build_mesh()
    runs = [run_mode(scenario, m, repeats=repeats, n_steps=n_steps,
                     workers=workers, mesh=mesh) for m in modes]
    comps = []
    ref = runs[0]
    for r in runs[1:]:
        with np.errstate(divide='ignore', invalid='ignore'):
            nl = np.divide(r['nonlinear'], ref['nonlinear'])
            lin = np.divide(r['linear'], ref['linear'])
        diff = l2_difference(ref['space'], ref['state'], r['space'],
                             r['state'])
        comps.append(dict(reference=ref['mode'], mode=r['mode'],
                          nonlinear_ratio=float(nl), linear_ratio=float(lin),
                          l2_difference=diff))
        hlog.info("%s / %s: nonlinear ratio %.2f, linear ratio %.2f, "
                  "final L2 difference %.3e." % (r['mode'], ref['mode'],
                                                 nl, lin, diff))
    keep = ('mode', 'dofs', 'steps', 'linear', 'nonlinear', 'total')
    return dict(scenario=scenario.name, k=scenario.k,
                mesh=scenario.mesh, tau=scenario.splitting.tau,
                runs=[{key: r[key] for key in keep} for r in runs],
                comparisons=comps)


def format_benchmark(result):
    lines = ['%s, k=%d, tau=%g' % (result['scenario'], result['k'],
                                   result['tau']),
             '%-13s %8s %6s %12s %12s %12s' % (
                 'mode', 'dofs', 'steps', 'linear/s', 'nonlinear/s',
                 'total/s')]
    for r in result['runs']:
        lines.append('%-13s %8d %6d %12.4f %12.4f %12.4f' % (
            r['mode'], r['dofs'], r['steps'], r['linear'], r['nonlinear'],
            r['total']))
    for c in result['comparisons']:
        lines.append('%s/%s: nonlinear ratio %.2f, linear ratio %.2f, '
                     'L2 difference %.3e' % (
                         c['mode'], c['reference'], c['nonlinear_ratio'],
                         c['linear_ratio'], c['l2_difference']))
    return '\n'.join(lines)
