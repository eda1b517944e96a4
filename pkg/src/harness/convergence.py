# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Convergence studies of manufactured scenarios.
'''

import time
import numpy as np

from .problems import get_scenario
from ..mesh import LADDER
from ..timestep import Splitting
from ..errors import SvemError
from ..glogger import getGLogger

__all__ = ['ConvergenceReport', 'compute_eoc', 'least_squares_eoc',
           'run_convergence', 'TIME_TAUS', 'REPORT_COLUMNS']
hlog = getGLogger('H')
TIME_TAUS = (0.125, 0.0625, 0.03125, 0.015625)
REPORT_COLUMNS = ('level', 'h', 'tau', 'dofs', 'l2_error', 'eoc',
                  't_linear_s', 't_nonlinear_s', 't_total_s')


def compute_eoc(errors, sizes):
    '''
    Pairwise rates log(e_{i-1}/e_i) / log(x_{i-1}/x_i), nan for the
    first entry and next to a failed (nan) error.
    '''
    e = np.asarray(errors, dtype=float)
    x = np.asarray(sizes, dtype=float)
    eoc = np.full(e.shape, np.nan)
    with np.errstate(all='ignore'):
        eoc[1:] = np.log(e[:-1] / e[1:]) / np.log(x[:-1] / x[1:])
    eoc[~np.isfinite(eoc)] = np.nan
    return eoc


def least_squares_eoc(errors, sizes):
    '''
    Slope of the least squares line through (log x, log e),
    skipping failed rows. nan if fewer than two rows remain.
    '''
    e = np.asarray(errors, dtype=float)
    x = np.asarray(sizes, dtype=float)
    ok = np.isfinite(e) & (e > 0) & np.isfinite(x) & (x > 0)
    if ok.sum() < 2:
        return float('nan')
    fitresult = np.polyfit(np.log(x[ok]), np.log(e[ok]), 1, full=True)
    hlog.debug("Fitting EOC line result: %s" % (fitresult,))
    return float(fitresult[0][0])


class ConvergenceReport(object):
    '''
    Rows of a convergence study.

    Attributes
    ----------
    scenario: str
    family: str, mesh family
    k: int
    mode: str, 'space' or 'time'
    variant: str, DRD or RDR
    tau_const: float or None, c of tau = c h^((k+1)/2) in space mode
    rows: list of dicts with keys :data:`REPORT_COLUMNS`
    '''
    __slots__ = ['scenario', 'family', 'k', 'mode', 'variant', 'tau_const',
                 'rows']

    def __init__(self, scenario, family, k, mode='space', variant='DRD',
                 tau_const=None):
        if mode not in ('space', 'time'):
            raise ValueError("Invalid convergence mode '%s'!" % mode)
        self.scenario = scenario
        self.family = family
        self.k = k
        self.mode = mode
        self.variant = variant
        self.tau_const = tau_const
        self.rows = []

    def add_row(self, level, h, tau, dofs, l2_error,
                t_linear=np.nan, t_nonlinear=np.nan):
        self.rows.append(dict(
            level=level, h=h, tau=tau, dofs=dofs, l2_error=l2_error,
            eoc=np.nan, t_linear_s=t_linear, t_nonlinear_s=t_nonlinear,
            t_total_s=t_linear + t_nonlinear))
        self._update_eoc()

    @property
    def sizes(self):
        key = 'h' if self.mode == 'space' else 'tau'
        return np.array([r[key] for r in self.rows], dtype=float)

    @property
    def errors(self):
        return np.array([r['l2_error'] for r in self.rows], dtype=float)

    def _update_eoc(self):
        for r, eoc in zip(self.rows, compute_eoc(self.errors, self.sizes)):
            r['eoc'] = eoc

    @property
    def eoc(self):
        return np.array([r['eoc'] for r in self.rows])

    @property
    def least_squares_eoc(self):
        return least_squares_eoc(self.errors, self.sizes)

    def as_array(self):
        '''(n_rows, len(REPORT_COLUMNS)) float array.'''
        return np.array([[r[c] for c in REPORT_COLUMNS] for r in self.rows],
                        dtype=float).reshape(-1, len(REPORT_COLUMNS))

    def to_dict(self):
        return dict(scenario=self.scenario, family=self.family, k=self.k,
                    mode=self.mode, variant=self.variant,
                    tau_const=self.tau_const, rows=self.rows,
                    least_squares_eoc=self.least_squares_eoc)

    def format_table(self):
        lines = ['%s k=%d on %s meshes, %s refinement, %s, EOC(lsq)=%.3f'
                 % (self.scenario, self.k, self.family, self.mode,
                    self.variant, self.least_squares_eoc),
                 '%5s %10s %10s %8s %12s %7s %10s %10s'
                 % ('level', 'h', 'tau', 'dofs', 'L2 error', 'EOC',
                    'linear/s', 'nonlin/s')]
        for r in self.rows:
            lines.append('%5d %10.4e %10.4e %8d %12.5e %7.3f %10.3f %10.3f'
                         % (r['level'], r['h'], r['tau'], r['dofs'],
                            r['l2_error'], r['eoc'], r['t_linear_s'],
                            r['t_nonlinear_s']))
        return '\n'.join(lines)

    def __repr__(self):
        return '<ConvergenceReport %s k=%d %s, %d rows>' % (
            self.scenario, self.k, self.mode, len(self.rows))


def _solve_once(scenario, workers):
    '''Run *scenario*, return (space, final error, splitting timings).'''
    mesh = scenario.build_mesh()
    space = scenario.build_space(mesh, workers=workers)
    stepper = Splitting(space, scenario.problem, scenario.splitting)
    U0 = space.interpolate(scenario.problem.u0)
    U = stepper.run(U0)
    err = space.l2_error(U, scenario.problem.exact, t=U.t)
    return mesh, space, err, stepper.timings()


def run_convergence(scenario='accuracy', k=2, family='distorted', levels=4,
                    time_mode=False, variant='DRD', taus=None, workers=1,
                    **kwargs):
    '''
    Convergence study of manufactured *scenario* at degree *k*.

    Space mode solves on levels 0 .. levels-1 of the mesh family with
    tau = c h^((k+1)/2). Time mode fixes mesh level levels-1 and
    runs the time steps *taus* (default :data:`TIME_TAUS`).
    A failed solve gives a row with nan error, the study goes on.

    Parameters
    ----------
    kwargs: passed to the scenario builder
    '''
    taus = tuple(TIME_TAUS if taus is None else taus)
    n_ref = len(taus) if time_mode else int(levels)
    if n_ref < 3:
        raise ValueError("A convergence study needs >= 3 refinements, "
                         "got %d!" % n_ref)
    if not time_mode and levels > len(LADDER):
        hlog.warning("Level %d is beyond the default ladder %s."
                     % (levels - 1, LADDER))
    splitting = dict(kwargs.pop('splitting', {}), variant=variant)
    mode = 'time' if time_mode else 'space'
    report = None
    hlog.info("Convergence study: %s, k=%d, %s, %d %s refinements, %s."
              % (scenario, k, family, n_ref, mode, variant))
    for i in range(n_ref):
        if time_mode:
            sc = get_scenario(scenario, k=k, mesh_family=family,
                              level=int(levels) - 1, tau_const=None,
                              splitting=dict(splitting, tau=taus[i]),
                              **kwargs)
        else:
            sc = get_scenario(scenario, k=k, mesh_family=family, level=i,
                              splitting=splitting, **kwargs)
        if report is None:
            report = ConvergenceReport(sc.name, family, k, mode=mode,
                                       variant=variant,
                                       tau_const=sc.tau_const)
        if sc.problem.exact is None:
            raise ValueError("Scenario %s has no exact solution!" % sc.name)
        start = time.perf_counter()
        try:
            mesh, space, err, timings = _solve_once(sc, workers)
        except SvemError as exc:
            hlog.error("Refinement %d failed: %s" % (i, exc))
            mesh = sc.build_mesh()
            report.add_row(i, mesh.h, sc.splitting.tau, -1, np.nan)
            continue
        hlog.info("Refinement %d: h=%.4e, tau=%.4e, dofs=%d, error=%.5e, "
                  "%.2fs." % (i, mesh.h, sc.splitting.tau, space.n_dofs,
                              err, time.perf_counter() - start))
        report.add_row(i, mesh.h, sc.splitting.tau, space.n_dofs, err,
                       timings['linear'], timings['nonlinear'])
    hlog.info("Least squares EOC: %.3f." % report.least_squares_eoc)
    return report
