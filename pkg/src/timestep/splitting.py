# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains Splitting class, symmetric Strang splitting of
u_t - eps lap(u) + f(u) = g into diffusion and reaction substeps.

    DRD: D(tau/2) R(tau) D(tau/2)
    RDR: R(tau/2) D(tau) R(tau/2)
'''

import time
import numpy as np

from .config import SplittingConfig
from .linear import LinearStepOperator
from .reaction import ReactionSolver
from ..assembly import StateVector
from ..errors import StepFailure
from ..glogger import getGLogger

__all__ = ['Splitting']
tlog = getGLogger('T')


class Splitting(object):
    '''
    Time stepper on a :class:`VemSpace`.

    Attributes
    ----------
    space: :class:`VemSpace`, eps of the problem is set on it
    problem: :class:`ProblemSpec`
    config: :class:`SplittingConfig`
    reaction: :class:`ReactionSolver`
    timers: dict, seconds spent in 'linear' and 'nonlinear' substeps
    '''
    __slots__ = ['space', 'problem', 'config', 'reaction', 'timers',
                 '_linear']

    def __init__(self, space, problem, config=None):
        self.space = space
        self.problem = problem
        self.config = config or SplittingConfig()
        space.eps = problem.eps
        L = problem.lipschitz
        if L and self.config.tau >= 2.0 / L:
            tlog.warning("tau = %g >= 2/L_f = %g, the reaction solve may "
                         "not be a contraction!" % (self.config.tau, 2.0 / L))
        self.reaction = ReactionSolver(
            space, problem, mode=self.config.reaction,
            tol=self.config.newton_tol, maxiter=self.config.newton_maxiter,
            baseline_maxiter=self.config.baseline_maxiter)
        self.timers = dict(linear=0.0, nonlinear=0.0)
        self._linear = {}

    def linear_operator(self, s):
        '''Cached :class:`LinearStepOperator` of substep length *s*.'''
        op = self._linear.get(s)
        if op is None:
            start = time.perf_counter()
            op = LinearStepOperator(self.space.M, self.space.A, s,
                                    mode=self.config.linear_solver,
                                    tol=self.config.linear_tol)
            self.timers['linear'] += time.perf_counter() - start
            self._linear[s] = op
        return op

    def diffusion_substep(self, U, s):
        '''Solve (M + s/2 A) U' = (M - s/2 A) U.'''
        U = getattr(U, 'values', U)
        op = self.linear_operator(s)
        start = time.perf_counter()
        out = op(U)
        self.timers['linear'] += time.perf_counter() - start
        return out

    def reaction_substep(self, U, s, t=0.0):
        '''Reaction over [t, t + s].'''
        U = getattr(U, 'values', U)
        if self.problem.pure_diffusion:
            return U.copy()
        start = time.perf_counter()
        out = self.reaction(U, s, t)
        self.timers['nonlinear'] += time.perf_counter() - start
        return out

    def step(self, U, t=0.0):
        '''Advance *U* from *t* to *t* + tau.'''
        U = getattr(U, 'values', U)
        tau = self.config.tau
        if self.config.variant == 'DRD':
            U = self.diffusion_substep(U, 0.5 * tau)
            U = self.reaction_substep(U, tau, t)
            return self.diffusion_substep(U, 0.5 * tau)
        else:
            U = self.reaction_substep(U, 0.5 * tau, t)
            U = self.diffusion_substep(U, tau)
            return self.reaction_substep(U, 0.5 * tau, t + 0.5 * tau)

    def _schedule(self, t0, times):
        tau = self.config.tau
        steps = set()
        for time_ in times:
            n = int(round((time_ - t0) / tau))
            if abs(t0 + n * tau - time_) > 1e-9 * max(1.0, abs(time_)):
                tlog.warning("Output time %g is not on the time grid, "
                             "using %g." % (time_, t0 + n * tau))
            steps.add(n)
        return steps

    def run(self, U0, observers=(), times=None):
        '''
        Integrate from *U0* (a :class:`StateVector`) over config.T.

        Parameters
        ----------
        observers: callables obs(state, step), state a :class:`StateVector`
        times: output times for the observers, all steps if None

        Raises
        ------
        StepFailure: with :attr:`step` set to the failed step
        '''
        n = self.config.n_steps
        tau = self.config.tau
        t0 = getattr(U0, 't', 0.0)
        U = np.array(getattr(U0, 'values', U0), dtype=float)
        steps = None if times is None else self._schedule(t0, times)
        tlog.info("Run %s: %d steps of %s, tau=%g, T=%g, %d DoFs."
                  % (self.problem.name, n, self.config.variant, tau,
                     self.config.T, U.size))
        if observers and (steps is None or 0 in steps):
            for obs in observers:
                obs(StateVector(U, t0), 0)
        for i in range(1, n + 1):
            try:
                U = self.step(U, t0 + (i - 1) * tau)
            except StepFailure as exc:
                exc.step = i
                tlog.error("Step %d failed: %s" % (i, exc))
                raise
            if observers and (steps is None or i in steps):
                state = StateVector(U, t0 + i * tau)
                for obs in observers:
                    obs(state, i)
        tlog.info("Run %s done: linear %.3fs, nonlinear %.3fs."
                  % (self.problem.name, self.timers['linear'],
                     self.timers['nonlinear']))
        return StateVector(U, t0 + n * tau)

    def timings(self):
        out = dict(self.timers)
        out['total'] = out['linear'] + out['nonlinear']
        return out

    def reset_timers(self):
        '''Zero the phase timers, cached operators are kept.'''
        self.timers = dict(linear=0.0, nonlinear=0.0)
