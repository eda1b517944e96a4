# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Crank-Nicolson reaction substeps.

The interpolatory solve is decoupled: point-value DoFs are scalar
equations, moment DoFs of each cell form a small local system once the
boundary values are known. The coupled and unstabilized solves are
global semilinear iterations with one mass solve per iteration.
'''

import numpy as np
import scipy.sparse
import scipy.sparse.linalg as spla

from ..errors import StepFailure
from ..glogger import getGLogger

__all__ = ['reaction_scalar_solve', 'ReactionSolver',
           'coupled_baseline_reaction']
tlog = getGLogger('T')


def reaction_scalar_solve(u1, s, f, df, source=0.0, tol=1e-10, maxiter=50,
                          omega=0.5, dofs=None, max_halvings=40):
    '''
    Solve u2 - u1 + s/2 (f(u1) + f(u2)) = source entry by entry.

    Newton with update r / (1 + s/2 f'(u2)), halved until |r| decreases,
    until |r| <= tol (1 + |u1|). For s L_f < 2 the residual is strictly
    increasing in u2 and a short enough step always reduces |r|.
    Entries still unconverged after *maxiter* iterations are retried by
    the damped fixed point iteration u <- (1 - omega) u + omega (c - s/2 f(u)).

    Parameters
    ----------
    u1: array of values
    source: array or float, added to the right hand side
    dofs: global indices of *u1*, for error messages
    max_halvings: int, step halvings per Newton iteration

    Returns
    -------
    u2: array
    iterations: int array, Newton iterations per entry

    Raises
    ------
    StepFailure: both iterations fail, names the first DoF
    '''
    u1 = np.asarray(u1, dtype=float)
    h = 0.5 * s
    u = u1.copy()
    iters = np.zeros(u.shape, dtype=np.int64)
    with np.errstate(all='ignore'):
        c = u1 - h * f(u1) + source
        thr = tol * (1.0 + np.abs(u1))
        active = np.arange(u.size)
        for it in range(maxiter + 1):
            ua = u[active]
            r = ua + h * f(ua) - c[active]
            todo = ~(np.abs(r) <= thr[active])
            active, ua, r = active[todo], ua[todo], r[todo]
            if active.size == 0 or it == maxiter:
                break
            du = r / (1.0 + h * df(ua))
            flat = ~np.isfinite(du)
            du[flat] = r[flat]
            un = ua - du
            lam = np.ones_like(du)
            bad = np.arange(active.size)
            for _ in range(max_halvings):
                ub = un[bad]
                rn = ub + h * f(ub) - c[active[bad]]
                bad = bad[~(np.abs(rn) < np.abs(r[bad]))]
                if bad.size == 0:
                    break
                lam[bad] *= 0.5
                un[bad] = ua[bad] - lam[bad] * du[bad]
            u[active] = un
            iters[active] += 1
        if active.size:
            tlog.debug("Scalar Newton failed for %d entries, damped fixed "
                       "point iteration instead." % active.size)
            ua = u1[active].copy()
            for it in range(20 * maxiter):
                ua = (1.0 - omega) * ua + omega * (c[active] - h * f(ua))
                r = ua + h * f(ua) - c[active]
                if np.all(np.abs(r) <= thr[active]):
                    break
            bad = ~(np.abs(r) <= thr[active])
            if bad.any():
                i = int(active[bad][0])
                dof = i if dofs is None else int(dofs[i])
                raise StepFailure("Reaction solve failed at DoF %d, u1=%r, "
                                  "residual %.3e!" % (dof, u1[i],
                                                      np.abs(r[bad][0])),
                                  dof=dof, residual=float(np.abs(r[bad][0])))
            u[active] = ua
    return u, iters


class ReactionSolver(object):
    '''
    Reaction substep U -> U' of length s on a :class:`VemSpace`.

    Attributes
    ----------
    space: :class:`VemSpace`
    problem: :class:`ProblemSpec`
    mode: str
        'interpolatory', two stages, scalar Newton for point values
        then local Newton per cell for moments;
        'coupled', M U' = M U - s/2 (F(U) + F(U')) with
        <F(U), v> = (f(Pi0 u_h), Pi0 v) by cell quadrature;
        'unstabilized', M U' = M U - s/2 Mc (f~(U) + f~(U')) with the
        consistency part Mc of the mass matrix.
    tol, maxiter: Newton stopping
    baseline_maxiter: iteration cap of the coupled and unstabilized modes
    stats: dict, accumulated iteration counts
    '''
    __slots__ = ['space', 'problem', 'mode', 'tol', 'maxiter',
                 'baseline_maxiter', 'stats', '_mass_lu']

    def __init__(self, space, problem, mode='interpolatory', tol=1e-10,
                 maxiter=50, baseline_maxiter=100):
        if mode not in ('interpolatory', 'coupled', 'unstabilized'):
            raise ValueError("Invalid reaction solver '%s'!" % mode)
        self.space = space
        self.problem = problem
        self.mode = mode
        self.tol = tol
        self.maxiter = maxiter
        self.baseline_maxiter = baseline_maxiter
        self.stats = dict(substeps=0, scalar_newton=0, local_newton=0,
                          fallback=0, semilinear=0)
        self._mass_lu = None

    def source_vector(self, s, t):
        '''s/2 (g~(t) + g~(t + s)), g~ the interpolant of the source.'''
        g = self.problem.source
        if g is None:
            return 0.0
        return 0.5 * s * (self.space.interpolate(g, t).values
                          + self.space.interpolate(g, t + s).values)

    def __call__(self, U, s, t=0.0):
        U = getattr(U, 'values', U)
        src = self.source_vector(s, t)
        self.stats['substeps'] += 1
        if self.mode == 'interpolatory':
            return self._interpolatory(U, s, src)
        elif self.mode == 'coupled':
            return self._semilinear(U, s, src, self._coupled_load)
        else:
            return self._semilinear(U, s, src, self._unstabilized_load)

    def _interpolatory(self, U, s, src):
        dm = self.space.dofmap
        nn = dm.n_nodal
        f, df = self.problem.f, self.problem.df
        U2 = np.empty_like(U)
        src_n = src if np.isscalar(src) else src[:nn]
        U2[:nn], iters = reaction_scalar_solve(
            U[:nn], s, f, df, source=src_n, tol=self.tol,
            maxiter=self.maxiter)
        self.stats['scalar_newton'] += int(iters.sum())
        self.stats['fallback'] += int(np.count_nonzero(iters >= self.maxiter))
        for b in self.space.batches:
            if b.n_moments:
                src_m = src if np.isscalar(src) else src[b.moment_dofs]
                U2[b.moment_dofs] = self.local_newton(b, U, U2, s, src_m)
        return U2

    def local_newton(self, b, U1, U2, s, src=0.0):
        '''
        Moment DoFs x of the cells in batch *b* solving
        x - x1 + s/2 (f~_m(U1) + f~_m(U2(x))) = src,
        boundary entries of U2 given. Jacobian
        I + s/2 / |E| int f'(Pi0 u) m_alpha q_beta.
        '''
        f, df = self.problem.f, self.problem.df
        h = 0.5 * s
        nb = b.n_boundary
        x1 = U1[b.moment_dofs]
        with np.errstate(all='ignore'):
            c = x1 - h * b.moments(f(b.pi0_at_quadrature(U1))) + src
            base = np.einsum('cqd,cd->cq', b.Pi0q[:, :, :nb],
                             U2[b.gather[:, :nb]])
            Pm = b.Pi0q[:, :, nb:]
            thr = self.tol * (1.0 + np.abs(x1).max(axis=1))
            x = x1.copy()
            eye = np.eye(b.n_moments)
            for it in range(self.maxiter + 1):
                uq = base + np.einsum('cqb,cb->cq', Pm, x)
                R = x + h * b.moments(f(uq)) - c
                res = np.abs(R).max(axis=1)
                todo = ~(res <= thr)
                if not todo.any():
                    break
                if it == self.maxiter:
                    i = int(np.flatnonzero(todo)[0])
                    raise StepFailure(
                        "Local Newton failed in cell %d, residual %.3e!"
                        % (b.cells[i], res[i]),
                        cell=int(b.cells[i]), residual=float(res[i]))
                J = eye + h * b.moment_jacobian(df(uq))
                dx = np.linalg.solve(J[todo], R[todo][..., None])[..., 0]
                x[todo] -= dx
                self.stats['local_newton'] += int(todo.sum())
        return x

    def mass_solve(self, b):
        if self._mass_lu is None:
            self._mass_lu = spla.splu(scipy.sparse.csc_matrix(self.space.M))
        return self._mass_lu.solve(b)

    def _coupled_load(self, U):
        total = self.space.n_dofs
        out = np.zeros(total)
        for b in self.space.batches:
            loc = b.load(self.problem.f(b.pi0_at_quadrature(U)))
            out += np.bincount(b.gather.ravel(), weights=loc.ravel(),
                               minlength=total)
        return self.mass_solve(out)

    def _unstabilized_load(self, U):
        return self.mass_solve(
            self.space.Mc @ self.space.nonlinear_dof_vector(U, self.problem.f))

    def _semilinear(self, U1, s, src, load):
        h = 0.5 * s
        rhs = U1 - h * load(U1) + src
        thr = self.tol * (1.0 + np.abs(U1).max())
        U = U1
        for it in range(1, self.baseline_maxiter + 1):
            Unew = rhs - h * load(U)
            diff = np.abs(Unew - U).max()
            U = Unew
            if diff <= thr:
                break
        else:
            raise StepFailure("Semilinear iteration (%s) did not converge in "
                              "%d iterations, last change %.3e!"
                              % (self.mode, self.baseline_maxiter, diff),
                              residual=float(diff))
        self.stats['semilinear'] += it
        return U


def coupled_baseline_reaction(space, problem, U, s, t=0.0, **kwargs):
    '''
    One coupled reaction substep on *space* (an enhanced space for the
    comparison runs), see :class:`ReactionSolver` mode 'coupled'.
    '''
    return ReactionSolver(space, problem, mode='coupled', **kwargs)(U, s, t)
