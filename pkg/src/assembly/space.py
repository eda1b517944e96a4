# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains VemSpace class, the global virtual element space of a mesh.
'''

import numpy as np
import scipy.sparse

from .dofmap import build_dof_map
from .batch import make_batches
from .state import StateVector
from ..projectors import build_operators
from ..errors import InternalError, StepFailure
from ..glogger import getGLogger

__all__ = ['VemSpace', 'assemble', 'l2_difference']
alog = getGLogger('A')


def _scatter(batches, name, total):
    rows, cols, data = [], [], []
    for b in batches:
        d = b.gather.shape[1]
        rows.append(np.repeat(b.gather, d, axis=1).ravel())
        cols.append(np.tile(b.gather, (1, d)).ravel())
        data.append(getattr(b, name).ravel())
    mat = scipy.sparse.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(total, total)).tocsr()
    mat.sum_duplicates()
    asym = abs(mat - mat.T).max() if mat.nnz else 0.0
    scale = abs(mat).max() if mat.nnz else 1.0
    if asym > 1e-13 * scale:
        raise InternalError("Assembled %s is not symmetric, max |X - X^T| "
                            "= %.3e!" % (name, asym))
    return mat


def assemble(batches, dofmap, eps=1.0):
    '''
    Scatter-add the local matrices, return sparse (M, A) in CSR format,
    A scaled by *eps*.
    '''
    for b in batches:
        if b.gather.min() < 0 or b.gather.max() >= dofmap.total:
            raise InternalError("Gather list of cells %s out of range!"
                                % b.cells[:5])
    M = _scatter(batches, 'M', dofmap.total)
    A = _scatter(batches, 'A', dofmap.total)
    return M, eps * A


class VemSpace(object):
    '''
    Global serendipity (or enhanced) virtual element space.

    Attributes
    ----------
    mesh: :class:`PolygonalMesh`
    k: int
    strategy: :class:`EtaStrategy` or None
    space: str, 'serendipity' or 'enhanced'
    eps: float, diffusion coefficient, scales the stiffness only
    dofmap: :class:`DofMap`
    operators: list of :class:`ElementOperators`
    batches: list of :class:`CellBatch`
    M: sparse stabilized mass matrix
    A1: sparse stiffness matrix for eps = 1
    Mc: sparse consistency part of the mass matrix
    '''
    __slots__ = ['mesh', 'k', 'strategy', 'space', 'eps', 'dofmap',
                 'operators', 'batches', 'M', 'A1', 'Mc', '_constant']

    def __init__(self, mesh, k, strategy=None, space='serendipity',
                 eps=1.0, quad_degree=None, workers=1):
        self.mesh = mesh
        self.k = int(k)
        self.strategy = strategy
        self.space = space
        self.eps = float(eps)
        self.dofmap = build_dof_map(mesh, self.k, strategy, space)
        self.operators = build_operators(
            mesh, self.k, strategy=strategy, space=space,
            quad_degree=quad_degree, workers=workers)
        self.batches = make_batches(self.operators, self.dofmap.gathers)
        self.M, self.A1 = assemble(self.batches, self.dofmap)
        self.Mc = _scatter(self.batches, 'Mc', self.dofmap.total)
        self._constant = None
        alog.info("Space %s k=%d on %s: %d DoFs (%d nodal), %d batches."
                  % (space, self.k, mesh.name, self.dofmap.total,
                     self.dofmap.n_nodal, len(self.batches)))

    @property
    def A(self):
        '''Stiffness matrix eps * A1.'''
        return self.eps * self.A1

    @property
    def n_dofs(self):
        return self.dofmap.total

    def _call(self, g, points, t):
        vals = g(points) if t is None else g(points, t)
        return np.broadcast_to(np.asarray(vals, dtype=float),
                               points.shape[:-1])

    def interpolate(self, g, t=None):
        '''
        Interpolant of *g*: point values at the nodal DoFs, moments
        1/|E| int_E g m_alpha by cell quadrature.

        Parameters
        ----------
        g: callable, g(points) or g(points, t) if *t* is given,
            points of shape (n, 2)
        t: float, optional time
        '''
        dm = self.dofmap
        U = np.empty(dm.total)
        U[:dm.n_nodal] = self._call(g, dm.coordinates, t)
        for b in self.batches:
            if b.n_moments:
                pts = b.qpoints.reshape(-1, 2)
                vals = self._call(g, pts, t).reshape(b.weights.shape)
                U[b.moment_dofs] = b.moments(vals)
        return StateVector(U, 0.0 if t is None else t)

    def constant_vector(self):
        '''DoF vector of the constant function 1.'''
        if self._constant is None:
            c = self.interpolate(lambda p: np.ones(len(p))).values
            c.setflags(write=False)
            self._constant = c
        return self._constant

    def total_mass(self, U):
        '''int u_h, i.e. c^T M U with c the constant vector.'''
        U = getattr(U, 'values', U)
        return float(self.constant_vector() @ (self.M @ U))

    def nonlinear_dof_vector(self, U, f):
        '''
        Quasi-interpolant DoFs of f(u_h): f of the nodal values, and
        1/|E| int_E f(Pi0 u_h) m_alpha for the moments.

        Raises
        ------
        StepFailure: f gives non-finite values, names the first DoF
        '''
        U = getattr(U, 'values', U)
        dm = self.dofmap
        out = np.empty(dm.total)
        with np.errstate(all='ignore'):
            out[:dm.n_nodal] = f(U[:dm.n_nodal])
            for b in self.batches:
                if b.n_moments:
                    vals = f(b.pi0_at_quadrature(U))
                    out[b.moment_dofs] = b.moments(vals)
        bad = np.flatnonzero(~np.isfinite(out))
        if bad.size:
            raise StepFailure("Nonlinear term is not finite at DoF %d "
                              "(u=%r)!" % (bad[0], U[bad[0]]), dof=int(bad[0]))
        return out

    def cell_values(self, U, points=None):
        '''
        Values of Pi0 u_h, a list with one array per cell, at *points*
        (a list of (n_c, 2) arrays, default the cell vertices).
        '''
        U = getattr(U, 'values', U)
        out = []
        for c, ops in enumerate(self.operators):
            pts = (self.mesh.cell_points(c) if points is None
                   else points[c])
            coef = ops.PiZero @ U[self.dofmap.gathers[c]]
            out.append(ops.basis.evaluate(pts) @ coef)
        return out

    evaluate_pi0 = cell_values

    def cell_averages(self, U):
        '''(nc,) array, 1/|E| int_E Pi0 u_h.'''
        U = getattr(U, 'values', U)
        out = np.empty(self.mesh.n_cells)
        for b in self.batches:
            out[b.cells] = (np.einsum('cq,cq->c', b.weights,
                                      b.pi0_at_quadrature(U)) / b.area)
        return out

    def l2_error(self, U, u_exact, t=None):
        '''sqrt(sum_E int_E (u_exact - Pi0 u_h)^2).'''
        U = getattr(U, 'values', U)
        err = 0.0
        for b in self.batches:
            ex = self._call(u_exact, b.qpoints.reshape(-1, 2), t)
            diff = ex.reshape(b.weights.shape) - b.pi0_at_quadrature(U)
            err += np.sum(b.weights * diff ** 2)
        return float(np.sqrt(err))

    def l2_norm(self, U):
        return self.l2_error(U, lambda p: np.zeros(len(p)))

    def __repr__(self):
        return ('VemSpace(%s, k=%d, %s, dofs=%d)'
                % (self.mesh.name, self.k, self.space, self.n_dofs))


def l2_difference(space_a, Ua, space_b, Ub):
    '''
    L2 distance of Pi0 reconstructions in two spaces on the same mesh,
    integrated with the rules of the space of higher degree.
    '''
    if space_a.mesh is not space_b.mesh and (
            space_a.mesh.n_cells != space_b.mesh.n_cells):
        raise ValueError("Spaces live on different meshes!")
    if space_b.k > space_a.k:
        space_a, Ua, space_b, Ub = space_b, Ub, space_a, Ua
    Ua = getattr(Ua, 'values', Ua)
    Ub = getattr(Ub, 'values', Ub)
    pts = [ops.qpoints for ops in space_a.operators]
    va = space_a.cell_values(Ua, pts)
    vb = space_b.cell_values(Ub, pts)
    err = sum(np.sum(ops.qweights * (a - b) ** 2)
              for ops, a, b in zip(space_a.operators, va, vb))
    return float(np.sqrt(err))
