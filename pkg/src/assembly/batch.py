# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains CellBatch class, element operators of cells with equal
sizes stacked along a leading axis.
'''

import numpy as np

from ..errors import InternalError

__all__ = ['CellBatch', 'make_batches']


class CellBatch(object):
    '''
    Stacked operators of *nc* cells sharing (d, nq, n_m).

    Attributes
    ----------
    cells: (nc,) int array
    gather: (nc, d) int array, global DoF indices
    n_boundary, n_moments: int
    area: (nc,) array
    weights: (nc, nq) array
    qpoints: (nc, nq, 2) array
    Vq: (nc, nq, r) array, monomials at the quadrature points
    Pi0q: (nc, nq, d) array, Pi0 of each local basis function
        at the quadrature points
    PiZero: (nc, r, d) array
    A, M, Mc: (nc, d, d) arrays, local matrices with eps = 1
    '''
    __slots__ = ['cells', 'gather', 'n_boundary', 'n_moments', 'area',
                 'weights', 'qpoints', 'Vq', 'Pi0q', 'PiZero',
                 'A', 'M', 'Mc']

    def __init__(self, cells, operators, gathers):
        ops = [operators[c] for c in cells]
        lay = ops[0].layout
        self.cells = np.asarray(cells, dtype=np.int64)
        self.gather = np.array([gathers[c] for c in cells], dtype=np.int64)
        self.n_boundary = lay.n_boundary
        self.n_moments = lay.n_moments
        self.area = np.array([o.area for o in ops])
        self.weights = np.array([o.qweights for o in ops])
        self.qpoints = np.array([o.qpoints for o in ops])
        self.Vq = np.array([o.Vq for o in ops])
        self.PiZero = np.array([o.PiZero for o in ops])
        self.Pi0q = self.Vq @ self.PiZero
        self.A = np.array([o.A for o in ops])
        self.M = np.array([o.M for o in ops])
        self.Mc = np.array([o.Mc for o in ops])

    @property
    def size(self):
        return self.cells.size

    @property
    def moment_dofs(self):
        '''(nc, n_m) global indices of the moment DoFs.'''
        return self.gather[:, self.n_boundary:]

    def local(self, U):
        '''Gather global vector *U* to (nc, d).'''
        return U[self.gather]

    def pi0_at_quadrature(self, U):
        '''(nc, nq) values of Pi0 u_h at the quadrature points.'''
        return np.einsum('cqd,cd->cq', self.Pi0q, U[self.gather])

    def moments(self, values):
        '''
        (nc, n_m) moments 1/|E| int_E v m_alpha, alpha < n_m, of values
        (nc, nq) given at the quadrature points.
        '''
        wv = self.weights * values
        return (np.einsum('cq,cqa->ca', wv, self.Vq[:, :, :self.n_moments])
                / self.area[:, None])

    def moment_jacobian(self, dvalues):
        '''
        (nc, n_m, n_m) matrices 1/|E| int_E df m_alpha q_beta with
        q_beta the derivative of Pi0 u_h w.r.t. moment DoF beta.
        '''
        nb, nm = self.n_boundary, self.n_moments
        wv = self.weights * dvalues
        return (np.einsum('cq,cqa,cqb->cab', wv, self.Vq[:, :, :nm],
                          self.Pi0q[:, :, nb:nb + nm])
                / self.area[:, None, None])

    def load(self, values):
        '''(nc, d) local vectors int_E v Pi0(phi_i) of values (nc, nq).'''
        return np.einsum('cq,cqd->cd', self.weights * values, self.Pi0q)


def make_batches(operators, gathers):
    '''
    Group cells by (d, nq, n_m), return a list of :class:`CellBatch`.

    Raises
    ------
    InternalError: local sizes do not match the gather lists
    '''
    groups = {}
    for c, (ops, g) in enumerate(zip(operators, gathers)):
        if ops.size != g.size:
            raise InternalError("Cell %d has %d local DoFs but %d global "
                                "indices!" % (c, ops.size, g.size))
        key = (ops.size, ops.qweights.size, ops.layout.n_moments)
        groups.setdefault(key, []).append(c)
    return [CellBatch(cells, operators, gathers)
            for _, cells in sorted(groups.items())]
