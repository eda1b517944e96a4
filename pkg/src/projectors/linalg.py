# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Small dense solves with condition checks.
'''

import numpy as np
import scipy.linalg

from ..errors import ConditioningError
from ..glogger import getGLogger

__all__ = ['COND_MAX', 'pivoted_solve', 'pivoted_lstsq']
elog = getGLogger('E')
COND_MAX = 1e12


def _raise(error, what, cond, cell):
    where = '' if cell is None else ' of cell %s' % cell
    raise error("%s%s is singular or ill-conditioned, cond=%.3e!"
                % (what, where, cond), cell=cell)


def _log_cond(what, cell, cond):
    elog.debug("%s%s: cond=%.3e" % (
        what, '' if cell is None else ' of cell %s' % cell, cond))


def _scale(x, s):
    return x / s.reshape((-1,) + (1,) * (x.ndim - 1))


def pivoted_solve(G, B, what='Gram matrix', cell=None,
                  error=ConditioningError, cond_max=COND_MAX):
    '''
    Solve G X = B by column-pivoted QR of the row and column equilibrated
    matrix diag(1/r) G diag(1/c), after checking its 2-norm condition
    number against *cond_max*.
    '''
    G = np.asarray(G, dtype=float)
    B = np.asarray(B, dtype=float)
    r = np.abs(G).max(axis=1)
    r[r == 0] = 1.0
    Gs = G / r[:, None]
    c = np.abs(Gs).max(axis=0)
    c[c == 0] = 1.0
    Gs /= c[None, :]
    cond = np.linalg.cond(Gs)
    if not np.isfinite(cond) or cond > cond_max:
        _raise(error, what, cond, cell)
    _log_cond(what, cell, cond)
    Q, R, perm = scipy.linalg.qr(Gs, pivoting=True)
    Z = scipy.linalg.solve_triangular(R, Q.T @ _scale(B, r))
    X = np.empty_like(Z)
    X[perm] = Z
    return _scale(X, c)


def pivoted_lstsq(D, B, what='DoF matrix', cell=None,
                  error=ConditioningError, cond_max=COND_MAX):
    '''
    Solve the normal equations D^T D X = D^T B through a column-pivoted
    QR of D with unit column norms, without forming D^T D. The condition
    number checked is that of the scaled D, i.e. of R.
    '''
    D = np.asarray(D, dtype=float)
    c = np.linalg.norm(D, axis=0)
    c[c == 0] = 1.0
    Q, R, perm = scipy.linalg.qr(D / c[None, :], mode='economic',
                                 pivoting=True)
    cond = np.linalg.cond(R)
    if not np.isfinite(cond) or cond > cond_max:
        _raise(error, what, cond, cell)
    _log_cond(what, cell, cond)
    Z = scipy.linalg.solve_triangular(R, Q.T @ B)
    X = np.empty_like(Z)
    X[perm] = Z
    return _scale(X, c)
