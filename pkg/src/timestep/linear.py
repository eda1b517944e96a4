# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains LinearStepOperator class, the Crank-Nicolson diffusion solve.
'''

import inspect
import numpy as np
import scipy.sparse
import scipy.sparse.linalg as spla

from ..errors import StepFailure
from ..glogger import getGLogger

__all__ = ['LinearStepOperator']
tlog = getGLogger('T')
_CG_RTOL = 'rtol' if 'rtol' in inspect.signature(spla.cg).parameters else 'tol'


class LinearStepOperator(object):
    '''
    Solve (M + s/2 A) U' = (M - s/2 A) U for a fixed substep length *s*.
    The factorization (or preconditioner) is computed once.

    Attributes
    ----------
    s: float
    mode: str, 'direct' or 'iterative'
    tol: float, relative residual required
    drop_tol: float, ILU drop tolerance of the iterative mode
    '''
    __slots__ = ['s', 'mode', 'tol', 'drop_tol', 'lhs', 'rhs', '_solve',
                 'n_solves', 'n_iterations']

    def __init__(self, M, A, s, mode='direct', tol=1e-10, drop_tol=1e-5):
        self.s = float(s)
        self.mode = mode
        self.tol = float(tol)
        self.drop_tol = float(drop_tol)
        half = 0.5 * self.s
        self.lhs = scipy.sparse.csc_matrix(M + half * A)
        self.rhs = scipy.sparse.csr_matrix(M - half * A)
        self.n_solves = 0
        self.n_iterations = 0
        if mode == 'direct':
            lu = spla.splu(self.lhs)
            self._solve = lambda b, x0: lu.solve(b)
        elif mode == 'iterative':
            ilu = spla.spilu(self.lhs, drop_tol=self.drop_tol)
            P = spla.LinearOperator(self.lhs.shape, matvec=ilu.solve)
            self._solve = lambda b, x0: self._cg(b, x0, P)
        else:
            raise ValueError("Invalid linear solver '%s'!" % mode)
        tlog.debug("Linear step operator s=%g (%s), n=%d, nnz=%d."
                   % (self.s, mode, self.lhs.shape[0], self.lhs.nnz))

    def _cg(self, b, x0, P):
        count = [0]

        def callback(xk):
            count[0] += 1
        kwargs = {_CG_RTOL: 0.1 * self.tol, 'atol': 0.0}
        x, info = spla.cg(self.lhs, b, x0=x0, M=P, callback=callback,
                          maxiter=10 * b.size, **kwargs)
        self.n_iterations += count[0]
        if info != 0:
            res = np.linalg.norm(self.lhs @ x - b)
            raise StepFailure("Conjugate gradient stopped with info %d, "
                              "residual %.3e!" % (info, res), residual=res)
        return x

    def __call__(self, U):
        '''Return U' of one substep.'''
        b = self.rhs @ U
        x = self._solve(b, U)
        self.n_solves += 1
        bnorm = np.linalg.norm(b)
        res = np.linalg.norm(self.lhs @ x - b)
        if not res <= self.tol * max(bnorm, 1e-300):
            raise StepFailure("Diffusion solve residual %.3e exceeds %.1e "
                              "relative!" % (res / max(bnorm, 1e-300),
                                             self.tol),
                              residual=float(res))
        return x
