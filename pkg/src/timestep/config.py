# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains SplittingConfig and ProblemSpec classes.
'''

import numpy as np

__all__ = ['SplittingConfig', 'ProblemSpec', 'default_splitting']

default_splitting = dict(
    variant='DRD',
    tau=0.01,
    T=1.0,
    newton_tol=1e-10,
    newton_maxiter=50,
    linear_solver='direct',
    linear_tol=1e-10,
    reaction='interpolatory',
    baseline_maxiter=100,
)


class SplittingConfig(object):
    '''
    Parameters of the Strang splitting.

    Attributes
    ----------
    variant: str, 'DRD' or 'RDR'
    tau: float, time step
    T: float, final time, a multiple of *tau*
    newton_tol, newton_maxiter: scalar and local Newton stopping
    linear_solver: str, 'direct' (cached sparse LU) or 'iterative'
        (ILU preconditioned conjugate gradient)
    linear_tol: float, relative residual of the linear solves
    reaction: str, 'interpolatory', 'coupled' or 'unstabilized'
    baseline_maxiter: int, iteration cap of the coupled and
        unstabilized reaction solves
    '''
    __slots__ = list(default_splitting)
    variants = ('DRD', 'RDR')
    linear_solvers = ('direct', 'iterative')
    reactions = ('interpolatory', 'coupled', 'unstabilized')

    def __init__(self, **kwargs):
        for key in kwargs:
            if key not in default_splitting:
                raise ValueError("Unknown splitting option '%s'!" % key)
        opts = dict(default_splitting, **kwargs)
        for key, val in opts.items():
            setattr(self, key, val)
        self.variant = str(self.variant).upper()
        self.tau, self.T = float(self.tau), float(self.T)
        if self.variant not in self.variants:
            raise ValueError("Invalid variant '%s', choose from %s!"
                             % (self.variant, self.variants))
        if self.linear_solver not in self.linear_solvers:
            raise ValueError("Invalid linear solver '%s', choose from %s!"
                             % (self.linear_solver, self.linear_solvers))
        if self.reaction not in self.reactions:
            raise ValueError("Invalid reaction solver '%s', choose from %s!"
                             % (self.reaction, self.reactions))
        if not self.tau > 0:
            raise ValueError("Time step must be > 0, got %r!" % self.tau)
        if not self.T > 0:
            raise ValueError("Final time must be > 0, got %r!" % self.T)

    @property
    def n_steps(self):
        '''
        Number of steps n with T = n * tau.

        Raises
        ------
        ValueError: if T is not a multiple of tau up to 1e-12
        '''
        n = int(round(self.T / self.tau))
        if n < 1 or abs(n * self.tau - self.T) > 1e-12 * max(1.0, self.T):
            raise ValueError("Final time %r is not a multiple of tau %r!"
                             % (self.T, self.tau))
        return n

    def to_dict(self):
        return {key: getattr(self, key) for key in self.__slots__}

    @classmethod
    def from_dict(cls, d):
        return cls(**dict(d or {}))

    def __repr__(self):
        return ('SplittingConfig(%s, tau=%g, T=%g, %s, %s)'
                % (self.variant, self.tau, self.T, self.linear_solver,
                   self.reaction))


class ProblemSpec(object):
    '''
    Semilinear problem u_t - eps lap(u) + f(u) = g with
    homogeneous Neumann data.

    Attributes
    ----------
    name: str
    f, df: callables of arrays, nonlinearity and its derivative
    lipschitz: float or None, Lipschitz constant L_f of f
    eps: float, diffusion coefficient
    source: callable g(points, t) or None
    u0: callable u0(points)
    exact: callable u(points, t) or None
    '''
    __slots__ = ['name', 'f', 'df', 'lipschitz', 'eps', 'source', 'u0',
                 'exact']

    def __init__(self, name, f=None, df=None, lipschitz=None, eps=1.0,
                 source=None, u0=None, exact=None):
        self.name = name
        if f is None:
            f, df, lipschitz = np.zeros_like, np.zeros_like, 0.0
        elif df is None:
            raise ValueError("Problem %s needs the derivative of f!" % name)
        self.f = f
        self.df = df
        self.lipschitz = lipschitz
        self.eps = float(eps)
        self.source = source
        if u0 is None and exact is not None:
            def u0(points):
                return exact(points, 0.0)
        self.u0 = u0
        self.exact = exact

    @property
    def pure_diffusion(self):
        '''f == 0 and g == 0.'''
        return self.f is np.zeros_like and self.source is None

    def __repr__(self):
        return 'ProblemSpec(%r, eps=%g, L_f=%s)' % (
            self.name, self.eps, self.lipschitz)
