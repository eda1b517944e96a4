# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Scenarios: a problem, a mesh, a degree and the time stepping setup.

* accuracy: f(u) = 1/(1+u^2) with the manufactured solution
  u = exp(-t) cos(pi x) cos(pi y) and a compensating source
* heat: f = 0, same manufactured solution
* allen_cahn: f(u) = u^3 - u, eps = 0.01, u0 = cos(2 pi x^2) cos(2 pi y^2)
* sine: f(u) = sin(u), L_f = 1
'''

import copy
import numpy as np

from ..mesh import EtaStrategy, mesh_family, import_mesh, \
    generate_structured_quads, generate_distorted_quads
from ..timestep import SplittingConfig, ProblemSpec
from ..assembly import VemSpace
from ..glogger import getGLogger

__all__ = ['Scenario', 'SCENARIOS', 'get_scenario',
           'scenario_accuracy', 'scenario_heat', 'scenario_allen_cahn',
           'scenario_sine', 'coupled_time_step', 'default_mesh']
hlog = getGLogger('H')
default_mesh = dict(family='distorted', level=0, amplitude=0.2, seed=None)
TAU_CONST = 0.5


def manufactured(x, y, t):
    return np.exp(-t) * np.cos(np.pi * x) * np.cos(np.pi * y)


def _exact(p, t):
    return manufactured(p[:, 0], p[:, 1], t)


def _f_accuracy(u):
    return 1.0 / (1.0 + u * u)


def _df_accuracy(u):
    return -2.0 * u / (1.0 + u * u) ** 2


def _g_accuracy(p, t):
    u = _exact(p, t)
    return (2 * np.pi ** 2 - 1) * u + _f_accuracy(u)


def _g_heat(p, t):
    return (2 * np.pi ** 2 - 1) * _exact(p, t)


def _f_cubic(u):
    return u * u * u - u


def _df_cubic(u):
    return 3 * u * u - 1


def _u0_allen_cahn(p):
    return np.cos(2 * np.pi * p[:, 0] ** 2) * np.cos(2 * np.pi * p[:, 1] ** 2)


def _u0_sine(p):
    return 4.0 * np.cos(np.pi * p[:, 0]) * np.cos(2 * np.pi * p[:, 1])


def coupled_time_step(h, k, T=1.0, c=TAU_CONST):
    '''
    tau = c h^((k+1)/2), shrunk so that T is a multiple of tau.
    '''
    tau = c * h ** (0.5 * (k + 1))
    n = max(1, int(np.ceil(T / tau - 1e-9)))
    return T / n


class Scenario(object):
    '''
    Everything needed for one run.

    Attributes
    ----------
    name: str
    problem: :class:`ProblemSpec`
    k: int
    mesh: dict, family, level, amplitude, seed, or n with family, or file
    splitting: :class:`SplittingConfig`
    eta: :class:`EtaStrategy`
    space: str, 'serendipity' or 'enhanced'
    output: dict, times, vtk, csv
    tau_const: float or None, c of tau = c h^((k+1)/2)
    '''
    __slots__ = ['name', 'problem', 'k', 'mesh', 'splitting', 'eta',
                 'space', 'output', 'tau_const']

    def __init__(self, name, problem, k, mesh=None, splitting=None,
                 eta=None, space='serendipity', output=None, tau_const=None):
        if not 1 <= int(k) <= 6:
            raise ValueError("Degree k must be in 1..6, got %r!" % k)
        self.name = name
        self.problem = problem
        self.k = int(k)
        self.mesh = dict(default_mesh, **(mesh or {}))
        self.splitting = splitting or SplittingConfig()
        self.eta = eta or EtaStrategy()
        self.space = space
        self.output = dict(times=None, vtk=False, csv=False)
        self.output.update(output or {})
        self.tau_const = tau_const

    def build_mesh(self):
        m = self.mesh
        if m.get('file'):
            return import_mesh(m['file'])
        if m.get('n'):
            n = int(m['n'])
            if m['family'] == 'structured':
                return generate_structured_quads(n)
            elif m['family'] == 'distorted':
                seed = 42 if m.get('seed') is None else m['seed']
                return generate_distorted_quads(n, m['amplitude'], seed=seed)
            raise ValueError("Option n is only for structured and "
                             "distorted meshes, use level for %s!"
                             % m['family'])
        return mesh_family(m['family'], int(m['level']),
                           amplitude=m['amplitude'], seed=m.get('seed'))

    def build_space(self, mesh=None, workers=1, space=None):
        if mesh is None:
            mesh = self.build_mesh()
        return VemSpace(mesh, self.k, strategy=self.eta,
                        space=space or self.space, eps=self.problem.eps,
                        workers=workers)

    def with_mesh_size(self, h):
        '''Copy with tau = c h^((k+1)/2) if :attr:`tau_const` is set.'''
        sc = copy.copy(self)
        if self.tau_const:
            opts = self.splitting.to_dict()
            opts['tau'] = coupled_time_step(h, self.k, opts['T'],
                                            self.tau_const)
            sc.splitting = SplittingConfig(**opts)
        return sc

    def replace(self, **kwargs):
        '''Copy with attributes or splitting options changed.'''
        sc = copy.copy(self)
        opts = self.splitting.to_dict()
        for key, val in kwargs.items():
            if key in opts:
                opts[key] = val
            elif key == 'mesh':
                sc.mesh = dict(self.mesh, **val)
            elif key in self.__slots__:
                setattr(sc, key, val)
            else:
                raise ValueError("Unknown scenario option '%s'!" % key)
        sc.splitting = SplittingConfig(**opts)
        return sc

    def to_dict(self):
        return dict(scenario=self.name, k=self.k, mesh=self.mesh,
                    splitting=self.splitting.to_dict(),
                    eta=self.eta.to_dict(), space=self.space,
                    problem=dict(eps=self.problem.eps,
                                 lipschitz=self.problem.lipschitz),
                    output=self.output, tau_const=self.tau_const)

    def __repr__(self):
        return 'Scenario(%r, k=%d, mesh=%s, %r)' % (
            self.name, self.k, self.mesh, self.splitting)


def scenario_accuracy(k, mesh_family='distorted', level=0, **kwargs):
    '''
    f(u) = 1/(1+u^2), L_f = 3 sqrt(3)/8, manufactured solution on
    [0,1]^2 with source (2 pi^2 - 1) u + f(u), T = 1 and
    tau = 0.5 h^((k+1)/2) on the chosen mesh.
    '''
    problem = ProblemSpec('accuracy', f=_f_accuracy, df=_df_accuracy,
                          lipschitz=3 * np.sqrt(3) / 8, eps=1.0,
                          source=_g_accuracy, exact=_exact)
    return _manufactured(problem, k, mesh_family, level, kwargs)


def scenario_heat(k, mesh_family='distorted', level=0, **kwargs):
    '''f = 0 with the manufactured solution of the accuracy scenario.'''
    problem = ProblemSpec('heat', eps=1.0, source=_g_heat, exact=_exact)
    return _manufactured(problem, k, mesh_family, level, kwargs)


def _manufactured(problem, k, family, level, kwargs):
    tau_const = kwargs.pop('tau_const', TAU_CONST)
    mesh = dict(family=family, level=level, **kwargs.pop('mesh', {}))
    opts = dict(variant='DRD', T=1.0, tau=0.1)
    opts.update(kwargs.pop('splitting', {}))
    sc = Scenario(problem.name, problem, k, mesh=mesh,
                  splitting=SplittingConfig(**opts), tau_const=tau_const,
                  **kwargs)
    if tau_const:
        sc = sc.with_mesh_size(sc.build_mesh().h)
    return sc


def scenario_allen_cahn(k=2, mesh_family='voronoi', level=1, **kwargs):
    '''
    f(u) = u^3 - u, eps = 0.01, RDR with tau = 5e-3 up to T = 22.5,
    snapshots at t = 0.1, 5, 10, 22.5. L_f = 2.63 bounds |f'| on
    [-1.1, 1.1].
    '''
    problem = ProblemSpec('allen_cahn', f=_f_cubic, df=_df_cubic,
                          lipschitz=2.63, eps=kwargs.pop('eps', 0.01),
                          u0=_u0_allen_cahn)
    opts = dict(variant='RDR', tau=5e-3, T=22.5)
    opts.update(kwargs.pop('splitting', {}))
    output = dict(times=[0.1, 5.0, 10.0, 22.5])
    output.update(kwargs.pop('output', {}))
    mesh = dict(family=mesh_family, level=level, **kwargs.pop('mesh', {}))
    return Scenario('allen_cahn', problem, k, mesh=mesh,
                    splitting=SplittingConfig(**opts), output=output,
                    **kwargs)


def scenario_sine(k=2, mesh_family='distorted', level=0, **kwargs):
    '''f(u) = sin(u), L_f = 1, large initial data.'''
    problem = ProblemSpec('sine', f=np.sin, df=np.cos, lipschitz=1.0,
                          eps=kwargs.pop('eps', 1.0), u0=_u0_sine)
    opts = dict(variant='DRD', tau=0.1, T=1.0)
    opts.update(kwargs.pop('splitting', {}))
    mesh = dict(family=mesh_family, level=level, **kwargs.pop('mesh', {}))
    return Scenario('sine', problem, k, mesh=mesh,
                    splitting=SplittingConfig(**opts), **kwargs)


SCENARIOS = {
    'accuracy': scenario_accuracy,
    'heat': scenario_heat,
    'allen_cahn': scenario_allen_cahn,
    'sine': scenario_sine,
}


def get_scenario(name, **kwargs):
    '''Build scenario *name* of :data:`SCENARIOS` with options.'''
    if name not in SCENARIOS:
        raise ValueError("Invalid scenario '%s', choose from %s!"
                         % (name, sorted(SCENARIOS)))
    sc = SCENARIOS[name](**kwargs)
    hlog.debug("Scenario %r." % sc)
    return sc
