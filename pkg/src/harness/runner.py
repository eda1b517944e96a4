# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Run a scenario described by a JSON config file.

Config keys mirror :class:`Scenario`::

    {
      "scenario": "allen_cahn",
      "k": 2,
      "mesh": {"family": "voronoi", "level": 1},
      "problem": {"eps": 0.01},
      "splitting": {"variant": "RDR", "tau": 0.005, "T": 22.5},
      "eta": {"strategy": "adaptive_stingy", "theta0": 0.1, "rho0": 0.05},
      "output": {"times": [0.1, 5, 10, 22.5], "vtk": true, "csv": true},
      "threads": 1,
      "seed": 42
    }
'''

import os
import time
import numpy as np

from .problems import get_scenario
from .exporters import SnapshotRecorder
from ..mesh import EtaStrategy
from ..timestep import Splitting
from ..errors import SvemError
from .._json import load_json, dump_json
from ..__about__ import __version__
from ..glogger import getGLogger

__all__ = ['config_keys', 'load_config', 'scenario_from_config',
           'run_scenario', 'run_config']
hlog = getGLogger('H')
config_keys = ('scenario', 'k', 'mesh', 'problem', 'splitting', 'eta',
               'output', 'threads', 'seed', 'space', 'tau_const')


def load_config(path):
    '''Read and check a JSON run config.'''
    config = load_json(path)
    unknown = set(config) - set(config_keys)
    if unknown:
        raise ValueError("Unknown config keys %s in %s!"
                         % (sorted(unknown), path))
    if 'scenario' not in config:
        raise ValueError("Config %s needs a 'scenario'!" % path)
    return config


def scenario_from_config(config, seed=None):
    '''
    Build the :class:`Scenario` of a config dict. *seed* fills in
    the mesh seed if the config does not give one.
    '''
    kwargs = {}
    mesh = dict(config.get('mesh', {}))
    if mesh.get('seed') is None:
        seed = config.get('seed', seed)
        if seed is not None:
            mesh['seed'] = int(seed)
    family = mesh.pop('family', None)
    level = mesh.pop('level', None)
    if family is not None:
        kwargs['mesh_family'] = family
    if level is not None:
        kwargs['level'] = int(level)
    kwargs['mesh'] = mesh
    splitting = dict(config.get('splitting', {}))
    if splitting:
        kwargs['splitting'] = splitting
    name = config['scenario']
    if name in ('accuracy', 'heat'):
        if 'tau' in splitting:
            kwargs['tau_const'] = None
        elif 'tau_const' in config:
            kwargs['tau_const'] = config['tau_const']
    problem = config.get('problem', {})
    if 'eps' in problem:
        if name in ('accuracy', 'heat'):
            raise ValueError("Manufactured scenario %s has eps = 1!" % name)
        kwargs['eps'] = float(problem['eps'])
    if 'eta' in config:
        kwargs['eta'] = EtaStrategy.from_dict(config['eta'])
    if 'output' in config:
        kwargs['output'] = config['output']
    if 'space' in config:
        kwargs['space'] = config['space']
    if 'k' in config:
        kwargs['k'] = int(config['k'])
    return get_scenario(name, **kwargs)


def run_scenario(scenario, out=None, workers=1):
    '''
    Solve *scenario*, write snapshots and a summary to *out*.

    Returns
    -------
    summary dict, also written to out/summary.json
    '''
    if out:
        os.makedirs(out, exist_ok=True)
    output = scenario.output
    vtk_dir = None
    if out and output.get('vtk'):
        vtk_dir = os.path.join(out, 'vtk')
        os.makedirs(vtk_dir, exist_ok=True)
    hlog.info("Scenario: %r." % scenario)
    start = time.perf_counter()
    mesh = scenario.build_mesh()
    space = scenario.build_space(mesh, workers=workers)
    t_setup = time.perf_counter() - start
    stepper = Splitting(space, scenario.problem, scenario.splitting)
    recorder = SnapshotRecorder(space, vtk_dir=vtk_dir,
                                prefix=scenario.name)
    U0 = space.interpolate(scenario.problem.u0)
    mass0 = space.total_mass(U0)
    summary = dict(version=__version__, config=scenario.to_dict(),
                   mesh_name=mesh.name, h=mesh.h, n_cells=mesh.n_cells,
                   n_dofs=space.n_dofs, n_steps=scenario.splitting.n_steps,
                   setup_s=t_setup, status='ok')
    try:
        U = stepper.run(U0, observers=[recorder], times=output.get('times'))
    except SvemError as exc:
        summary.update(status='failed', error=str(exc), code=exc.code,
                       step=getattr(exc, 'step', None),
                       timings=stepper.timings())
        if out:
            dump_json(summary, os.path.join(out, 'summary.json'))
        raise
    nn = space.dofmap.n_nodal
    summary.update(t_final=U.t, timings=stepper.timings(),
                   reaction_stats=stepper.reaction.stats,
                   mass_initial=mass0, mass_final=space.total_mass(U),
                   u_min=float(U.values.min()), u_max=float(U.values.max()),
                   nodal_min=float(U.values[:nn].min()),
                   nodal_max=float(U.values[:nn].max()))
    exact = scenario.problem.exact
    if exact is not None:
        errors = [space.l2_error(s, exact, t=t)
                  for s, t in zip(recorder.states, recorder.times)]
        summary['l2_error'] = space.l2_error(U, exact, t=U.t)
        summary['snapshot_errors'] = errors
    if out:
        summary['snapshots'] = recorder.save(
            os.path.join(out, 'snapshots.npz'))
        summary['vtk_files'] = recorder.files
        if output.get('csv'):
            path = os.path.join(out, 'snapshots.csv')
            table = [recorder.times, [a.mean() for a in recorder.averages]]
            header = 't,mean_u'
            if exact is not None:
                table.append(summary['snapshot_errors'])
                header += ',l2_error'
            np.savetxt(path, np.column_stack(table), fmt='%.17g',
                       delimiter=',', header=header, comments='')
            summary['csv'] = path
        dump_json(summary, os.path.join(out, 'summary.json'))
    hlog.info("Run %s finished in %.2fs." % (scenario.name,
                                              time.perf_counter() - start))
    return summary


def run_config(config, out=None, threads=None, seed=None):
    '''
    Run a config dict or JSON file. *threads* and *seed* given on
    the command line override the config values.
    '''
    if isinstance(config, str):
        config = load_config(config)
    if seed is not None:
        mesh = dict(config.get('mesh', {}), seed=int(seed))
        config = dict(config, seed=int(seed), mesh=mesh)
    scenario = scenario_from_config(config)
    workers = threads if threads is not None else config.get('threads', 1)
    return run_scenario(scenario, out=out, workers=int(workers))
