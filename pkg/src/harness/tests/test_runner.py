# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import os
import json
import shutil
import unittest
import tempfile
from unittest import mock
import numpy as np

from .. import runner
from ..runner import load_config, scenario_from_config, run_config
from ..benchmark import benchmark, run_mode, format_benchmark
from ..problems import scenario_sine
from ..exporters import load_snapshots
from ...errors import StepFailure

CONFIG = {
    'scenario': 'sine',
    'k': 2,
    'mesh': {'family': 'distorted', 'n': 3, 'amplitude': 0.1},
    'problem': {'eps': 0.5},
    'splitting': {'variant': 'RDR', 'tau': 0.05, 'T': 0.2},
    'eta': {'strategy': 'stingy'},
    'output': {'times': [0.1, 0.2], 'vtk': True, 'csv': True},
    'threads': 1,
    'seed': 7,
}


class TestRunner(unittest.TestCase):
    '''
    Test functions load_config, scenario_from_config, run_config
    '''

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp(prefix='svem-test-')

    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def write(self, obj, name='run.json'):
        path = os.path.join(self.tmpdir, name)
        with open(path, 'w') as f:
            json.dump(obj, f)
        return path

    def test_load(self):
        config = load_config(self.write(CONFIG))
        self.assertEqual(config, CONFIG)
        with self.assertRaises(ValueError):
            load_config(self.write(dict(CONFIG, colour='red')))
        with self.assertRaises(ValueError):
            load_config(self.write({'k': 2}))
        with self.assertRaises(ValueError):
            load_config(self.write([1, 2]))

    def test_scenario(self):
        sc = scenario_from_config(CONFIG)
        self.assertEqual(sc.k, 2)
        self.assertEqual(sc.problem.eps, 0.5)
        self.assertEqual(sc.mesh['seed'], 7)
        self.assertEqual(sc.eta.variant, 'stingy')
        self.assertEqual(sc.splitting.n_steps, 4)
        self.assertEqual(sc.build_mesh().n_cells, 9)
        sc = scenario_from_config({'scenario': 'accuracy', 'k': 1,
                                   'mesh': {'family': 'structured'},
                                   'splitting': {'tau': 0.25}})
        self.assertEqual(sc.splitting.tau, 0.25)
        self.assertIsNone(sc.tau_const)
        with self.assertRaises(ValueError):
            scenario_from_config({'scenario': 'heat', 'k': 1,
                                  'problem': {'eps': 0.1}})

    def test_run(self):
        out = os.path.join(self.tmpdir, 'out')
        summary = run_config(self.write(CONFIG), out=out)
        self.assertEqual(summary['status'], 'ok')
        self.assertAlmostEqual(summary['t_final'], 0.2)
        with open(os.path.join(out, 'summary.json')) as f:
            saved = json.load(f)
        self.assertEqual(saved['n_dofs'], summary['n_dofs'])
        self.assertEqual(saved['config']['splitting']['variant'], 'RDR')
        snaps = load_snapshots(os.path.join(out, 'snapshots.npz'))
        np.testing.assert_allclose(snaps['times'], [0.1, 0.2])
        self.assertEqual(len(os.listdir(os.path.join(out, 'vtk'))), 2)
        table = np.loadtxt(os.path.join(out, 'snapshots.csv'),
                           delimiter=',', skiprows=1)
        self.assertEqual(table.shape, (2, 2))
        self.assertGreater(summary['timings']['nonlinear'], 0.0)

    def test_overrides(self):
        seen = {}

        def fake(scenario, out=None, workers=1):
            seen.update(seed=scenario.mesh['seed'], workers=workers)
            return {}
        config = dict(CONFIG, threads=3,
                      mesh=dict(CONFIG['mesh'], seed=5))
        with mock.patch.object(runner, 'run_scenario', fake):
            run_config(config)
            self.assertEqual(seen, {'seed': 5, 'workers': 3})
            run_config(config, threads=1, seed=9)
            self.assertEqual(seen, {'seed': 9, 'workers': 1})

    def test_run_manufactured(self):
        config = {'scenario': 'heat', 'k': 2,
                  'mesh': {'family': 'structured', 'n': 4},
                  'splitting': {'tau': 0.01, 'T': 0.02}}
        summary = run_config(config)
        self.assertIn('l2_error', summary)
        self.assertLess(summary['l2_error'], 0.05)
        self.assertEqual(len(summary['snapshot_errors']), 3)

    def test_failure(self):
        config = {'scenario': 'sine', 'k': 1,
                  'mesh': {'family': 'structured', 'n': 2},
                  'splitting': {'tau': 0.5, 'T': 0.5,
                                'newton_maxiter': 0}}
        out = os.path.join(self.tmpdir, 'failed')
        with self.assertRaises(StepFailure):
            run_config(config, out=out)
        with open(os.path.join(out, 'summary.json')) as f:
            saved = json.load(f)
        self.assertEqual(saved['status'], 'failed')
        self.assertEqual(saved['code'], 'step-failure')
        self.assertEqual(saved['step'], 1)


class TestBenchmark(unittest.TestCase):
    '''
    Test functions run_mode, benchmark
    '''

    def test_modes(self):
        sc = scenario_sine(k=2, mesh=dict(n=3), splitting=dict(tau=0.1))
        result = benchmark(sc, modes=('interp', 'coupled', 'unstabilized'),
                           repeats=2, n_steps=2)
        runs = {r['mode']: r for r in result['runs']}
        self.assertEqual(runs['interp']['dofs'], 16 + 24)
        self.assertEqual(runs['coupled']['dofs'], 16 + 24 + 9)
        self.assertEqual(runs['interp']['steps'], 2)
        self.assertEqual(len(result['comparisons']), 2)
        for c in result['comparisons']:
            self.assertEqual(c['reference'], 'interp')
            self.assertTrue(np.isfinite(c['l2_difference']))
            self.assertGreater(c['nonlinear_ratio'], 0.0)
        self.assertIn('nonlinear ratio', format_benchmark(result))
        with self.assertRaises(ValueError):
            run_mode(sc, 'quadrature')


class TestAllenCahn(unittest.TestCase):
    '''
    Test the Allen-Cahn run of the default config up to T = 22.5
    '''

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp(prefix='svem-test-')

    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def test_endpoint(self):
        summary = run_config({'scenario': 'allen_cahn'}, out=self.tmpdir)
        self.assertAlmostEqual(summary['t_final'], 22.5)
        snaps = load_snapshots(os.path.join(self.tmpdir, 'snapshots.npz'))
        np.testing.assert_allclose(snaps['times'], [0.1, 5.0, 10.0, 22.5])
        # last +1 region vanishes shortly before T, about 0.12 remains
        dist = max(abs(summary['nodal_max'] + 1.0),
                   abs(summary['nodal_min'] + 1.0))
        self.assertLess(dist, 0.15)
        self.assertLess(summary['nodal_max'], 0.0)
