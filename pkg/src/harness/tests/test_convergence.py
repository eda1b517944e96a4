# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import unittest
from unittest import mock
import numpy as np

from .. import convergence
from ..convergence import (ConvergenceReport, compute_eoc, least_squares_eoc,
                           run_convergence, REPORT_COLUMNS)
from ...errors import StepFailure


class TestEOC(unittest.TestCase):
    '''
    Test functions compute_eoc, least_squares_eoc
    '''

    def test_synthetic(self):
        h = np.array([0.5, 0.25, 0.125, 0.0625])
        for p in (1.0, 2.5, 4.0):
            e = 3.0 * h ** p
            eoc = compute_eoc(e, h)
            self.assertTrue(np.isnan(eoc[0]))
            np.testing.assert_allclose(eoc[1:], p, atol=1e-12)
            self.assertAlmostEqual(least_squares_eoc(e, h), p, delta=1e-12)
        # non-uniform refinement
        h = np.array([0.3, 0.17, 0.09, 0.05])
        np.testing.assert_allclose(compute_eoc(2 * h ** 3, h)[1:], 3.0,
                                   atol=1e-12)

    def test_failed_rows(self):
        h = np.array([0.5, 0.25, 0.125, 0.0625])
        e = h ** 2
        e[1] = np.nan
        eoc = compute_eoc(e, h)
        self.assertTrue(np.all(np.isnan(eoc[:3])))
        self.assertAlmostEqual(eoc[3], 2.0, delta=1e-12)
        self.assertAlmostEqual(least_squares_eoc(e, h), 2.0, delta=1e-12)
        self.assertTrue(np.isnan(least_squares_eoc([np.nan, 1.0], [1, 2])))


class TestConvergenceReport(unittest.TestCase):
    '''
    Test class ConvergenceReport
    '''

    def test_rows(self):
        r = ConvergenceReport('heat', 'structured', 2)
        for i, h in enumerate((0.4, 0.2, 0.1)):
            r.add_row(i, h, 0.01, 10 * 4 ** i, h ** 3, 0.1, 0.2)
        np.testing.assert_allclose(r.eoc[1:], 3.0, atol=1e-12)
        self.assertAlmostEqual(r.least_squares_eoc, 3.0, delta=1e-12)
        arr = r.as_array()
        self.assertEqual(arr.shape, (3, len(REPORT_COLUMNS)))
        np.testing.assert_allclose(arr[:, REPORT_COLUMNS.index('t_total_s')],
                                   0.3)
        self.assertEqual(r.to_dict()['rows'][2]['dofs'], 160)
        self.assertIn('EOC', r.format_table())
        t = ConvergenceReport('heat', 'structured', 2, mode='time')
        for i, tau in enumerate((0.1, 0.05, 0.025)):
            t.add_row(i, 0.1, tau, 10, tau ** 2)
        np.testing.assert_allclose(t.eoc[1:], 2.0, atol=1e-12)
        with self.assertRaises(ValueError):
            ConvergenceReport('heat', 'structured', 2, mode='both')


class TestRunConvergence(unittest.TestCase):
    '''
    Test function run_convergence
    '''

    def test_space(self):
        r = run_convergence('heat', k=1, family='structured', levels=3)
        self.assertEqual(r.mode, 'space')
        self.assertEqual(len(r.rows), 3)
        self.assertEqual([row['dofs'] for row in r.rows], [25, 81, 289])
        self.assertTrue(np.all(np.diff(r.errors) < 0))
        self.assertGreater(r.least_squares_eoc, 1.5)
        self.assertEqual(r.tau_const, 0.5)
        taus = r.sizes
        hs = np.array([row['h'] for row in r.rows])
        np.testing.assert_allclose(hs, np.sqrt(2) / np.array([4, 8, 16]))
        self.assertTrue(np.all(taus <= 0.5 * hs))

    def test_time(self):
        taus = (0.5, 0.25, 0.125)
        r = run_convergence('heat', k=2, family='structured', levels=1,
                            time_mode=True, taus=taus, variant='RDR')
        self.assertEqual(r.mode, 'time')
        np.testing.assert_array_equal(r.sizes, taus)
        self.assertTrue(np.all(np.isfinite(r.errors)))
        self.assertEqual(r.variant, 'RDR')
        with self.assertRaises(ValueError):
            run_convergence('heat', k=1, levels=2)
        with self.assertRaises(ValueError):
            run_convergence('heat', k=1, time_mode=True, taus=(0.5, 0.25))

    def test_space_rates(self):
        for k, family in ((2, 'distorted'), (3, 'voronoi')):
            r = run_convergence('accuracy', k=k, family=family, levels=4)
            self.assertTrue(np.all(np.isfinite(r.errors)))
            self.assertGreaterEqual(r.least_squares_eoc, k + 0.8,
                                    msg='k=%d, %s' % (k, family))

    def test_time_rates(self):
        drd = run_convergence('accuracy', k=2, family='distorted', levels=4,
                              time_mode=True, variant='DRD')
        rdr = run_convergence('accuracy', k=2, family='distorted', levels=4,
                              time_mode=True, variant='RDR')
        self.assertGreaterEqual(drd.least_squares_eoc, 1.8)
        self.assertLessEqual(drd.least_squares_eoc, 2.2)
        # RDR runs slightly superquadratic on this range of tau
        self.assertGreaterEqual(rdr.least_squares_eoc, 1.8)
        self.assertLessEqual(rdr.least_squares_eoc, 2.4)
        self.assertTrue(np.all(rdr.errors <= drd.errors))

    def test_failure_recorded(self):
        real = convergence._solve_once
        calls = []

        def flaky(scenario, workers):
            calls.append(scenario)
            if len(calls) == 2:
                raise StepFailure("diverged", step=3)
            return real(scenario, workers)

        with mock.patch.object(convergence, '_solve_once', flaky):
            r = run_convergence('heat', k=1, family='structured', levels=3)
        self.assertEqual(len(r.rows), 3)
        self.assertTrue(np.isnan(r.rows[1]['l2_error']))
        self.assertTrue(np.isnan(r.eoc[2]))
        self.assertTrue(np.isfinite(r.rows[2]['l2_error']))
