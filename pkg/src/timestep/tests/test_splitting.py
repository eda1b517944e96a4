# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import unittest
import numpy as np

from ..config import SplittingConfig, ProblemSpec
from ..linear import LinearStepOperator
from ..splitting import Splitting
from ...assembly import VemSpace, StateVector
from ...mesh import generate_structured_quads, generate_distorted_quads


def mode10(p):
    return np.cos(np.pi * p[:, 0])


class TestSplittingConfig(unittest.TestCase):
    '''
    Test class SplittingConfig
    '''

    def test_options(self):
        c = SplittingConfig(variant='rdr', tau=0.1, T=1.0)
        self.assertEqual(c.variant, 'RDR')
        self.assertEqual(c.n_steps, 10)
        self.assertEqual(SplittingConfig.from_dict(c.to_dict()).to_dict(),
                         c.to_dict())
        with self.assertRaises(ValueError):
            SplittingConfig(tau=0.3, T=1.0).n_steps
        with self.assertRaises(ValueError):
            SplittingConfig(variant='DD')
        with self.assertRaises(ValueError):
            SplittingConfig(tau=-1.0)
        with self.assertRaises(ValueError):
            SplittingConfig(dt=0.1)


class TestLinearStep(unittest.TestCase):
    '''
    Test class LinearStepOperator
    '''

    @classmethod
    def setUpClass(cls):
        cls.space = VemSpace(generate_distorted_quads(4, 0.2, seed=4), 2)

    def test_invariants(self):
        V = self.space
        c = V.constant_vector()
        U = V.interpolate(lambda p: np.exp(p[:, 0] * p[:, 1])).values
        for mode in ('direct', 'iterative'):
            op = LinearStepOperator(V.M, V.A, 0.05, mode=mode)
            np.testing.assert_allclose(op(c), c, atol=1e-9)
            U1 = op(U)
            self.assertAlmostEqual(V.total_mass(U1) / V.total_mass(U), 1.0,
                                   delta=1e-10)
        a = LinearStepOperator(V.M, V.A, 0.05)(U)
        b = LinearStepOperator(V.M, V.A, 0.05, mode='iterative')(U)
        np.testing.assert_allclose(a, b, atol=1e-8)
        with self.assertRaises(ValueError):
            LinearStepOperator(V.M, V.A, 0.05, mode='cholmod')

    def test_mode_decay(self):
        V = VemSpace(generate_structured_quads(8), 2, eps=0.1)
        s = 0.1
        lam = 0.1 * np.pi ** 2
        U = V.interpolate(mode10).values
        U1 = LinearStepOperator(V.M, V.A, s)(U)
        ratio = V.l2_norm(U1) / V.l2_norm(U)
        self.assertAlmostEqual(ratio / np.exp(-s * lam), 1.0, delta=0.02)
        cn = (1 - s * lam / 2) / (1 + s * lam / 2)
        self.assertAlmostEqual(ratio, cn, delta=1e-3)


class TestSplitting(unittest.TestCase):
    '''
    Test class Splitting
    '''

    @classmethod
    def setUpClass(cls):
        cls.space = VemSpace(generate_structured_quads(3), 2)

    def test_pure_diffusion(self):
        heat = ProblemSpec('heat', eps=0.5)
        tau = 0.1
        drd = Splitting(self.space, heat, SplittingConfig(tau=tau, T=tau))
        self.assertEqual(self.space.eps, 0.5)
        U = self.space.interpolate(mode10).values
        ref = drd.diffusion_substep(drd.diffusion_substep(U, tau / 2),
                                    tau / 2)
        np.testing.assert_array_equal(drd.step(U), ref)
        rdr = Splitting(self.space, heat,
                        SplittingConfig(variant='RDR', tau=tau, T=tau))
        np.testing.assert_array_equal(rdr.step(U),
                                      rdr.diffusion_substep(U, tau))
        self.assertEqual(drd.timers['nonlinear'], 0.0)

    def test_conservation(self):
        heat = ProblemSpec('heat', eps=1.0)
        st = Splitting(self.space, heat,
                       SplittingConfig(tau=0.01, T=2.0, variant='RDR'))
        U0 = self.space.interpolate(lambda p: np.exp(p[:, 0]) + p[:, 1])
        m0 = self.space.total_mass(U0)
        U = st.run(U0)
        self.assertAlmostEqual(U.t, 2.0)
        self.assertAlmostEqual(self.space.total_mass(U) / m0, 1.0,
                               delta=1e-9)
        # tends to the mean value
        np.testing.assert_allclose(U.values[:self.space.dofmap.n_nodal],
                                   m0, atol=1e-6)

    def test_run(self):
        cubic = ProblemSpec('cubic', f=lambda u: u ** 3 - u,
                            df=lambda u: 3 * u ** 2 - 1, lipschitz=2.0,
                            eps=0.01)
        st = Splitting(self.space, cubic, SplittingConfig(tau=0.05, T=0.05))
        seen = []
        U0 = StateVector(np.zeros(self.space.n_dofs))
        U = st.run(U0, observers=[lambda s, i: seen.append((i, s.t))])
        self.assertEqual(seen, [(0, 0.0), (1, 0.05)])
        np.testing.assert_array_equal(U.values, 0.0)
        st = Splitting(self.space, cubic,
                       SplittingConfig(tau=0.05, T=0.5, variant='RDR'))
        seen = []
        U0 = self.space.interpolate(lambda p: 0.9 + 0 * p[:, 0])
        U = st.run(U0, observers=[lambda s, i: seen.append(i)],
                   times=[0.25, 0.5])
        self.assertEqual(seen, [5, 10])
        # decays toward the stable state 1
        self.assertTrue(np.all(U.values > 0.9))
        self.assertGreater(st.timings()['nonlinear'], 0.0)
        self.assertAlmostEqual(st.timings()['total'],
                               st.timers['linear'] + st.timers['nonlinear'])

    def test_lipschitz_warning(self):
        problem = ProblemSpec('sine', f=np.sin, df=np.cos, lipschitz=1.0)
        with self.assertLogs('T', level='WARNING'):
            Splitting(self.space, problem, SplittingConfig(tau=2.5, T=5.0))
