# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import unittest
import numpy as np
from scipy.optimize import brentq, fsolve

from ..config import ProblemSpec
from ..reaction import (reaction_scalar_solve, ReactionSolver,
                        coupled_baseline_reaction)
from ...assembly import VemSpace
from ...mesh import generate_structured_quads, generate_distorted_quads
from ...errors import StepFailure


def cubic(u):
    return u * u * u - u


def dcubic(u):
    return 3 * u * u - 1


def smooth(p):
    return 0.8 * np.cos(np.pi * p[:, 0]) * np.sin(2 * p[:, 1])


class TestScalarSolve(unittest.TestCase):
    '''
    Test function reaction_scalar_solve
    '''

    def test_zero(self):
        u1 = np.array([0.3, -2.0, 5.0])
        u2, it = reaction_scalar_solve(u1, 0.1, np.zeros_like, np.zeros_like)
        np.testing.assert_array_equal(u2, u1)
        np.testing.assert_array_equal(it, 0)
        u2, it = reaction_scalar_solve(u1, 0.1, np.zeros_like, np.zeros_like,
                                       source=0.5)
        np.testing.assert_allclose(u2, u1 + 0.5, atol=1e-12)

    def test_linear(self):
        lam, s = 3.0, 0.1
        u1 = np.array([0.3, -2.0, 5.0])
        u2, it = reaction_scalar_solve(u1, s, lambda u: lam * u,
                                       lambda u: lam + 0 * u)
        np.testing.assert_allclose(
            u2, u1 * (1 - s * lam / 2) / (1 + s * lam / 2), rtol=1e-13)
        np.testing.assert_array_equal(it, 1)

    def test_cubic_oracle(self):
        u1, s = 0.5, 0.005

        def g(u):
            return u - u1 + 0.5 * s * (cubic(u1) + cubic(u))
        ref = brentq(g, 0.0, 1.0, xtol=1e-15)
        u2, it = reaction_scalar_solve(np.array([u1]), s, cubic, dcubic)
        self.assertAlmostEqual(u2[0], ref, places=12)
        self.assertLessEqual(it[0], 3)

    def test_sine_sweep(self):
        u1 = np.linspace(-10, 10, 10001)
        for tau in (0.25, 1.0, 1.5, 1.8, 1.9, 1.99):
            u2, it = reaction_scalar_solve(u1, tau, np.sin, np.cos)
            self.assertLessEqual(it.max(), 10, msg='tau=%g' % tau)
            r = u2 - u1 + 0.5 * tau * (np.sin(u1) + np.sin(u2))
            self.assertTrue(np.all(np.abs(r) <= 1e-10 * (1 + np.abs(u1))))

    def test_flat_start(self):
        # 1 + tau/2 cos(u1) is about 5e-3 near pi
        tau = 1.99
        u1 = np.pi + np.array([1e-3, 0.05, 0.1, 0.3, -0.1])
        u2, it = reaction_scalar_solve(u1, tau, np.sin, np.cos)
        self.assertLessEqual(it.max(), 10)
        for a, b in zip(u1, u2):
            ref = brentq(lambda u: u - a + 0.5 * tau * (np.sin(a)
                                                        + np.sin(u)),
                         a - tau, a + tau, xtol=1e-14)
            self.assertAlmostEqual(b, ref, delta=1e-6)

    def test_failure(self):
        with self.assertRaises(StepFailure) as cm:
            reaction_scalar_solve(np.array([-1.0]), 2.0, np.square,
                                  lambda u: 2 * u, dofs=[7])
        self.assertEqual(cm.exception.dof, 7)
        self.assertIn('[step-failure]', str(cm.exception))


class TestReactionSolver(unittest.TestCase):
    '''
    Test class ReactionSolver
    '''

    @classmethod
    def setUpClass(cls):
        cls.deficient = VemSpace(generate_structured_quads(2), 4)
        cls.ideal = VemSpace(generate_distorted_quads(3, 0.2, seed=2), 2)

    def test_identity(self):
        s = 0.2
        problem = ProblemSpec('identity', f=lambda u: u,
                              df=np.ones_like, lipschitz=1.0)
        for space in (self.deficient, self.ideal):
            U = space.interpolate(smooth).values
            U2 = ReactionSolver(space, problem)(U, s)
            np.testing.assert_allclose(U2, U * (1 - s / 2) / (1 + s / 2),
                                       atol=1e-12)

    def test_two_stage(self):
        space, s = self.deficient, 0.05
        problem = ProblemSpec('cubic', f=cubic, df=dcubic, lipschitz=2.0)
        solver = ReactionSolver(space, problem)
        U1 = space.interpolate(smooth).values
        U2 = solver(U1, s)
        res = (U2 - U1 + 0.5 * s * (space.nonlinear_dof_vector(U1, cubic)
                                    + space.nonlinear_dof_vector(U2, cubic)))
        np.testing.assert_allclose(res, 0.0, atol=1e-9)
        self.assertGreater(solver.stats['local_newton'], 0)
        # dense Newton oracle with finite-difference Jacobian per cell
        for c in range(space.mesh.n_cells):
            dofs = space.dofmap.cell_moments(c)

            def g(x):
                U = U2.copy()
                U[dofs] = x
                F = space.nonlinear_dof_vector(U, cubic)
                F1 = space.nonlinear_dof_vector(U1, cubic)
                return (x - U1[dofs] + 0.5 * s * (F1[dofs] + F[dofs]))
            ref = fsolve(g, U1[dofs], xtol=1e-13)
            np.testing.assert_allclose(U2[dofs], ref, atol=1e-8)

    def test_locality(self):
        space = self.ideal
        self.assertEqual(space.dofmap.total, space.dofmap.n_nodal)
        problem = ProblemSpec('cubic', f=cubic, df=dcubic)
        solver = ReactionSolver(space, problem)
        U = space.interpolate(smooth).values
        V = U.copy()
        V[5] += 0.1
        diff = solver(V, 0.1) != solver(U, 0.1)
        np.testing.assert_array_equal(np.flatnonzero(diff), [5])

    def test_baselines(self):
        problem = ProblemSpec('identity', f=lambda u: u,
                              df=np.ones_like, lipschitz=1.0)
        zero = ProblemSpec('heat')
        s = 0.1
        enhanced = VemSpace(generate_structured_quads(2), 2,
                            space='enhanced')
        U = enhanced.interpolate(lambda p: 0.7).values
        out = ReactionSolver(enhanced, zero, mode='coupled')(U, s)
        np.testing.assert_array_equal(out, U)
        out = coupled_baseline_reaction(enhanced, zero, U, s)
        np.testing.assert_array_equal(out, U)
        Ui = self.ideal.interpolate(lambda p: 0.7).values
        interp = ReactionSolver(self.ideal, problem)(Ui, s)
        out = coupled_baseline_reaction(enhanced, problem, U, s)
        np.testing.assert_allclose(enhanced.cell_averages(out).mean(),
                                   self.ideal.cell_averages(interp).mean(),
                                   atol=1e-9)
        factor = (1 - s / 2) / (1 + s / 2)
        for mode in ('coupled', 'unstabilized'):
            solver = ReactionSolver(enhanced, problem, mode=mode)
            out = solver(U, s)
            np.testing.assert_allclose(enhanced.cell_averages(out),
                                       0.7 * factor, atol=1e-9)
            self.assertGreater(solver.stats['semilinear'], 1)
        solver = ReactionSolver(self.ideal, problem, mode='unstabilized')
        U = self.ideal.interpolate(smooth).values
        out = solver(U, s)
        Mc, M = self.ideal.Mc, self.ideal.M
        res = M @ (out - U) + 0.5 * s * (Mc @ (U + out))
        np.testing.assert_allclose(res, 0.0, atol=1e-9)

    def test_source(self):
        space = self.ideal
        problem = ProblemSpec('source', f=np.zeros_like, df=np.zeros_like,
                              source=lambda p, t: t + 0 * p[:, 0])
        U = space.interpolate(smooth).values
        out = ReactionSolver(space, problem)(U, 0.2, t=1.0)
        # int_1^1.2 t dt by the trapezoidal rule
        np.testing.assert_allclose(out - U, 0.22, atol=1e-12)
