# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import unittest
import numpy as np
from numpy.polynomial import legendre

from ..quadrature import (gauss_lobatto, gauss_legendre, EdgeRule,
                          triangle_rule, polygon_quadrature, ear_clipping)
from ...mesh import generate_distorted_quads, build_voronoi_fixture
from ...mesh import build_nonconvex_fixture

SQUARE = np.array([(0, 0), (1, 0), (1, 1), (0, 1)], dtype=float)
USHAPE = np.array([(0, 0), (3, 0), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3),
                   (0, 3)], dtype=float)


def green_moment(cell, a, b):
    '''int_E x^a y^b by the divergence theorem and exact edge rules.'''
    t, w = legendre.leggauss((a + b + 3) // 2 + 1)
    p = np.asarray(cell, dtype=float)
    q = np.roll(p, -1, axis=0)
    total = 0.0
    for p0, p1 in zip(p, q):
        x = p0[0] + 0.5 * (t + 1) * (p1[0] - p0[0])
        y = p0[1] + 0.5 * (t + 1) * (p1[1] - p0[1])
        dy = 0.5 * (p1[1] - p0[1])
        total += np.sum(w * x ** (a + 1) * y ** b / (a + 1) * dy)
    return total


def sample_cells():
    cells = [SQUARE, USHAPE]
    for m in (generate_distorted_quads(3, 0.4, seed=2),
              build_voronoi_fixture(4, seed=1), build_nonconvex_fixture(3)):
        cells.extend(m.cell_points(i) for i in range(0, m.n_cells, 2))
    return cells


class TestLineRules(unittest.TestCase):
    '''
    Test Gauss-Lobatto and Gauss-Legendre rules
    '''

    def test_lobatto_small(self):
        x, w = gauss_lobatto(2)
        np.testing.assert_array_equal(x, [-1, 1])
        np.testing.assert_allclose(w, [1, 1], rtol=1e-15)
        x, w = gauss_lobatto(3)
        np.testing.assert_allclose(x, [-1, 0, 1], atol=1e-16)
        np.testing.assert_allclose(w, [1 / 3, 4 / 3, 1 / 3], rtol=1e-14)
        x, w = gauss_lobatto(4)
        np.testing.assert_allclose(x[1:3], [-1 / np.sqrt(5), 1 / np.sqrt(5)],
                                   rtol=1e-14)
        with self.assertRaises(ValueError):
            gauss_lobatto(1)

    def test_lobatto_roots(self):
        for p in range(3, 12):
            x, w = gauss_lobatto(p)
            self.assertEqual(x[0], -1.0)
            self.assertEqual(x[-1], 1.0)
            self.assertTrue(np.all(np.diff(x) > 0))
            np.testing.assert_allclose(x, -x[::-1], atol=1e-15)
            self.assertAlmostEqual(w.sum(), 2.0, places=14)
            dP = legendre.legder(np.eye(p)[p - 1])
            scale = np.abs(legendre.legval(1.0, dP))
            for xi in x[1:-1]:
                # bisection bracket around each interior node
                lo, hi = xi - 1e-9, xi + 1e-9
                self.assertLess(legendre.legval(lo, dP)
                                * legendre.legval(hi, dP), 0)
                self.assertLess(abs(legendre.legval(xi, dP)), 1e-13 * scale)

    def test_lobatto_exactness(self):
        for p in range(2, 10):
            x, w = gauss_lobatto(p)
            for deg in range(2 * p - 2):
                exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
                self.assertAlmostEqual(np.sum(w * x ** deg), exact, places=13)

    def test_legendre_exactness(self):
        for p in range(1, 9):
            x, w = gauss_legendre(p)
            self.assertAlmostEqual(w.sum(), 2.0, places=14)
            for deg in range(2 * p):
                exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
                self.assertAlmostEqual(np.sum(w * x ** deg), exact, places=13)

    def test_edge_rule(self):
        r = EdgeRule(3)
        np.testing.assert_allclose(r.lagrange.sum(axis=1), 1.0, rtol=1e-14)
        # Lagrange interpolation is exact for cubics
        f = lambda t: 2 * t ** 3 - t + 0.5
        np.testing.assert_allclose(r.lagrange @ f(r.lobatto_nodes),
                                   f(r.legendre_nodes), atol=1e-14)


class TestPolygonQuadrature(unittest.TestCase):
    '''
    Test triangle_rule, polygon_quadrature and ear_clipping
    '''

    def test_triangle_rule(self):
        for d in range(0, 15):
            xi, eta, w = triangle_rule(d)
            self.assertAlmostEqual(w.sum(), 0.5, places=15)
            tri = np.array([(0, 0), (1, 0), (0, 1)], dtype=float)
            for a in range(d + 1):
                for b in range(d + 1 - a):
                    self.assertAlmostEqual(np.sum(w * xi ** a * eta ** b),
                                           green_moment(tri, a, b), places=14)

    def test_unit_square(self):
        r = polygon_quadrature(SQUARE, 2)
        x, y = r.points[:, 0], r.points[:, 1]
        self.assertAlmostEqual(r.integrate(x * y), 0.25, places=15)
        r0 = polygon_quadrature(SQUARE, 0)
        self.assertAlmostEqual(r0.integrate(np.ones(r0.size)), 1.0,
                               places=15)
        self.assertEqual(r.method, 'fan')

    def test_hexagon(self):
        t = np.pi / 3 * np.arange(6)
        hexagon = np.column_stack((np.cos(t), np.sin(t)))
        r = polygon_quadrature(hexagon, 4)
        # closed form second moment of the regular hexagon, radius 1
        self.assertAlmostEqual(r.integrate(r.points[:, 0] ** 2),
                               5 * np.sqrt(3) / 16, places=14)
        self.assertAlmostEqual(r.integrate(r.points[:, 0] ** 2),
                               green_moment(hexagon, 2, 0), places=14)

    def test_ushape(self):
        r = polygon_quadrature(USHAPE, 6)
        self.assertEqual(r.method, 'ear')
        self.assertAlmostEqual(r.weights.sum(), 7.0, places=13)
        tris = ear_clipping(USHAPE)
        self.assertEqual(tris.shape, (6, 3, 2))
        u, v = tris[:, 1] - tris[:, 0], tris[:, 2] - tris[:, 0]
        area2 = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
        self.assertTrue(np.all(area2 > 0))
        self.assertAlmostEqual(0.5 * area2.sum(), 7.0, places=13)

    def test_exactness(self):
        for cell in sample_cells():
            for d in (2, 6, 10):
                r = polygon_quadrature(cell, d)
                area = green_moment(cell, 0, 0)
                self.assertLess(abs(r.weights.sum() - area), 1e-13 * area)
                c = cell.mean(axis=0)
                s = (r.points - c)
                for a in range(d + 1):
                    for b in range(d + 1 - a):
                        got = r.integrate(s[:, 0] ** a * s[:, 1] ** b)
                        ref = green_moment(cell - c, a, b)
                        scale = r.integrate(np.abs(s[:, 0] ** a
                                                   * s[:, 1] ** b))
                        self.assertLess(abs(got - ref), 1e-11 * scale)
