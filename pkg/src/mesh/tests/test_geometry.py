# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import unittest
import numpy as np

from ..geometry import (EtaStrategy, compute_geometry, compute_eta,
                        signed_area, is_simple_polygon)
from ...errors import InvalidCellError, NonSimpleCellError

SQUARE = np.array([(0, 0), (1, 0), (1, 1), (0, 1)], dtype=float)
LSHAPE = np.array([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)],
                  dtype=float)


def regular_polygon(n, radius=1.0, phase=0.0):
    t = phase + 2 * np.pi * np.arange(n) / n
    return radius * np.column_stack((np.cos(t), np.sin(t)))


class TestComputeGeometry(unittest.TestCase):
    '''
    Test function compute_geometry
    '''

    def test_unit_square(self):
        g = compute_geometry(SQUARE)
        self.assertAlmostEqual(g.area, 1.0, places=15)
        np.testing.assert_allclose(g.centroid, [0.5, 0.5], atol=1e-15)
        self.assertAlmostEqual(g.diameter, np.sqrt(2), places=15)
        self.assertTrue(g.convex)
        self.assertEqual(g.eta, 4)
        self.assertAlmostEqual(g.regularity, 1 / np.sqrt(2), places=15)

    def test_lshape(self):
        g = compute_geometry(LSHAPE)
        self.assertAlmostEqual(g.area, 3.0, places=14)
        # two rectangles, brute-force centroid
        np.testing.assert_allclose(
            g.centroid, (2 * np.array([1, 0.5]) + np.array([0.5, 1.5])) / 3,
            atol=1e-14)
        self.assertAlmostEqual(g.diameter, 2 * np.sqrt(2), places=14)
        self.assertFalse(g.convex)
        self.assertEqual(g.eta, 6)

    def test_centroid_in_bbox(self):
        rng = np.random.default_rng(3)
        for n in range(3, 9):
            p = regular_polygon(n, phase=rng.uniform(0, 1)) \
                + rng.uniform(-5, 5, 2)
            g = compute_geometry(p)
            self.assertGreater(g.area, 0)
            self.assertTrue(np.all(g.centroid >= p.min(axis=0)))
            self.assertTrue(np.all(g.centroid <= p.max(axis=0)))

    def test_degenerate(self):
        with self.assertRaises(InvalidCellError):
            compute_geometry([(0, 0), (1, 0), (1, 0)])
        with self.assertRaises(InvalidCellError):
            compute_geometry(SQUARE[::-1])
        with self.assertRaises(InvalidCellError):
            compute_geometry([(0, 0), (1, 0)])

    def test_simple(self):
        self.assertTrue(is_simple_polygon(LSHAPE))
        bowtie = np.array([(0, 0), (1, 1), (1, 0), (0, 1)], dtype=float)
        self.assertFalse(is_simple_polygon(bowtie))
        with self.assertRaises((NonSimpleCellError, InvalidCellError)):
            compute_geometry(bowtie, check_simple=True)

    def test_signed_area(self):
        self.assertAlmostEqual(signed_area(SQUARE), 1.0)
        self.assertAlmostEqual(signed_area(SQUARE[::-1]), -1.0)


class TestComputeEta(unittest.TestCase):
    '''
    Test function compute_eta and EtaStrategy
    '''

    def test_strategy_check(self):
        with self.assertRaises(ValueError):
            EtaStrategy('greedy')
        with self.assertRaises(ValueError):
            EtaStrategy(theta0=0)
        with self.assertRaises(ValueError):
            EtaStrategy(rho0=1.0)
        s = EtaStrategy.from_dict({'strategy': 'stingy', 'theta0': 0.2})
        self.assertEqual(s, EtaStrategy('stingy', 0.2, 0.05))

    def test_square(self):
        self.assertEqual(compute_eta(SQUARE, EtaStrategy('stingy', 1e-6)), 4)
        self.assertEqual(compute_eta(SQUARE, EtaStrategy('lazy')), 3)

    def test_split_edge(self):
        p = np.array([(0, 0), (0.5, 0), (1, 0), (1, 1), (0, 1)], dtype=float)
        self.assertEqual(compute_eta(p, EtaStrategy('stingy')), 4)
        self.assertEqual(compute_eta(p, EtaStrategy('adaptive_stingy')), 4)

    def test_convex_polygons(self):
        s = EtaStrategy('stingy', theta0=1e-3)
        for n in range(3, 10):
            self.assertEqual(compute_eta(regular_polygon(n), s), n)
        pentagon = np.array([(0, 0), (2, 0), (2.5, 1.2), (1, 2), (-0.4, 1)])
        self.assertEqual(compute_eta(pentagon), 5)

    def test_nearly_aligned(self):
        # tiny kink in the bottom edge
        p = np.array([(0, 0), (0.5, 0.01), (1, 0), (1, 1), (0, 1)])
        self.assertEqual(compute_eta(p, EtaStrategy('stingy', 1e-3)), 5)
        self.assertEqual(compute_eta(p, EtaStrategy('stingy', 0.1)), 4)

    def test_short_edge(self):
        # hexagon with one very short edge
        p = regular_polygon(5)
        p = np.insert(p, 1, p[0] + 0.01 * (p[1] - p[0]), axis=0)
        stingy = compute_eta(p, EtaStrategy('stingy'))
        adaptive = compute_eta(p, EtaStrategy('adaptive_stingy'))
        self.assertEqual(stingy, 5)
        self.assertLessEqual(adaptive, stingy)

    def test_monotone(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = rng.integers(3, 10)
            t = np.sort(rng.uniform(0, 2 * np.pi, n))
            r = rng.uniform(0.5, 1.0, n)
            p = np.column_stack((r * np.cos(t), r * np.sin(t)))
            if signed_area(p) <= 0 or not is_simple_polygon(p):
                continue
            lazy = compute_eta(p, EtaStrategy('lazy'))
            stingy = compute_eta(p, EtaStrategy('stingy'))
            adaptive = compute_eta(p, EtaStrategy('adaptive_stingy'))
            self.assertEqual(lazy, 3)
            self.assertLessEqual(adaptive, stingy)
            self.assertLessEqual(stingy, n)
            self.assertGreaterEqual(adaptive, 3)

    def test_rigid_motion_and_scaling(self):
        rng = np.random.default_rng(11)
        p = np.array([(0, 0), (1, 0), (1.6, 0.4), (1.3, 1.1), (0.3, 1.2),
                      (-0.2, 0.6)])
        strategies = [EtaStrategy(v) for v in EtaStrategy.variants]
        ref = [compute_eta(p, s) for s in strategies]
        for _ in range(10):
            a = rng.uniform(0, 2 * np.pi)
            rot = np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
            q = rng.uniform(0.01, 100) * p @ rot.T + rng.uniform(-10, 10, 2)
            self.assertEqual([compute_eta(q, s) for s in strategies], ref)
