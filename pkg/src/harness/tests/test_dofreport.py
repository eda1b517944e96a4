# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import unittest
import numpy as np

from ..dofreport import dof_counts, dof_report, format_dof_report
from ...mesh import (PolygonalMesh, generate_structured_quads,
                     build_voronoi_fixture)

LSHAPE = PolygonalMesh([[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]],
                       [[0, 1, 2, 3, 4, 5]], name='lshape', validate=False)


class TestDofReport(unittest.TestCase):
    '''
    Test functions dof_counts, dof_report
    '''

    def test_counts(self):
        m = generate_structured_quads(5)
        expect = {1: (36, 36), 2: (96, 121), 3: (156, 231), 4: (241, 366),
                  5: (351, 526)}
        for k, (svem, enh) in expect.items():
            s, e, n_def, n_uns = dof_counts(m, k)
            self.assertEqual((s, e), (svem, enh))
            self.assertEqual(n_def, 25 if k >= 4 else 0)
            self.assertEqual(n_uns, 0)
        s, e, _, _ = dof_counts(generate_structured_quads(4), 4)
        self.assertEqual((s, e), (25 + 3 * 40 + 16, 25 + 3 * 40 + 16 * 6))

    def test_report(self):
        meshes = [generate_structured_quads(3), build_voronoi_fixture(4)]
        rows = dof_report(meshes, 1, 6, verify=True)
        self.assertEqual(len(rows), 12)
        for name in (m.name for m in meshes):
            mine = [r for r in rows if r['mesh'] == name]
            self.assertEqual(mine[0]['svem'], mine[0]['enhanced'])
            gap = [r['enhanced'] - r['svem'] for r in mine[1:]]
            self.assertTrue(all(g > 0 for g in gap))
            self.assertTrue(np.all(np.diff(gap) > 0))
            self.assertTrue(all(r['ratio'] < 1 for r in mine[1:]))
        quads = [r for r in rows if r['mesh'] == meshes[0].name]
        self.assertEqual([r['deficient'] for r in quads],
                         [False, False, False, True, True, True])
        text = format_dof_report(rows)
        self.assertEqual(len(text.splitlines()), 13)
        self.assertTrue(text.splitlines()[4].endswith('*'))
        with self.assertRaises(ValueError):
            dof_report(meshes, 3, 2)

    def test_unsupported(self):
        rows = dof_report({'L': LSHAPE}, 5, 6, verify=True)
        self.assertFalse(rows[0]['deficient'])
        self.assertTrue(rows[1]['deficient'])
        self.assertTrue(rows[1]['unsupported'])
        self.assertEqual(rows[1]['svem'], 6 + 5 * 6 + 1)
        self.assertTrue(format_dof_report(rows).endswith('!'))

    def test_degree_six(self):
        # 9 vertices, 5 nodes on each of 12 edges, r_2 and r_4 moments
        s, e, n_def, n_uns = dof_counts(generate_structured_quads(2), 6)
        self.assertEqual((s, e), (69 + 4 * 6, 69 + 4 * 15))
        self.assertEqual((n_def, n_uns), (4, 0))
