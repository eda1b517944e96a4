# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Quadrilateral mesh generators on the unit square.
'''

import numpy as np

from .polymesh import PolygonalMesh
from ..glogger import getGLogger

__all__ = ['generate_structured_quads', 'generate_distorted_quads']
mlog = getGLogger('M')


def _grid(n):
    if int(n) != n or n < 1:
        raise ValueError("Number of cells per side must be >= 1, got %r!" % n)
    n = int(n)
    x = np.arange(n + 1) / n
    xx, yy = np.meshgrid(x, x, indexing='xy')
    vertices = np.column_stack((xx.ravel(), yy.ravel()))
    cells = []
    for j in range(n):
        for i in range(n):
            v0 = j * (n + 1) + i
            cells.append((v0, v0 + 1, v0 + n + 2, v0 + n + 1))
    return n, vertices, cells


def generate_structured_quads(n):
    '''Uniform n x n squares, (n+1)^2 vertices.'''
    n, vertices, cells = _grid(n)
    return PolygonalMesh(vertices, cells, name='structured-%d' % n)


def generate_distorted_quads(n, amplitude=0.2, seed=42):
    '''
    n x n quadrilaterals with interior vertices moved by
    uniform random offsets in [-amplitude/n, amplitude/n] per coordinate,
    drawn from ``numpy.random.default_rng(seed)`` in vertex order.

    Parameters
    ----------
    n: int >= 1
    amplitude: float in [0, 0.5)
    seed: int
    '''
    if not 0 <= amplitude < 0.5:
        raise ValueError("Distortion amplitude must be in [0, 0.5), "
                         "got %r!" % amplitude)
    n, vertices, cells = _grid(n)
    if amplitude > 0 and n > 1:
        rng = np.random.default_rng(seed)
        onbnd = ((vertices == 0.0) | (vertices == 1.0)).any(axis=1)
        interior = np.flatnonzero(~onbnd)
        shift = rng.uniform(-1.0, 1.0, size=(interior.size, 2))
        vertices[interior] += amplitude / n * shift
    mlog.debug("Distorted quads: n=%d, amplitude=%g, seed=%r."
               % (n, amplitude, seed))
    return PolygonalMesh(vertices, cells,
                         name='distorted-%d-a%g-s%s' % (n, amplitude, seed))
