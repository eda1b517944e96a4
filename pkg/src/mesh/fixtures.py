# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Voronoi and non-convex mesh fixtures.

Both families are written to mesh files in a cache directory
once and always loaded back through :func:`import_mesh`, so tests and
studies consume exactly what a user-provided file would give.
'''

import os
import numpy as np
from scipy.spatial import Voronoi, cKDTree

from .generators import generate_structured_quads, generate_distorted_quads
from .meshio import import_mesh, export_mesh
from .polymesh import PolygonalMesh
from ..__about__ import get_userbase_dir
from ..glogger import getGLogger

__all__ = ['build_voronoi_fixture', 'build_nonconvex_fixture',
           'voronoi_mesh', 'nonconvex_mesh', 'mesh_family',
           'LADDER', 'MESH_FAMILIES']
mlog = getGLogger('M')
LADDER = (4, 8, 16, 32)
MESH_FAMILIES = ('distorted', 'structured', 'voronoi', 'nonconvex')


def _voronoi_seeds(n, seed):
    '''Jittered staggered lattice of n x n seeds inside (0, 1)^2.'''
    rng = np.random.default_rng(seed)
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing='xy')
    stagger = np.where(j % 2 == 1, 0.25, -0.25)
    jitter = rng.uniform(-0.15, 0.15, size=(2, n, n))
    x = (i + 0.5 + stagger + jitter[0]) / n
    y = (j + 0.5 + jitter[1]) / n
    return np.column_stack((x.ravel(), y.ravel()))


def _merge_close_vertices(vertices, cells, tol):
    '''Merge vertices closer than *tol*, drop repeated cycle entries.'''
    pairs = cKDTree(vertices).query_pairs(r=tol, output_type='ndarray')
    rep = np.arange(vertices.shape[0])
    for a, b in sorted(map(tuple, pairs)):
        ra, rb = rep[a], rep[b]
        while rep[ra] != ra:
            ra = rep[ra]
        while rep[rb] != rb:
            rb = rep[rb]
        if ra != rb:
            rep[max(ra, rb)] = min(ra, rb)
    for i in range(rep.size):
        r = i
        while rep[r] != r:
            r = rep[r]
        rep[i] = r
    merged = []
    for c in cells:
        c = [int(rep[i]) for i in c]
        c = [v for k, v in enumerate(c) if v != c[k - 1]]
        merged.append(c)
    return merged


def build_voronoi_fixture(n, seed=0):
    '''
    Voronoi tessellation of the unit square from n x n seeds.

    The seeds are mirrored across the four sides, so the cells of the
    original seeds are bounded and tile the square without clipping.
    '''
    seeds = _voronoi_seeds(n, seed)
    x, y = seeds[:, 0], seeds[:, 1]
    mirrored = np.vstack((seeds,
                          np.column_stack((-x, y)),
                          np.column_stack((2.0 - x, y)),
                          np.column_stack((x, -y)),
                          np.column_stack((x, 2.0 - y))))
    vor = Voronoi(mirrored)
    regions = [vor.regions[vor.point_region[s]] for s in range(seeds.shape[0])]
    if any(-1 in r or len(r) < 3 for r in regions):
        raise RuntimeError("Unbounded Voronoi cell for mirrored seeds!")
    used = np.unique(np.concatenate(regions))
    renum = {int(v): i for i, v in enumerate(used)}
    vertices = vor.vertices[used].copy()
    for val in (0.0, 1.0):
        vertices[np.abs(vertices - val) < 1e-10] = val
    cells = []
    for s, r in enumerate(regions):
        # Voronoi cells are convex around their seed
        idx = np.array([renum[int(v)] for v in r])
        d = vertices[idx] - seeds[s]
        cells.append(idx[np.argsort(np.arctan2(d[:, 1], d[:, 0]))])
    ccw = _merge_close_vertices(vertices, cells, 1e-12)
    used = np.unique(np.concatenate(ccw))
    renum = {int(v): i for i, v in enumerate(used)}
    cells = [[renum[v] for v in c] for c in ccw]
    return PolygonalMesh(vertices[used], cells,
                         name='voronoi-%d-s%d' % (n, seed))


def build_nonconvex_fixture(n):
    '''
    n x n squares whose interior edge midpoints are shifted by 0.2/n,
    horizontal edges upward and vertical edges rightward.
    Interior cells become non-convex octagons.
    '''
    if int(n) != n or n < 1:
        raise ValueError("Number of cells per side must be >= 1, got %r!" % n)
    n = int(n)
    delta = 0.2 / n
    x = np.arange(n + 1) / n
    xx, yy = np.meshgrid(x, x, indexing='xy')
    corners = np.column_stack((xx.ravel(), yy.ravel()))
    nh = n * (n + 1)
    # horizontal edge midpoints, (i, j) -> i + j*n
    hj, hi = np.divmod(np.arange(nh), n)
    hmid = np.column_stack(((hi + 0.5) / n, hj / n))
    hmid[(hj > 0) & (hj < n), 1] += delta
    # vertical edge midpoints, (i, j) -> i + j*(n+1)
    vj, vi = np.divmod(np.arange(nh), n + 1)
    vmid = np.column_stack((vi / n, (vj + 0.5) / n))
    vmid[(vi > 0) & (vi < n), 0] += delta
    vertices = np.vstack((corners, hmid, vmid))
    c0, h0, v0 = 0, (n + 1) ** 2, (n + 1) ** 2 + nh

    def C(i, j):
        return c0 + j * (n + 1) + i

    def H(i, j):
        return h0 + j * n + i

    def V(i, j):
        return v0 + j * (n + 1) + i
    cells = []
    for j in range(n):
        for i in range(n):
            cells.append((C(i, j), H(i, j), C(i + 1, j), V(i + 1, j),
                          C(i + 1, j + 1), H(i, j + 1), C(i, j + 1), V(i, j)))
    return PolygonalMesh(vertices, cells, name='nonconvex-%d' % n)


def _fixture(fname, builder, cache_dir, comment):
    cache_dir = cache_dir or get_userbase_dir('fixtures')
    path = os.path.join(cache_dir, fname)
    if not os.path.isfile(path):
        mesh = builder()
        mlog.info("Writing mesh fixture %s ..." % path)
        tmp = path + '.part-%d' % os.getpid()
        export_mesh(mesh, tmp, comment=comment)
        os.replace(tmp, path)
    return import_mesh(path)


def voronoi_mesh(n, seed=0, cache_dir=None):
    '''Load (building on first use) the n x n-seed Voronoi fixture.'''
    return _fixture('voronoi-%d-s%d.polymesh' % (n, seed),
                    lambda: build_voronoi_fixture(n, seed=seed), cache_dir,
                    'Voronoi fixture, %d x %d mirrored seeds, seed %d'
                    % (n, n, seed))


def nonconvex_mesh(n, cache_dir=None):
    '''Load (building on first use) the n x n non-convex fixture.'''
    return _fixture('nonconvex-%d.polymesh' % n,
                    lambda: build_nonconvex_fixture(n), cache_dir,
                    'Non-convex fixture, %d x %d shifted-midpoint cells' % (n, n))


def mesh_family(name, level, amplitude=0.2, seed=None, cache_dir=None):
    '''
    Mesh *level* (0, 1, ...) of the refinement ladder of family *name*,
    n = 4 * 2**level cells (or seeds) per side.
    '''
    if name not in MESH_FAMILIES:
        raise ValueError("Invalid mesh family '%s', choose from %s!"
                         % (name, MESH_FAMILIES))
    if level < 0:
        raise ValueError("Mesh level must be >= 0, got %r!" % level)
    n = LADDER[0] * 2 ** int(level)
    if name == 'structured':
        return generate_structured_quads(n)
    elif name == 'distorted':
        return generate_distorted_quads(
            n, amplitude=amplitude, seed=42 if seed is None else seed)
    elif name == 'voronoi':
        return voronoi_mesh(n, seed=0 if seed is None else seed,
                            cache_dir=cache_dir)
    else:
        return nonconvex_mesh(n, cache_dir=cache_dir)
