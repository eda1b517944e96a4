# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains PolygonalMesh class.
'''

import numpy as np

from .geometry import (EtaStrategy, compute_geometry, compute_eta,
                       signed_area, is_simple_polygon)
from ..errors import (InvalidCellError, OrientationError,
                      NonSimpleCellError, MeshTopologyError)
from ..glogger import getGLogger

__all__ = ['PolygonalMesh']
mlog = getGLogger('M')


def _readonly(arr):
    arr.setflags(write=False)
    return arr


class PolygonalMesh(object):
    '''
    Immutable polygonal partition of a rectangular domain.

    Attributes
    ----------
    vertices: (nv, 2) float array, read-only
    cells: tuple of int arrays, counter-clockwise vertex-index cycles
    edges: (ne, 2) int array, unique (low, high) vertex pairs,
        sorted lexicographically
    edge_cells: (ne, 2) int array, incident cells, -1 for none
    cell_edges: tuple of int arrays, edge index of local edge i,
        which joins local vertices i and i+1
    cell_edge_forward: tuple of bool arrays, local edge i runs
        from low to high vertex index
    bbox: (xmin, ymin, xmax, ymax)
    geometry: tuple of :class:`CellGeometry` (eta with default strategy)
    name: str
    '''
    __slots__ = ['_vertices', '_cells', '_edges', '_edge_cells',
                 '_cell_edges', '_cell_edge_forward', '_bbox',
                 '_geometry', '_eta_cache', 'name']
    regularity_warn = 0.05

    def __init__(self, vertices, cells, name='mesh', validate=True):
        vertices = np.array(vertices, dtype=float)
        if vertices.ndim != 2 or vertices.shape[1] != 2:
            raise InvalidCellError("Vertices must be a (nv, 2) array!")
        self._vertices = _readonly(vertices)
        self._cells = tuple(_readonly(np.array(c, dtype=np.int64))
                            for c in cells)
        self.name = name
        self._eta_cache = {}
        self._check_cells()
        self._build_edges()
        self._bbox = (float(vertices[:, 0].min()), float(vertices[:, 1].min()),
                      float(vertices[:, 0].max()), float(vertices[:, 1].max()))
        self._geometry = tuple(compute_geometry(vertices[c])
                               for c in self._cells)
        if validate:
            self.validate()
        mlog.debug("Mesh %s: %d vertices, %d edges, %d cells."
                   % (self.name, self.n_vertices, self.n_edges, self.n_cells))

    def _check_cells(self):
        nv = self._vertices.shape[0]
        for i, c in enumerate(self._cells):
            if c.size < 3:
                raise InvalidCellError("Cell %d has %d vertices, need >= 3!"
                                       % (i, c.size))
            if c.min() < 0 or c.max() >= nv:
                raise InvalidCellError("Cell %d has vertex index out of "
                                       "range [0, %d)!" % (i, nv))
            if np.unique(c).size != c.size:
                raise InvalidCellError("Cell %d repeats a vertex!" % i)
            pts = self._vertices[c]
            area = signed_area(pts)
            scale = np.ptp(pts, axis=0).max() ** 2
            if area < -1e-14 * scale:
                raise OrientationError("Cell %d is clockwise (signed area "
                                       "%.3e)!" % (i, area))
            if not area > 1e-14 * scale:
                raise InvalidCellError("Cell %d has zero area!" % i)

    def _build_edges(self):
        local = []
        for i, c in enumerate(self._cells):
            a, b = c, np.roll(c, -1)
            local.append(np.column_stack((np.minimum(a, b), np.maximum(a, b),
                                          np.full(c.size, i), a < b)))
        local = np.vstack(local)
        edges, inverse = np.unique(local[:, :2], axis=0, return_inverse=True)
        inverse = inverse.ravel()
        edge_cells = np.full((edges.shape[0], 2), -1, dtype=np.int64)
        count = np.zeros(edges.shape[0], dtype=np.int64)
        for e, cell in zip(inverse, local[:, 2]):
            if count[e] >= 2:
                raise MeshTopologyError("Edge (%d, %d) has more than two "
                                        "incident cells!" % tuple(edges[e]))
            edge_cells[e, count[e]] = cell
            count[e] += 1
        self._edges = _readonly(edges)
        self._edge_cells = _readonly(edge_cells)
        cell_edges, forward = [], []
        start = 0
        for c in self._cells:
            cell_edges.append(_readonly(inverse[start:start + c.size].copy()))
            forward.append(_readonly(local[start:start + c.size, 3] == 1))
            start += c.size
        self._cell_edges = tuple(cell_edges)
        self._cell_edge_forward = tuple(forward)

    @property
    def vertices(self):
        return self._vertices

    @property
    def cells(self):
        return self._cells

    @property
    def edges(self):
        return self._edges

    @property
    def edge_cells(self):
        return self._edge_cells

    @property
    def cell_edges(self):
        return self._cell_edges

    @property
    def cell_edge_forward(self):
        return self._cell_edge_forward

    @property
    def bbox(self):
        return self._bbox

    @property
    def geometry(self):
        return self._geometry

    @property
    def n_vertices(self):
        return self._vertices.shape[0]

    @property
    def n_cells(self):
        return len(self._cells)

    @property
    def n_edges(self):
        return self._edges.shape[0]

    @property
    def boundary_edges(self):
        return np.flatnonzero(self._edge_cells[:, 1] < 0)

    @property
    def h(self):
        '''Mesh size, max cell diameter.'''
        return max(g.diameter for g in self._geometry)

    @property
    def domain_area(self):
        x0, y0, x1, y1 = self._bbox
        return (x1 - x0) * (y1 - y0)

    def cell_points(self, i):
        return self._vertices[self._cells[i]]

    def cell_geometry(self, i, strategy=None):
        '''Geometry of cell *i*, eta_E counted with *strategy*.'''
        if strategy is None:
            return self._geometry[i]
        return compute_geometry(self.cell_points(i), strategy)

    def eta(self, strategy=None):
        '''Return int array of eta_E for all cells.'''
        strategy = strategy or EtaStrategy()
        key = strategy.key
        if key not in self._eta_cache:
            etas = np.array([
                compute_eta(self._vertices[c], strategy, diameter=g.diameter)
                for c, g in zip(self._cells, self._geometry)], dtype=np.int64)
            self._eta_cache[key] = _readonly(etas)
        return self._eta_cache[key]

    def validate(self, check_simple=True):
        '''
        Check invariants: simple cells, edge incidences and tiling.

        Raises
        ------
        NonSimpleCellError, MeshTopologyError
        '''
        if check_simple:
            for i, c in enumerate(self._cells):
                if not is_simple_polygon(self._vertices[c]):
                    raise NonSimpleCellError(
                        "Cell %d boundary intersects itself!" % i)
        for e in np.flatnonzero(self._edge_cells[:, 1] >= 0):
            c0, c1 = self._edge_cells[e]
            f0 = self._cell_edge_forward[c0][self._cell_edges[c0] == e]
            f1 = self._cell_edge_forward[c1][self._cell_edges[c1] == e]
            if f0[0] == f1[0]:
                raise MeshTopologyError(
                    "Cells %d and %d traverse edge (%d, %d) in the same "
                    "direction!" % (c0, c1, *self._edges[e]))
        total = sum(g.area for g in self._geometry)
        domain = self.domain_area
        if abs(total - domain) > 1e-12 * domain:
            raise MeshTopologyError(
                "Cells do not tile the domain: sum of areas %.16g, "
                "domain area %.16g!" % (total, domain))
        reg = np.array([g.regularity for g in self._geometry])
        small = np.flatnonzero(reg < self.regularity_warn)
        if small.size:
            mlog.warning("Mesh %s: %d cells have edges shorter than %g h_E "
                         "(min ratio %.3e in cell %d)."
                         % (self.name, small.size, self.regularity_warn,
                            reg.min(), reg.argmin()))
        return True

    def quality_report(self, strategy=None):
        '''Summary of cell quality, for logs and reports.'''
        eta = self.eta(strategy)
        reg = np.array([g.regularity for g in self._geometry])
        return dict(
            name=self.name, n_vertices=self.n_vertices,
            n_edges=self.n_edges, n_cells=self.n_cells, h=self.h,
            min_regularity=float(reg.min()),
            n_nonconvex=int(sum(not g.convex for g in self._geometry)),
            eta_min=int(eta.min()), eta_max=int(eta.max()),
        )

    def __repr__(self):
        return ('PolygonalMesh(%r, nv=%d, ne=%d, nc=%d, h=%.4g)'
                % (self.name, self.n_vertices, self.n_edges,
                   self.n_cells, self.h))
