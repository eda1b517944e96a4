# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Geometric quantities of a single polygonal cell and its eta_E,
the number of distinct straight lines containing its edges.
'''

import numpy as np
from scipy.spatial.distance import pdist

from ..errors import InvalidCellError, NonSimpleCellError
from ..glogger import getGLogger

__all__ = ['EtaStrategy', 'CellGeometry',
           'signed_area', 'compute_geometry', 'compute_eta',
           'is_simple_polygon']
mlog = getGLogger('M')


class EtaStrategy(object):
    '''
    How to count eta_E.

    Attributes
    ----------
    variant: str
        'lazy', always 3;
        'stingy', edges whose lines are closer than *theta0* are merged;
        'adaptive_stingy', edges shorter than *rho0* * h_E are dropped
        before counting as stingy.
    theta0: float, angle threshold in radians, > 0
    rho0: float, edge-ratio threshold, in (0, 1)
    '''
    __slots__ = ['variant', 'theta0', 'rho0']
    variants = ('lazy', 'stingy', 'adaptive_stingy')

    def __init__(self, variant='adaptive_stingy', theta0=0.1, rho0=0.05):
        if variant not in self.variants:
            raise ValueError("Invalid eta strategy '%s', choose from %s!"
                             % (variant, self.variants))
        if not theta0 > 0:
            raise ValueError("theta0 must be > 0, got %r!" % theta0)
        if not 0 < rho0 < 1:
            raise ValueError("rho0 must be in (0, 1), got %r!" % rho0)
        self.variant = variant
        self.theta0 = float(theta0)
        self.rho0 = float(rho0)

    @property
    def key(self):
        return (self.variant, self.theta0, self.rho0)

    def __eq__(self, other):
        return isinstance(other, EtaStrategy) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return ('EtaStrategy(%r, theta0=%r, rho0=%r)'
                % (self.variant, self.theta0, self.rho0))

    def to_dict(self):
        return dict(strategy=self.variant, theta0=self.theta0, rho0=self.rho0)

    @classmethod
    def from_dict(cls, d):
        d = dict(d or {})
        return cls(variant=d.get('strategy', d.get('variant', 'adaptive_stingy')),
                   theta0=d.get('theta0', 0.1), rho0=d.get('rho0', 0.05))


class CellGeometry(object):
    '''
    Geometry of one cell.

    Attributes
    ----------
    area: float, |E|
    centroid: (2,) array, x_E
    diameter: float, h_E, max pairwise vertex distance
    edge_lengths: (N,) array, edge i joins vertex i and i+1
    eta: int, eta_E for the strategy used
    convex: bool
    regularity: float, min_e |e| / h_E
    '''
    __slots__ = ['area', 'centroid', 'diameter', 'edge_lengths',
                 'eta', 'convex', 'regularity']

    def __init__(self, area, centroid, diameter, edge_lengths,
                 eta, convex, regularity):
        self.area = area
        self.centroid = centroid
        self.diameter = diameter
        self.edge_lengths = edge_lengths
        self.eta = eta
        self.convex = convex
        self.regularity = regularity

    @property
    def n_edges(self):
        return self.edge_lengths.size

    def __repr__(self):
        return ('CellGeometry(area=%.6g, centroid=(%.6g, %.6g), h=%.6g, '
                'N=%d, eta=%d, convex=%s)'
                % (self.area, self.centroid[0], self.centroid[1],
                   self.diameter, self.n_edges, self.eta, self.convex))


def _as_points(cell):
    points = np.asarray(cell, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2:
        raise InvalidCellError("Cell must be a (N, 2) array of vertices, "
                               "got shape %s!" % (points.shape,))
    if points.shape[0] < 3:
        raise InvalidCellError("Cell needs at least 3 vertices, got %d!"
                               % points.shape[0])
    return points


def signed_area(cell):
    '''Shoelace signed area, > 0 for counter-clockwise cells.'''
    p = np.asarray(cell, dtype=float)
    q = np.roll(p, -1, axis=0)
    return 0.5 * np.sum(p[:, 0] * q[:, 1] - q[:, 0] * p[:, 1])


def _segments_cross(a, b, c, d):
    '''Closed segments ab and cd intersect.'''
    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    def onseg(p, q, r):
        return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and onseg(a, b, c)) or (o2 == 0 and onseg(a, b, d))
            or (o3 == 0 and onseg(c, d, a)) or (o4 == 0 and onseg(c, d, b)))


def is_simple_polygon(cell):
    '''Check that no two non-adjacent edges of *cell* meet.'''
    p = np.asarray(cell, dtype=float)
    n = p.shape[0]
    if n < 4:
        return True
    for i in range(n):
        a, b = p[i], p[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _segments_cross(a, b, p[j], p[(j + 1) % n]):
                return False
    return True


def compute_eta(cell, strategy=None, diameter=None):
    '''
    Count eta_E of *cell* with *strategy*, result in [3, N].

    Edges are grouped by the straight line containing them: two edges
    share a line when their line directions differ by less than theta0
    and the midpoint of one is closer than theta0 * h_E to the line of
    the other. The counts depend only on angles and ratios to h_E, so
    they are invariant under rigid motions and uniform scaling.
    '''
    strategy = strategy or EtaStrategy()
    p = _as_points(cell)
    n = p.shape[0]
    if strategy.variant == 'lazy':
        return 3
    h = diameter if diameter is not None else float(pdist(p).max())
    edges = np.roll(p, -1, axis=0) - p
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    stingy = _count_lines(p, edges, lengths, np.ones(n, dtype=bool),
                          strategy.theta0, h)
    if strategy.variant == 'stingy':
        return int(min(max(stingy, 3), n))
    keep = lengths >= strategy.rho0 * h
    if keep.any():
        adaptive = _count_lines(p, edges, lengths, keep, strategy.theta0, h)
    else:
        adaptive = 3
    return int(min(max(min(adaptive, stingy), 3), n))


def _count_lines(p, edges, lengths, keep, theta0, h):
    idx = np.flatnonzero(keep & (lengths > 0))
    if idx.size == 0:
        return 0
    angle = np.arctan2(edges[idx, 1], edges[idx, 0]) % np.pi
    unit = edges[idx] / lengths[idx, None]
    normal = np.column_stack((-unit[:, 1], unit[:, 0]))
    mid = p[idx] + 0.5 * edges[idx]
    parent = list(range(idx.size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i
    for i in range(idx.size):
        dang = np.abs(angle[i + 1:] - angle[i])
        dang = np.minimum(dang, np.pi - dang)
        dist = np.abs((mid[i + 1:] - p[idx[i]]) @ normal[i])
        for j in np.flatnonzero((dang < theta0) & (dist < theta0 * h)):
            ri, rj = find(i), find(i + 1 + j)
            if ri != rj:
                parent[rj] = ri
    return len(set(find(i) for i in range(idx.size)))


def compute_geometry(cell, strategy=None, check_simple=False):
    '''
    Area, centroid, diameter, edge lengths, eta_E, convexity and
    regularity ratio of a counter-clockwise *cell* (N, 2).

    Raises
    ------
    InvalidCellError: zero or negative signed area
    NonSimpleCellError: if *check_simple* and edges intersect
    '''
    p = _as_points(cell)
    q = np.roll(p, -1, axis=0)
    cross = p[:, 0] * q[:, 1] - q[:, 0] * p[:, 1]
    area = 0.5 * cross.sum()
    diameter = float(pdist(p).max())
    if not area > 1e-14 * diameter ** 2:
        raise InvalidCellError("Cell has non-positive signed area %.3e!"
                               % area)
    if check_simple and not is_simple_polygon(p):
        raise NonSimpleCellError("Cell boundary intersects itself!")
    centroid = np.array([np.sum((p[:, 0] + q[:, 0]) * cross),
                         np.sum((p[:, 1] + q[:, 1]) * cross)]) / (6.0 * area)
    edges = q - p
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    turn = edges[:, 0] * np.roll(edges, -1, axis=0)[:, 1] \
        - edges[:, 1] * np.roll(edges, -1, axis=0)[:, 0]
    convex = bool(np.all(turn >= -1e-12 * diameter ** 2))
    regularity = float(lengths.min() / diameter)
    eta = compute_eta(p, strategy, diameter=diameter)
    return CellGeometry(float(area), centroid, diameter, lengths,
                        eta, convex, regularity)
