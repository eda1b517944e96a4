# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Quadrature rules: Gauss-Lobatto and Gauss-Legendre on [-1, 1],
collapsed Gauss rules on triangles and polygon rules built on
a sub-triangulation of the cell.
'''

import functools
import numpy as np
from numpy.polynomial import legendre

from ..errors import InvalidCellError
from ..glogger import getGLogger

__all__ = ['gauss_lobatto', 'gauss_legendre', 'EdgeRule', 'lagrange_matrix',
           'triangle_rule', 'PolygonRule', 'polygon_quadrature',
           'fan_triangulation', 'ear_clipping']
qlog = getGLogger('Q')


def _frozen(*arrays):
    for a in arrays:
        a.setflags(write=False)
    return arrays


@functools.lru_cache(maxsize=None)
def gauss_lobatto(p):
    '''
    p-point Gauss-Lobatto rule on [-1, 1], exact for degree <= 2p-3.
    Interior nodes are the roots of P'_{p-1}, found by Newton iteration
    from Chebyshev-Gauss-Lobatto guesses.

    Returns
    -------
    nodes, weights: ascending nodes with nodes[0] = -1, nodes[-1] = 1
    '''
    if int(p) != p or p < 2:
        raise ValueError("Gauss-Lobatto rule needs p >= 2 points, got %r!"
                         % p)
    p = int(p)
    N = p - 1
    x = -np.cos(np.pi * np.arange(p) / N)
    P = np.zeros((p, p))
    for it in range(100):
        P[:, 0] = 1.0
        P[:, 1] = x
        for n in range(2, p):
            P[:, n] = ((2 * n - 1) * x * P[:, n - 1]
                       - (n - 1) * P[:, n - 2]) / n
        xold = x
        x = xold - (x * P[:, N] - P[:, N - 1]) / (p * P[:, N])
        if np.max(np.abs(x - xold)) <= 1e-15:
            break
    x = 0.5 * (x - x[::-1])
    x[0], x[-1] = -1.0, 1.0
    if p % 2 == 1:
        x[N // 2] = 0.0
    PN = legendre.legval(x, np.eye(p)[N])
    w = 2.0 / (N * p * PN ** 2)
    w = 0.5 * (w + w[::-1])
    return _frozen(x, w)


@functools.lru_cache(maxsize=None)
def gauss_legendre(p):
    '''p-point Gauss-Legendre rule on [-1, 1], exact for degree <= 2p-1.'''
    if int(p) != p or p < 1:
        raise ValueError("Gauss-Legendre rule needs p >= 1 points, got %r!"
                         % p)
    x, w = legendre.leggauss(int(p))
    return _frozen(x, w)


class EdgeRule(object):
    '''
    1D rules used on edges for degree k.

    Attributes
    ----------
    k: int
    lobatto_nodes, lobatto_weights: (k+1)-point Gauss-Lobatto
    legendre_nodes, legendre_weights: (k+1)-point Gauss-Legendre
    lagrange: (k+1, k+1) array, Lagrange basis of the Gauss-Lobatto nodes
        evaluated at the Gauss-Legendre nodes, [q, j] = L_j(legendre_q)
    '''
    __slots__ = ['k', 'lobatto_nodes', 'lobatto_weights',
                 'legendre_nodes', 'legendre_weights', 'lagrange']

    def __init__(self, k):
        if k < 1:
            raise ValueError("Edge rule needs k >= 1, got %r!" % k)
        self.k = int(k)
        self.lobatto_nodes, self.lobatto_weights = gauss_lobatto(k + 1)
        self.legendre_nodes, self.legendre_weights = gauss_legendre(k + 1)
        self.lagrange = lagrange_matrix(self.lobatto_nodes,
                                        self.legendre_nodes)


def lagrange_matrix(nodes, points):
    '''[q, j] = L_j(points[q]) for the Lagrange basis of *nodes*.'''
    nodes = np.asarray(nodes, dtype=float)
    points = np.asarray(points, dtype=float)
    out = np.ones((points.size, nodes.size))
    for j in range(nodes.size):
        for m in range(nodes.size):
            if m != j:
                out[:, j] *= (points - nodes[m]) / (nodes[j] - nodes[m])
    return out


@functools.lru_cache(maxsize=None)
def triangle_rule(d):
    '''
    Collapsed Gauss rule on the reference triangle (0,0), (1,0), (0,1),
    exact for degree <= *d*. Weights sum to 1/2.

    Returns
    -------
    xi, eta, weights
    '''
    n = max(1, int(np.ceil((d + 2) / 2.0)))
    t, w = legendre.leggauss(n)
    t, w = 0.5 * (t + 1.0), 0.5 * w
    u, v = np.meshgrid(t, t, indexing='ij')
    wu, wv = np.meshgrid(w, w, indexing='ij')
    xi = u.ravel()
    eta = (v * (1.0 - u)).ravel()
    weights = (wu * wv * (1.0 - u)).ravel()
    return _frozen(xi, eta, weights)


class PolygonRule(object):
    '''
    Quadrature on a cell.

    Attributes
    ----------
    points: (nq, 2) array
    weights: (nq,) array, sum to |E|
    degree: int, exactness degree
    method: str, 'fan' or 'ear'
    '''
    __slots__ = ['points', 'weights', 'degree', 'method']

    def __init__(self, points, weights, degree, method='fan'):
        self.points = points
        self.weights = weights
        self.degree = degree
        self.method = method

    @property
    def size(self):
        return self.weights.size

    def integrate(self, values):
        '''Sum weights * values over the first axis.'''
        return np.tensordot(self.weights, values, axes=(0, 0))


def _tri_area2(a, b, c):
    return ((b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1])
            - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0]))


def fan_triangulation(cell, center=None):
    '''
    Triangles (center, v_i, v_{i+1}), (N, 3, 2).
    Return None if any triangle is not positively oriented.
    '''
    p = np.asarray(cell, dtype=float)
    if center is None:
        q = np.roll(p, -1, axis=0)
        cross = p[:, 0] * q[:, 1] - q[:, 0] * p[:, 1]
        area = 0.5 * cross.sum()
        center = np.array([np.sum((p[:, 0] + q[:, 0]) * cross),
                           np.sum((p[:, 1] + q[:, 1]) * cross)]) / (6 * area)
    c = np.broadcast_to(center, p.shape)
    tris = np.stack((c, p, np.roll(p, -1, axis=0)), axis=1)
    area2 = _tri_area2(tris[:, 0], tris[:, 1], tris[:, 2])
    scale = np.ptp(p, axis=0).max() ** 2
    if np.any(area2 <= 1e-13 * scale):
        return None
    return tris


def ear_clipping(cell):
    '''
    Triangulate a simple counter-clockwise polygon by ear clipping,
    (N-2, 3, 2). Degenerate ears at straight angles are clipped last.

    Raises
    ------
    InvalidCellError: no ear found
    '''
    p = np.asarray(cell, dtype=float)
    scale = np.ptp(p, axis=0).max() ** 2
    idx = list(range(p.shape[0]))
    tris = []

    def is_ear(i, strict):
        n = len(idx)
        a, b, c = p[idx[i - 1]], p[idx[i]], p[idx[(i + 1) % n]]
        a2 = _tri_area2(a, b, c)
        if strict and a2 <= 1e-14 * scale:
            return False
        if not strict and a2 < -1e-14 * scale:
            return False
        for j in idx:
            if j in (idx[i - 1], idx[i], idx[(i + 1) % n]):
                continue
            q = p[j]
            tol = 1e-14 * scale
            if (_tri_area2(a, b, q) > tol and _tri_area2(b, c, q) > tol
                    and _tri_area2(c, a, q) > tol):
                return False
        return True
    while len(idx) > 3:
        for strict in (True, False):
            ear = next((i for i in range(len(idx)) if is_ear(i, strict)),
                       None)
            if ear is not None:
                break
        if ear is None:
            raise InvalidCellError("Ear clipping found no ear, "
                                   "cell is not a simple polygon!")
        n = len(idx)
        tris.append((p[idx[ear - 1]], p[idx[ear]], p[idx[(ear + 1) % n]]))
        del idx[ear]
    tris.append((p[idx[0]], p[idx[1]], p[idx[2]]))
    return np.array(tris)


def polygon_quadrature(cell, d, center=None):
    '''
    Rule on *cell* exact for polynomials of degree <= *d*, built from the
    centroid fan or, for cells not star-shaped w.r.t. the centroid,
    an ear-clipping triangulation.

    Raises
    ------
    InvalidCellError: if neither triangulation exists
    '''
    if d < 0:
        raise ValueError("Exactness degree must be >= 0, got %r!" % d)
    tris = fan_triangulation(cell, center)
    method = 'fan'
    if tris is None:
        qlog.debug("Centroid fan failed, using ear clipping.")
        tris = ear_clipping(cell)
        method = 'ear'
    xi, eta, w = triangle_rule(int(d))
    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    pts = (a[:, None, :] + xi[None, :, None] * (b - a)[:, None, :]
           + eta[None, :, None] * (c - a)[:, None, :])
    area2 = _tri_area2(a, b, c)
    weights = area2[:, None] * w[None, :]
    return PolygonRule(pts.reshape(-1, 2), weights.ravel(), int(d), method)
