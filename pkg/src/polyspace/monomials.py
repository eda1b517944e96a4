# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Scaled monomial basis m_alpha(x) = ((x - x_E) / h_E)^alpha of P_k(E),
graded lexicographic order: 1, x, y, x^2, xy, y^2, ...
'''

import functools
import numpy as np
import scipy.linalg
from scipy.special import comb

from .quadrature import polygon_quadrature
from ..errors import ConditioningError
from ..mesh.geometry import compute_geometry
from ..glogger import getGLogger

__all__ = ['monomial_count', 'monomial_exponents',
           'ScaledMonomialBasis', 'monomial_mass']
qlog = getGLogger('Q')


def monomial_count(k):
    '''r_k = dim P_k = (k+1)(k+2)/2, 0 for k < 0.'''
    return (k + 1) * (k + 2) // 2 if k >= 0 else 0


@functools.lru_cache(maxsize=None)
def monomial_exponents(k):
    '''(r_k, 2) int array of exponents (a, b), graded-lex order.'''
    ex = [(n - j, j) for n in range(k + 1) for j in range(n + 1)]
    ex = np.array(ex, dtype=np.int64).reshape(-1, 2)
    ex.setflags(write=False)
    return ex


def _index(a, b):
    n = a + b
    return monomial_count(n - 1) + b


class ScaledMonomialBasis(object):
    '''
    Scaled monomials of degree <= k on a cell.

    Attributes
    ----------
    center: (2,) array, x_E
    h: float, h_E
    k: int
    exponents: (r_k, 2) int array
    '''
    __slots__ = ['center', 'h', 'k', 'exponents']

    def __init__(self, center, h, k):
        if k < 0:
            raise ValueError("Polynomial degree must be >= 0, got %r!" % k)
        self.center = np.asarray(center, dtype=float)
        self.h = float(h)
        self.k = int(k)
        self.exponents = monomial_exponents(self.k)

    @property
    def size(self):
        return self.exponents.shape[0]

    def scaled(self, points):
        return (np.asarray(points, dtype=float) - self.center) / self.h

    def _powers(self, points):
        s = self.scaled(points).reshape(-1, 2)
        pw = np.ones((s.shape[0], self.k + 1, 2))
        for p in range(1, self.k + 1):
            pw[:, p] = pw[:, p - 1] * s
        return pw

    def evaluate(self, points):
        '''Values (npts, r_k).'''
        pw = self._powers(points)
        a, b = self.exponents[:, 0], self.exponents[:, 1]
        return pw[:, a, 0] * pw[:, b, 1]

    def gradient(self, points):
        '''Gradients (npts, r_k, 2).'''
        pw = self._powers(points)
        a, b = self.exponents[:, 0], self.exponents[:, 1]
        am, bm = np.maximum(a - 1, 0), np.maximum(b - 1, 0)
        gx = a * pw[:, am, 0] * pw[:, b, 1] / self.h
        gy = b * pw[:, a, 0] * pw[:, bm, 1] / self.h
        return np.stack((gx, gy), axis=-1)

    def laplacian_matrix(self):
        '''
        L (r_k, r_{k-2}) with Laplacian(m_alpha) = sum_gamma L[alpha, gamma]
        m_gamma, both in the basis of this cell.
        '''
        L = np.zeros((self.size, monomial_count(self.k - 2)))
        for i, (a, b) in enumerate(self.exponents):
            if a >= 2:
                L[i, _index(a - 2, b)] += a * (a - 1)
            if b >= 2:
                L[i, _index(a, b - 2)] += b * (b - 1)
        return L / self.h ** 2

    def coefficients_of(self, func_coeffs):
        '''Polynomial given as {(a, b): c} in x, y -> coefficients here.'''
        xc, yc = self.center
        h = self.h
        out = np.zeros(self.size)
        for (a, b), c in func_coeffs.items():
            if a + b > self.k:
                raise ValueError("Degree of x^%d y^%d exceeds %d!" % (a, b, self.k))
            # x^a y^b = (xc + h s)^a (yc + h t)^b
            for i in range(a + 1):
                for j in range(b + 1):
                    out[_index(i, j)] += (c * comb(a, i, exact=True)
                                          * comb(b, j, exact=True)
                                          * xc ** (a - i) * yc ** (b - j)
                                          * h ** (i + j))
        return out


def monomial_mass(cell, k, rule=None, basis=None):
    '''
    H_{ab} = int_E m_a m_b dx, (r_k, r_k), symmetric positive definite.

    Raises
    ------
    ConditioningError: if the Cholesky factorization fails
    '''
    if basis is None:
        geo = compute_geometry(cell)
        basis = ScaledMonomialBasis(geo.centroid, geo.diameter, k)
    if rule is None:
        rule = polygon_quadrature(cell, 2 * k)
    V = basis.evaluate(rule.points)
    H = (V * rule.weights[:, None]).T @ V
    H = 0.5 * (H + H.T)
    try:
        scipy.linalg.cho_factor(H)
    except np.linalg.LinAlgError as exc:
        raise ConditioningError("Monomial mass matrix (k=%d) is not SPD, "
                                "degenerate cell? %s" % (k, exc))
    return H
