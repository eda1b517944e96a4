# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Polynomial kernel: scaled monomials, 1D rules and polygon quadrature.
'''

from .quadrature import (gauss_lobatto, gauss_legendre, EdgeRule,
                         lagrange_matrix, triangle_rule, PolygonRule,
                         polygon_quadrature, fan_triangulation, ear_clipping)
from .monomials import (monomial_count, monomial_exponents,
                        ScaledMonomialBasis, monomial_mass)

__all__ = [
    'gauss_lobatto', 'gauss_legendre', 'EdgeRule', 'lagrange_matrix',
    'triangle_rule', 'PolygonRule', 'polygon_quadrature',
    'fan_triangulation', 'ear_clipping',
    'monomial_count', 'monomial_exponents', 'ScaledMonomialBasis',
    'monomial_mass',
]
