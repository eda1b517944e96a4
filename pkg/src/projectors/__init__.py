# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Local serendipity DoFs, projectors and element matrices.
'''

from .layout import LocalDofLayout, SPACES, moment_count
from .linalg import COND_MAX, pivoted_solve, pivoted_lstsq
from .element import (LocalElement, ElementOperators,
                      dof_vector, boundary_projector, serendipity_projector,
                      lift, ritz_projector, l2_projector, local_matrices)
from .builder import build_operators

__all__ = [
    'LocalDofLayout', 'SPACES', 'moment_count',
    'COND_MAX', 'pivoted_solve', 'pivoted_lstsq',
    'LocalElement', 'ElementOperators',
    'dof_vector', 'boundary_projector', 'serendipity_projector',
    'lift', 'ritz_projector', 'l2_projector', 'local_matrices',
    'build_operators',
]
