# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Global DoF numbering, sparse assembly and evaluation of discrete functions.
'''

from .dofmap import DofMap, build_dof_map
from .state import StateVector
from .batch import CellBatch, make_batches
from .space import VemSpace, assemble, l2_difference

__all__ = [
    'DofMap', 'build_dof_map', 'StateVector', 'CellBatch', 'make_batches',
    'VemSpace', 'assemble', 'l2_difference',
]
