# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Strang splitting with Crank-Nicolson substeps.
'''

from .config import SplittingConfig, ProblemSpec, default_splitting
from .linear import LinearStepOperator
from .reaction import (reaction_scalar_solve, ReactionSolver,
                       coupled_baseline_reaction)
from .splitting import Splitting

__all__ = [
    'SplittingConfig', 'ProblemSpec', 'default_splitting',
    'LinearStepOperator', 'reaction_scalar_solve', 'ReactionSolver',
    'coupled_baseline_reaction',
    'Splitting',
]
