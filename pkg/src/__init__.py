# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

from .__about__ import VERSION, __version__
from .__about__ import __description__, __url__, __status__
from .__about__ import __author__, __email__, __license__, __copyright__

__doc__ = __description__
__all__ = [
    'PolygonalMesh', 'EtaStrategy', 'import_mesh', 'mesh_family',
    'VemSpace', 'StateVector',
    'SplittingConfig', 'ProblemSpec', 'Splitting',
    'get_scenario', 'run_convergence', 'dof_report', 'benchmark',
]

from .mesh import PolygonalMesh, EtaStrategy, import_mesh, mesh_family
from .assembly import VemSpace, StateVector
from .timestep import SplittingConfig, ProblemSpec, Splitting
from .harness import get_scenario, run_convergence, dof_report, benchmark
