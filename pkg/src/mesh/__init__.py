# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Polygonal meshes: generation, file I/O, geometry and eta_E.
'''

from .geometry import (EtaStrategy, CellGeometry, signed_area,
                       compute_geometry, compute_eta, is_simple_polygon)
from .polymesh import PolygonalMesh
from .generators import generate_structured_quads, generate_distorted_quads
from .meshio import import_mesh, export_mesh
from .fixtures import (build_voronoi_fixture, build_nonconvex_fixture,
                       voronoi_mesh, nonconvex_mesh, mesh_family,
                       LADDER, MESH_FAMILIES)

__all__ = [
    'EtaStrategy', 'CellGeometry', 'signed_area', 'compute_geometry',
    'compute_eta', 'is_simple_polygon', 'PolygonalMesh',
    'generate_structured_quads', 'generate_distorted_quads',
    'import_mesh', 'export_mesh',
    'build_voronoi_fixture', 'build_nonconvex_fixture',
    'voronoi_mesh', 'nonconvex_mesh', 'mesh_family',
    'LADDER', 'MESH_FAMILIES',
]
