# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Global DoF counts of the serendipity and the enhanced spaces.

N = N_V + (k-1) N_E + sum_E n_m(E) with n_m(E) = dim P_{k-eta_E}
(zero if k < eta_E) for the serendipity space and dim P_{k-2} for the
enhanced space.
'''

import numpy as np

from ..mesh import EtaStrategy
from ..projectors import moment_count
from ..assembly import build_dof_map
from ..glogger import getGLogger

__all__ = ['dof_counts', 'dof_report', 'format_dof_report']
hlog = getGLogger('H')


def dof_counts(mesh, k, strategy=None):
    '''
    Return (serendipity, enhanced, deficient cells, unsupported cells)
    for degree *k* on *mesh*. Deficient cells have k >= eta_E,
    unsupported ones are also non-convex.
    '''
    eta = mesh.eta(strategy)
    nodal = mesh.n_vertices + (k - 1) * mesh.n_edges
    svem = nodal + sum(moment_count(k, e, 'serendipity') for e in eta)
    enhanced = nodal + mesh.n_cells * moment_count(k, 0, 'enhanced')
    deficient = np.flatnonzero(eta <= k)
    convex = np.array([g.convex for g in mesh.geometry])
    unsupported = deficient[~convex[deficient]]
    return int(svem), int(enhanced), deficient.size, unsupported.size


def dof_report(meshes, k_min=1, k_max=6, strategy=None, verify=False):
    '''
    Table rows comparing serendipity and enhanced DoF counts.

    Parameters
    ----------
    meshes: dict of name -> :class:`PolygonalMesh`, or a list of meshes
    k_min, k_max: degree range, both included
    verify: bool, check each count against a built :class:`DofMap`

    Returns
    -------
    list of dicts with keys mesh, cells, k, svem, enhanced, ratio,
    deficient (bool), unsupported (bool)
    '''
    if not 1 <= k_min <= k_max:
        raise ValueError("Invalid degree range %r..%r!" % (k_min, k_max))
    if not isinstance(meshes, dict):
        meshes = {m.name: m for m in meshes}
    strategy = strategy or EtaStrategy()
    rows = []
    for name, mesh in meshes.items():
        for k in range(k_min, k_max + 1):
            svem, enh, n_def, n_uns = dof_counts(mesh, k, strategy)
            if verify:
                for space, n in (('serendipity', svem), ('enhanced', enh)):
                    if space == 'serendipity' and n_uns:
                        continue
                    total = build_dof_map(mesh, k, strategy, space).total
                    if total != n:
                        raise AssertionError(
                            "%s DoF count %d != DofMap total %d on %s, k=%d"
                            % (space, n, total, name, k))
            rows.append(dict(mesh=name, cells=mesh.n_cells, k=k, svem=svem,
                             enhanced=enh, ratio=svem / enh,
                             deficient=n_def > 0, unsupported=n_uns > 0))
            hlog.debug("DoFs on %s, k=%d: %d vs %d." % (name, k, svem, enh))
    return rows


def format_dof_report(rows):
    '''
    Text table, '*' marks configurations with deficient cells
    (k >= eta_E, serendipity moments needed), '!' those with
    non-convex deficient cells.
    '''
    lines = ['%-22s %6s %2s %9s %9s %7s' % ('mesh', 'cells', 'k', 'S-VEM',
                                            'enhanced', 'ratio')]
    for r in rows:
        mark = '!' if r['unsupported'] else ('*' if r['deficient'] else '')
        lines.append('%-22s %6d %2d %9d %9d %7.4f %s'
                     % (r['mesh'], r['cells'], r['k'], r['svem'],
                        r['enhanced'], r['ratio'], mark))
    return '\n'.join(line.rstrip() for line in lines)
