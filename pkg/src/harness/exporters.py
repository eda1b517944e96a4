# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Result files: convergence CSV, legacy VTK snapshots and npz archives.
'''

import os
import numpy as np

from .convergence import REPORT_COLUMNS
from ..glogger import getGLogger

__all__ = ['export_csv', 'import_csv', 'export_vtk', 'SnapshotRecorder',
           'save_snapshots', 'load_snapshots']
hlog = getGLogger('H')
VTK_POLYGON = 7


def export_csv(report, path):
    '''
    Write the rows of a :class:`ConvergenceReport` (or an array with
    the columns of :data:`REPORT_COLUMNS`) to *path*, one header row,
    full precision decimals.
    '''
    data = report.as_array() if hasattr(report, 'as_array') else report
    data = np.asarray(data, dtype=float).reshape(-1, len(REPORT_COLUMNS))
    np.savetxt(path, data, fmt='%.17g', delimiter=',',
               header=','.join(REPORT_COLUMNS), comments='')
    hlog.info("Wrote %d rows to %s." % (data.shape[0], path))
    return path


def import_csv(path):
    '''Read a convergence CSV, return a structured array by column name.'''
    data = np.genfromtxt(path, delimiter=',', names=True, dtype=float)
    data = np.atleast_1d(data)
    missing = set(REPORT_COLUMNS) - set(data.dtype.names or ())
    if missing:
        raise ValueError("%s misses columns %s!" % (path, sorted(missing)))
    return data


def export_vtk(space, U, path, title=None):
    '''
    Legacy ASCII unstructured grid of the mesh of *space* with polygon
    cells. Each cell gets its own copy of its vertices so Pi0 u_h,
    discontinuous across edges, is stored as POINT_DATA pi0_u.
    CELL_DATA u_mean is the cell average of Pi0 u_h.
    '''
    U = getattr(U, 'values', U)
    mesh = space.mesh
    cells = mesh.cells
    values = space.evaluate_pi0(U)
    means = space.cell_averages(U)
    n_points = sum(c.size for c in cells)
    title = title or 'svem %s k=%d' % (mesh.name, space.k)
    with open(path, 'w') as f:
        f.write('# vtk DataFile Version 3.0\n')
        f.write('%s\n' % title.replace('\n', ' ')[:255])
        f.write('ASCII\nDATASET UNSTRUCTURED_GRID\n')
        f.write('POINTS %d double\n' % n_points)
        for c in range(mesh.n_cells):
            for x, y in mesh.cell_points(c):
                f.write('%.17g %.17g 0\n' % (x, y))
        f.write('CELLS %d %d\n' % (len(cells), n_points + len(cells)))
        start = 0
        for c in cells:
            ids = range(start, start + c.size)
            f.write('%d %s\n' % (c.size, ' '.join(map(str, ids))))
            start += c.size
        f.write('CELL_TYPES %d\n' % len(cells))
        f.write(('%d\n' % VTK_POLYGON) * len(cells))
        f.write('CELL_DATA %d\n' % len(cells))
        f.write('SCALARS u_mean double 1\nLOOKUP_TABLE default\n')
        for m in means:
            f.write('%.17g\n' % m)
        f.write('POINT_DATA %d\n' % n_points)
        f.write('SCALARS pi0_u double 1\nLOOKUP_TABLE default\n')
        for v in values:
            for val in v:
                f.write('%.17g\n' % val)
    hlog.debug("Wrote VTK %s." % path)
    return path


class SnapshotRecorder(object):
    '''
    Observer of :meth:`Splitting.run`, keeps DoF vectors and
    Pi0 cell averages, optionally writes one VTK file per snapshot.

    Attributes
    ----------
    space: :class:`VemSpace`
    vtk_dir: str or None
    prefix: str, VTK file names are prefix-<step>.vtk
    times, states, averages, files: lists
    '''
    __slots__ = ['space', 'vtk_dir', 'prefix', 'times', 'states',
                 'averages', 'files']

    def __init__(self, space, vtk_dir=None, prefix='snapshot'):
        self.space = space
        self.vtk_dir = vtk_dir
        self.prefix = prefix
        self.times, self.states, self.averages, self.files = [], [], [], []

    def __call__(self, state, step):
        self.times.append(state.t)
        self.states.append(state.values.copy())
        self.averages.append(self.space.cell_averages(state))
        hlog.info("Snapshot at t=%g (step %d)." % (state.t, step))
        if self.vtk_dir:
            path = os.path.join(self.vtk_dir,
                                '%s-%06d.vtk' % (self.prefix, step))
            export_vtk(self.space, state, path,
                       title='%s t=%.17g' % (self.prefix, state.t))
            self.files.append(path)

    def __len__(self):
        return len(self.times)

    def save(self, path):
        return save_snapshots(path, self.times, self.states, self.averages)


def save_snapshots(path, times, states, averages):
    '''npz archive with arrays times (n,), U (n, N) and averages (n, nc).'''
    np.savez(path, times=np.asarray(times, dtype=float),
             U=np.asarray(states, dtype=float),
             averages=np.asarray(averages, dtype=float))
    hlog.info("Saved %d snapshots to %s." % (len(times), path))
    return path


def load_snapshots(path):
    with np.load(path) as data:
        return {key: data[key] for key in ('times', 'U', 'averages')}
