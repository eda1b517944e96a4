# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Read and write the plain text mesh format::

    polymesh 1
    <nv> <nc>
    x y            # nv lines
    m i0 ... im-1  # nc lines, 0-based counter-clockwise indices

Text after ``#`` is a comment.
'''

import os

from .polymesh import PolygonalMesh
from ..errors import MeshFormatError
from ..glogger import getGLogger

__all__ = ['import_mesh', 'export_mesh']
mlog = getGLogger('M')
MAGIC = 'polymesh'
FORMAT_VERSION = 1


def _content_lines(f):
    for lineno, line in enumerate(f, 1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield lineno, line.split()


def import_mesh(path, name=None):
    '''
    Read and validate a mesh file.

    Raises
    ------
    MeshFormatError, OrientationError, NonSimpleCellError,
    InvalidCellError, MeshTopologyError
    '''
    if not os.path.isfile(path):
        raise IOError("Can't find mesh file '%s'!" % path)
    with open(path, 'r', encoding='utf-8') as f:
        lines = _content_lines(f)
        try:
            lineno, head = next(lines)
            if len(head) != 2 or head[0] != MAGIC:
                raise MeshFormatError("%s:%d: expected '%s %d' header!"
                                      % (path, lineno, MAGIC, FORMAT_VERSION))
            if int(head[1]) != FORMAT_VERSION:
                raise MeshFormatError("%s:%d: unsupported version %s!"
                                      % (path, lineno, head[1]))
            lineno, counts = next(lines)
            if len(counts) != 2:
                raise MeshFormatError("%s:%d: expected '<nv> <nc>'!"
                                      % (path, lineno))
            nv, nc = int(counts[0]), int(counts[1])
            if nv < 3 or nc < 1:
                raise MeshFormatError("%s:%d: need nv >= 3 and nc >= 1!"
                                      % (path, lineno))
            vertices = []
            for _ in range(nv):
                lineno, xy = next(lines)
                if len(xy) != 2:
                    raise MeshFormatError("%s:%d: expected 'x y'!"
                                          % (path, lineno))
                vertices.append((float(xy[0]), float(xy[1])))
            cells = []
            for _ in range(nc):
                lineno, row = next(lines)
                m = int(row[0])
                if len(row) != m + 1:
                    raise MeshFormatError(
                        "%s:%d: cell declares %d vertices but lists %d!"
                        % (path, lineno, m, len(row) - 1))
                cells.append([int(i) for i in row[1:]])
        except StopIteration:
            raise MeshFormatError("%s: unexpected end of file!" % path)
        except ValueError as exc:
            raise MeshFormatError("%s:%d: %s" % (path, lineno, exc))
        for lineno, row in lines:
            raise MeshFormatError("%s:%d: trailing data!" % (path, lineno))
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    mlog.debug("Read mesh file %s: %d vertices, %d cells." % (path, nv, nc))
    return PolygonalMesh(vertices, cells, name=name)


def export_mesh(mesh, path, comment=None):
    '''Write *mesh* to *path*, coordinates at full precision.'''
    with open(path, 'w', encoding='utf-8') as f:
        f.write('%s %d\n' % (MAGIC, FORMAT_VERSION))
        if comment:
            for line in str(comment).splitlines():
                f.write('# %s\n' % line)
        f.write('%d %d\n' % (mesh.n_vertices, mesh.n_cells))
        for x, y in mesh.vertices:
            f.write('%r %r\n' % (float(x), float(y)))
        for c in mesh.cells:
            f.write('%d %s\n' % (c.size, ' '.join(str(int(i)) for i in c)))
    mlog.debug("Wrote mesh %s to %s." % (mesh.name, path))
    return path
