# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains DofMap class, the global numbering of serendipity DoFs.
'''

import numpy as np

from ..polyspace import gauss_lobatto
from ..projectors import moment_count, SPACES
from ..errors import UnsupportedConfigurationError
from ..glogger import getGLogger

__all__ = ['DofMap', 'build_dof_map']
alog = getGLogger('A')


class DofMap(object):
    '''
    Global DoF numbering: vertices first, then k-1 Gauss-Lobatto nodes
    per edge (edges in sorted order, nodes from the low to the high
    vertex index), then the moments of each cell by cell index.

    Attributes
    ----------
    k: int
    space: str, 'serendipity' or 'enhanced'
    n_vertices, n_edges: int
    n_moments: (nc,) int array, moment DoFs per cell
    moment_offsets: (nc+1,) int array, moment DoFs of cell c are
        n_nodal + moment_offsets[c] ... n_nodal + moment_offsets[c+1]-1
    gathers: tuple of int arrays, local to global index per cell
    coordinates: (n_nodal, 2) array, positions of the nodal DoFs
    eta: (nc,) int array used for the counts
    '''
    __slots__ = ['k', 'space', 'n_vertices', 'n_edges', 'n_moments',
                 'moment_offsets', 'gathers', 'coordinates', 'eta']

    def __init__(self, k, space, n_vertices, n_edges, n_moments,
                 gathers, coordinates, eta):
        self.k = k
        self.space = space
        self.n_vertices = n_vertices
        self.n_edges = n_edges
        self.n_moments = n_moments
        self.moment_offsets = np.concatenate(([0], np.cumsum(n_moments)))
        self.gathers = gathers
        self.coordinates = coordinates
        self.eta = eta

    @property
    def n_nodal(self):
        '''Vertex and edge DoFs, point values.'''
        return self.n_vertices + (self.k - 1) * self.n_edges

    @property
    def total(self):
        return self.n_nodal + int(self.moment_offsets[-1])

    @property
    def n_cells(self):
        return len(self.gathers)

    @property
    def nodal_mask(self):
        mask = np.zeros(self.total, dtype=bool)
        mask[:self.n_nodal] = True
        return mask

    def cell_moments(self, c):
        '''Global indices of the moment DoFs of cell *c*.'''
        return self.n_nodal + np.arange(self.moment_offsets[c],
                                        self.moment_offsets[c + 1])

    def moment_owner(self):
        '''(total,) int array, owning cell of each moment DoF, -1 if nodal.'''
        owner = np.full(self.total, -1, dtype=np.int64)
        owner[self.n_nodal:] = np.repeat(np.arange(self.n_cells),
                                         self.n_moments)
        return owner

    def __len__(self):
        return self.total

    def __repr__(self):
        return ('DofMap(k=%d, space=%s, nodal=%d, moments=%d, total=%d)'
                % (self.k, self.space, self.n_nodal,
                   self.total - self.n_nodal, self.total))


def build_dof_map(mesh, k, strategy=None, space='serendipity'):
    '''
    Number the DoFs of the degree *k* space on *mesh*.

    Raises
    ------
    UnsupportedConfigurationError: non-convex cell with k >= eta_E
        in the serendipity space
    '''
    if space not in SPACES:
        raise ValueError("Invalid space '%s', choose from %s!"
                         % (space, SPACES))
    if k < 1:
        raise ValueError("Degree k must be >= 1, got %r!" % k)
    eta = mesh.eta(strategy)
    if space == 'serendipity':
        for c, g in enumerate(mesh.geometry):
            if k >= eta[c] and not g.convex:
                raise UnsupportedConfigurationError(
                    "Cell %d is non-convex with k=%d >= eta=%d, serendipity "
                    "moments are only defined on convex cells!"
                    % (c, k, eta[c]))
    n_moments = np.array([moment_count(k, e, space) for e in eta],
                         dtype=np.int64)
    nv, ne = mesh.n_vertices, mesh.n_edges
    n_nodal = nv + (k - 1) * ne
    offsets = n_nodal + np.concatenate(([0], np.cumsum(n_moments)))
    j = np.arange(1, k)
    gathers = []
    for c, cell in enumerate(mesh.cells):
        N = cell.size
        g = np.empty(k * N + n_moments[c], dtype=np.int64)
        g[0:k * N:k] = cell
        if k > 1:
            fwd = mesh.cell_edge_forward[c]
            base = nv + (k - 1) * mesh.cell_edges[c]
            node = np.where(fwd[:, None], j[None, :], k - j[None, :])
            edge = base[:, None] + node - 1
            g[:k * N].reshape(N, k)[:, 1:] = edge
        g[k * N:] = np.arange(offsets[c], offsets[c + 1])
        g.setflags(write=False)
        gathers.append(g)
    coords = np.empty((n_nodal, 2))
    coords[:nv] = mesh.vertices
    if k > 1:
        t = 0.5 * (gauss_lobatto(k + 1)[0][1:k] + 1.0)
        a = mesh.vertices[mesh.edges[:, 0]]
        b = mesh.vertices[mesh.edges[:, 1]]
        coords[nv:] = (a[:, None, :] + t[None, :, None]
                       * (b - a)[:, None, :]).reshape(-1, 2)
    coords.setflags(write=False)
    dm = DofMap(k, space, nv, ne, n_moments, tuple(gathers), coords, eta)
    alog.debug("%r on mesh %s." % (dm, mesh.name))
    return dm
