# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains LocalDofLayout class.
'''

from ..polyspace import monomial_count

__all__ = ['LocalDofLayout', 'SPACES', 'moment_count']
SPACES = ('serendipity', 'enhanced')


def moment_count(k, eta, space='serendipity'):
    '''
    Number of moment DoFs of a cell.

    serendipity: r_{k-eta} if k >= eta else 0
    enhanced: r_{k-2}, moments up to degree k-2
    '''
    if space == 'serendipity':
        return monomial_count(k - eta) if k >= eta else 0
    elif space == 'enhanced':
        return monomial_count(k - 2)
    raise ValueError("Invalid space '%s', choose from %s!" % (space, SPACES))


class LocalDofLayout(object):
    '''
    Local DoF ordering of a cell with N edges.

    Boundary DoFs are interleaved counter-clockwise from vertex 0:
    local index i*k is vertex i, i*k + j (j = 1..k-1) is the j-th
    interior Gauss-Lobatto node of edge i, running from vertex i to
    vertex i+1. Moment DoFs 1/|E| int_E v m_alpha follow, alpha < n_m.

    Attributes
    ----------
    k: int
    n_edges: int, N
    eta: int, eta_E
    space: str, 'serendipity' or 'enhanced'
    n_moments: int, n_m
    '''
    __slots__ = ['k', 'n_edges', 'eta', 'space', 'n_moments']

    def __init__(self, k, n_edges, eta, space='serendipity'):
        if k < 1:
            raise ValueError("Degree k must be >= 1, got %r!" % k)
        self.k = int(k)
        self.n_edges = int(n_edges)
        self.eta = int(eta)
        self.space = space
        self.n_moments = moment_count(self.k, self.eta, space)

    @property
    def n_boundary(self):
        return self.k * self.n_edges

    @property
    def size(self):
        '''d^S = kN + n_m.'''
        return self.n_boundary + self.n_moments

    @property
    def deficient(self):
        '''k >= eta_E, the boundary projector is not well defined.'''
        return self.k >= self.eta

    @property
    def n_enlarged(self):
        '''kN + r_k DoFs of the enlarged space.'''
        return self.n_boundary + monomial_count(self.k)

    def vertex_index(self, i):
        return (i % self.n_edges) * self.k

    def edge_node_index(self, i, j):
        '''Node j (0 = vertex i, k = vertex i+1) of edge i.'''
        if j == self.k:
            return self.vertex_index(i + 1)
        return i * self.k + j

    def moment_index(self, alpha):
        return self.n_boundary + alpha

    def __repr__(self):
        return ('LocalDofLayout(k=%d, N=%d, eta=%d, space=%s, n_m=%d)'
                % (self.k, self.n_edges, self.eta, self.space,
                   self.n_moments))
