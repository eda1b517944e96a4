# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Element projectors of the serendipity virtual element space.

Matrices map local DoF vectors (columns) to coefficients of
polynomials in the scaled monomial basis of the cell (rows).
'''

import numpy as np
import scipy.linalg

from .layout import LocalDofLayout, SPACES
from .linalg import pivoted_solve, pivoted_lstsq
from ..mesh.geometry import compute_geometry
from ..polyspace import (ScaledMonomialBasis, EdgeRule, monomial_count,
                         polygon_quadrature)
from ..errors import (ConditionViolationError, ConditioningError,
                      UnsupportedConfigurationError, InternalError)
from ..glogger import getGLogger

__all__ = ['LocalElement', 'ElementOperators',
           'dof_vector', 'boundary_projector', 'serendipity_projector',
           'lift', 'ritz_projector', 'l2_projector', 'local_matrices']
elog = getGLogger('E')


class ElementOperators(object):
    '''
    Projector and local matrices of one cell.

    Attributes
    ----------
    index: int or None, cell index in its mesh
    k: int
    layout: :class:`LocalDofLayout`
    area, centroid, diameter: geometry of the cell
    basis: :class:`ScaledMonomialBasis`
    nodes: (kN, 2) array, coordinates of the boundary DoFs
    qpoints, qweights: cell quadrature
    Vq: (nq, r_k) array, monomials at *qpoints*
    D: (d, r_k) array, DoFs of the monomials
    H: (r_k, r_k) array, monomial mass matrix
    G: (r_k, r_k) array, gradient Gram matrix
    PiBoundary: (r_k, d) array, the projector that slaves missing moments,
        boundary projector, serendipity projector or, for the enhanced
        space, the Ritz projector
    Lift: (kN + r_k, d) array
    PiNabla, PiZero: (r_k, d) arrays
    A: (d, d) array, stiffness for eps = 1
    M: (d, d) array, stabilized mass
    Mc: (d, d) array, consistency part of the mass
    '''
    __slots__ = ['index', 'k', 'layout', 'area', 'centroid', 'diameter',
                 'basis', 'nodes', 'qpoints', 'qweights', 'Vq',
                 'D', 'H', 'G', 'PiBoundary', 'Lift', 'PiNabla', 'PiZero',
                 'A', 'M', 'Mc']

    def __init__(self, **kwargs):
        for name in self.__slots__:
            setattr(self, name, kwargs.get(name))

    @property
    def size(self):
        return self.layout.size

    def stiffness(self, eps=1.0):
        return eps * self.A

    def pi_zero_at_quadrature(self):
        '''(nq, d) array, Pi0 u evaluated at the cell quadrature points.'''
        return self.Vq @ self.PiZero

    def dof_vector(self, g):
        '''Local DoFs of *g*, a function of (n, 2) points.'''
        bnd = np.asarray(g(self.nodes), dtype=float)
        nm = self.layout.n_moments
        if nm == 0:
            return bnd
        gq = np.asarray(g(self.qpoints), dtype=float)
        mom = (self.qweights * gq) @ self.Vq[:, :nm] / self.area
        return np.concatenate((bnd, mom))


class LocalElement(object):
    '''
    Builder of :class:`ElementOperators` for one cell.

    Parameters
    ----------
    points: (N, 2) counter-clockwise vertices
    k: int >= 1
    eta: int, eta_E; computed with *strategy* if None
    strategy: :class:`EtaStrategy`
    space: 'serendipity' or 'enhanced'
    quad_degree: cell quadrature exactness, default 2k+2
    index: cell index, for messages
    '''
    __slots__ = ['points', 'k', 'geometry', 'layout', 'basis', 'rule',
                 'edge_rule', 'index', 'nodes', 'V', 'H',
                 '_eq_points', '_eq_ds', '_eq_normals', '_trace']

    def __init__(self, points, k, eta=None, strategy=None,
                 space='serendipity', quad_degree=None, index=None):
        if space not in SPACES:
            raise ValueError("Invalid space '%s', choose from %s!"
                             % (space, SPACES))
        self.points = np.asarray(points, dtype=float)
        self.k = int(k)
        self.index = index
        self.geometry = compute_geometry(self.points, strategy)
        if eta is None:
            eta = self.geometry.eta
        n = self.points.shape[0]
        self.layout = LocalDofLayout(self.k, n, eta, space)
        g = self.geometry
        self.basis = ScaledMonomialBasis(g.centroid, g.diameter, self.k)
        qd = 2 * self.k + 2 if quad_degree is None else int(quad_degree)
        self.rule = polygon_quadrature(self.points, qd, center=g.centroid)
        self.edge_rule = EdgeRule(self.k)
        self.V = self.basis.evaluate(self.rule.points)
        H = (self.V * self.rule.weights[:, None]).T @ self.V
        self.H = 0.5 * (H + H.T)
        self._build_boundary()

    def _build_boundary(self):
        k, n = self.k, self.points.shape[0]
        er = self.edge_rule
        P = self.points
        Q = np.roll(P, -1, axis=0)
        t = 0.5 * (er.lobatto_nodes[:k] + 1.0)
        self.nodes = (P[:, None, :] + t[None, :, None]
                      * (Q - P)[:, None, :]).reshape(-1, 2)
        s = 0.5 * (er.legendre_nodes + 1.0)
        nq = s.size
        self._eq_points = (P[:, None, :] + s[None, :, None]
                           * (Q - P)[:, None, :]).reshape(-1, 2)
        lengths = self.geometry.edge_lengths
        self._eq_ds = (0.5 * lengths[:, None]
                       * er.legendre_weights[None, :]).ravel()
        d = Q - P
        normals = np.column_stack((d[:, 1], -d[:, 0])) / lengths[:, None]
        self._eq_normals = np.repeat(normals, nq, axis=0)
        T = np.zeros((n * nq, k * n))
        for i in range(n):
            cols = [self.layout.edge_node_index(i, j) for j in range(k + 1)]
            T[i * nq:(i + 1) * nq, cols] = er.lagrange
        self._trace = T

    @property
    def area(self):
        return self.geometry.area

    @property
    def name(self):
        return 'cell %s' % ('?' if self.index is None else self.index)

    def dof_matrix(self):
        '''D (d, r_k): boundary values and retained moments of monomials.'''
        nm = self.layout.n_moments
        return np.vstack((self.basis.evaluate(self.nodes),
                          self.H[:nm, :] / self.area))

    def dof_vector(self, g):
        '''Local DoFs of *g*, a function of (n, 2) points.'''
        bnd = np.asarray(g(self.nodes), dtype=float)
        nm = self.layout.n_moments
        if nm == 0:
            return bnd
        gq = np.asarray(g(self.rule.points), dtype=float)
        mom = (self.rule.weights * gq) @ self.V[:, :nm] / self.area
        return np.concatenate((bnd, mom))

    def boundary_projector(self):
        '''
        Boundary projector, solves G c = b with
        G_ab = int_{dE} m_a m_b and b_a(v) = int_{dE} v m_a,
        edge traces interpolated at Gauss-Lobatto nodes and integrated
        with Gauss-Legendre rules. Needs k < eta_E.
        '''
        lay = self.layout
        if lay.k >= lay.eta:
            raise ConditionViolationError(
                "Boundary projector of %s needs k < eta_E, got k=%d, eta=%d!"
                % (self.name, lay.k, lay.eta), cell=self.index)
        Vb = self.basis.evaluate(self._eq_points)
        W = Vb * self._eq_ds[:, None]
        Gb = W.T @ Vb
        Bb = W.T @ self._trace
        Pi = pivoted_solve(Gb, Bb, what='Boundary Gram matrix',
                           cell=self.index, error=ConditionViolationError)
        return np.hstack((Pi, np.zeros((Pi.shape[0], lay.n_moments))))

    def serendipity_projector(self):
        '''
        Projector defined by the Euclidean product of DoF vectors,
        <D Pi v, D e_a> = <v, D e_a>, i.e. Pi = (D^T D)^{-1} D^T.
        '''
        lay = self.layout
        if lay.deficient and not self.geometry.convex:
            raise UnsupportedConfigurationError(
                "Serendipity moments for non-convex %s with k=%d >= eta=%d "
                "are not supported!" % (self.name, lay.k, lay.eta))
        return pivoted_lstsq(self.dof_matrix(), np.eye(lay.size),
                             what='DoF matrix', cell=self.index)

    def slave_projector(self):
        '''Projector of the serendipity space that fixes missing moments.'''
        if self.layout.n_moments == 0:
            return self.boundary_projector()
        return self.serendipity_projector()

    def lift(self, projector=None):
        '''
        (kN + r_k, d) map to enlarged DoFs: boundary and retained moments
        pass through, moment alpha >= n_m is 1/|E| int_E (Pi v) m_alpha.
        '''
        lay = self.layout
        nb, nm, r = lay.n_boundary, lay.n_moments, monomial_count(self.k)
        L = np.zeros((nb + r, lay.size))
        L[:nb, :nb] = np.eye(nb)
        L[nb:nb + nm, nb:] = np.eye(nm)
        if projector is not None:
            L[nb + nm:, :] = self.H[nm:, :] @ projector / self.area
        return L

    def gradient_gram(self):
        Gq = self.basis.gradient(self.rule.points)
        w = self.rule.weights
        G = np.einsum('q,qai,qbi->ab', w, Gq, Gq)
        return 0.5 * (G + G.T)

    def ritz_projector(self, lifted, G=None):
        '''
        Ritz projector from the lifted DoFs by Green's formula,
        int grad(v).grad(m_a) = int_{dE} v dm_a/dn - int_E v lap(m_a),
        closed by the boundary mean (k = 1) or the cell mean (k > 1).
        '''
        k, lay = self.k, self.layout
        nb, r = lay.n_boundary, monomial_count(k)
        G = self.gradient_gram() if G is None else G
        dn = np.einsum('qai,qi->qa', self.basis.gradient(self._eq_points),
                       self._eq_normals)
        B = np.zeros((r, nb + r))
        B[:, :nb] = (dn * self._eq_ds[:, None]).T @ self._trace
        lap = self.basis.laplacian_matrix()
        B[:, nb:nb + lap.shape[1]] -= self.area * lap
        Gt = G.copy()
        if k == 1:
            perimeter = self._eq_ds.sum()
            Vb = self.basis.evaluate(self._eq_points)
            Gt[0] = self._eq_ds @ Vb / perimeter
            B[0] = 0.0
            B[0, :nb] = self._eq_ds @ self._trace / perimeter
        else:
            Gt[0] = self.H[0] / self.area
            B[0] = 0.0
            B[0, nb] = 1.0
        return pivoted_solve(Gt, B @ lifted, what='Ritz Gram matrix',
                             cell=self.index)

    def l2_projector(self, lifted):
        '''Solve H c = |E| (lifted moments).'''
        nb = self.layout.n_boundary
        try:
            cho = scipy.linalg.cho_factor(self.H)
        except np.linalg.LinAlgError as exc:
            raise ConditioningError("Monomial mass matrix of %s is not SPD: "
                                    "%s" % (self.name, exc), cell=self.index)
        return scipy.linalg.cho_solve(cho, self.area * lifted[nb:, :])

    def operators(self):
        '''Build all projectors and local matrices.'''
        lay = self.layout
        G = self.gradient_gram()
        if lay.space == 'enhanced':
            # moments up to degree k-2 are DoFs, the rest follow Pi_nabla
            PiN = self.ritz_projector(self.lift(None), G=G)
            PiS = PiN
        else:
            PiS = self.slave_projector()
        L = self.lift(PiS)
        if lay.space != 'enhanced':
            PiN = self.ritz_projector(L, G=G)
        Pi0 = self.l2_projector(L)
        D = self.dof_matrix()
        A, M, Mc = self._local_matrices(D, G, PiN, Pi0)
        elog.debug("%s: %r, %d quadrature points."
                   % (self.name, lay, self.rule.size))
        return ElementOperators(
            index=self.index, k=self.k, layout=lay, area=self.area,
            centroid=self.geometry.centroid, diameter=self.geometry.diameter,
            basis=self.basis, nodes=self.nodes, qpoints=self.rule.points,
            qweights=self.rule.weights, Vq=self.V, D=D, H=self.H, G=G,
            PiBoundary=PiS, Lift=L, PiNabla=PiN, PiZero=Pi0,
            A=A, M=M, Mc=Mc)

    def _local_matrices(self, D, G, PiN, Pi0):
        d = self.layout.size
        I = np.eye(d)
        SN = I - D @ PiN
        A = PiN.T @ G @ PiN + SN.T @ SN
        S0 = I - D @ Pi0
        Mc = Pi0.T @ self.H @ Pi0
        M = Mc + self.area * (S0.T @ S0)
        A = 0.5 * (A + A.T)
        M = 0.5 * (M + M.T)
        Mc = 0.5 * (Mc + Mc.T)
        try:
            np.linalg.cholesky(M)
        except np.linalg.LinAlgError:
            raise InternalError("Local mass matrix of %s is not positive "
                                "definite!" % self.name)
        ev = np.linalg.eigvalsh(A)
        if ev[0] < -1e-10 * ev[-1]:
            raise InternalError("Local stiffness matrix of %s has negative "
                                "eigenvalue %.3e!" % (self.name, ev[0]))
        return A, M, Mc


def _element(cell, k, **kwargs):
    if isinstance(cell, LocalElement):
        return cell
    return LocalElement(cell, k, **kwargs)


def dof_vector(cell, k, g, **kwargs):
    '''Local serendipity DoFs of the function *g* on *cell*.'''
    return _element(cell, k, **kwargs).dof_vector(g)


def boundary_projector(cell, k, **kwargs):
    return _element(cell, k, **kwargs).boundary_projector()


def serendipity_projector(cell, k, **kwargs):
    return _element(cell, k, **kwargs).serendipity_projector()


def lift(cell, k, **kwargs):
    el = _element(cell, k, **kwargs)
    return el.lift(el.slave_projector())


def ritz_projector(cell, k, **kwargs):
    return _element(cell, k, **kwargs).operators().PiNabla


def l2_projector(cell, k, **kwargs):
    return _element(cell, k, **kwargs).operators().PiZero


def local_matrices(cell, k, eps=1.0, **kwargs):
    '''Return stiffness eps * A_E and stabilized mass M_E.'''
    ops = _element(cell, k, **kwargs).operators()
    return ops.stiffness(eps), ops.M
