# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Error classes of svem. Every error carries a short :attr:`code`,
so callers (and the CLI) can tell failures apart without parsing messages.
'''

__all__ = [
    'SvemError',
    'InvalidCellError', 'OrientationError', 'NonSimpleCellError',
    'MeshFormatError', 'MeshTopologyError',
    'ConditionViolationError', 'ConditioningError',
    'UnsupportedConfigurationError', 'InternalError',
    'StepFailure',
]


class SvemError(Exception):
    '''Base class of all svem errors.'''
    code = 'svem'

    def __str__(self):
        msg = super(SvemError, self).__str__()
        return '[%s] %s' % (self.code, msg)


class InvalidCellError(SvemError):
    '''Cell with too few vertices, repeated vertices or no area.'''
    code = 'invalid-cell'


class OrientationError(SvemError):
    '''Cell given clockwise.'''
    code = 'orientation'


class NonSimpleCellError(SvemError):
    '''Self-intersecting cell boundary.'''
    code = 'non-simple'


class MeshFormatError(SvemError):
    '''Malformed mesh file.'''
    code = 'malformed-file'


class MeshTopologyError(SvemError):
    '''Edges shared by more than two cells, gaps or overlaps.'''
    code = 'topology'


class ConditionViolationError(SvemError):
    '''
    Boundary projector is not well defined, i.e. k >= eta_E,
    or its Gram matrix is numerically singular.
    '''
    code = 'condition-violation'

    def __init__(self, msg, cell=None):
        super(ConditionViolationError, self).__init__(msg)
        self.cell = cell


class ConditioningError(SvemError):
    '''Singular or ill-conditioned local system.'''
    code = 'conditioning'

    def __init__(self, msg, cell=None):
        super(ConditioningError, self).__init__(msg)
        self.cell = cell


class UnsupportedConfigurationError(SvemError):
    '''Requested combination is outside the implemented method.'''
    code = 'unsupported-configuration'


class InternalError(SvemError):
    '''Failed self-check, e.g. non-symmetric local matrix.'''
    code = 'internal'


class StepFailure(SvemError):
    '''
    Time step failure.

    Attributes
    ----------
    step: int or None, index of the time step
    dof: int or None, global DoF index of a failed scalar solve
    cell: int or None, cell index of a failed local solve
    residual: float or None, last residual
    '''
    code = 'step-failure'

    def __init__(self, msg, step=None, dof=None, cell=None, residual=None):
        super(StepFailure, self).__init__(msg)
        self.step = step
        self.dof = dof
        self.cell = cell
        self.residual = residual
