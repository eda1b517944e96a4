# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Contains StateVector class.
'''

import numpy as np

__all__ = ['StateVector']


class StateVector(object):
    '''
    Coefficients of a discrete function at time *t*.

    Attributes
    ----------
    values: (n,) float array, one entry per global DoF
    t: float
    '''
    __slots__ = ['values', 't']

    def __init__(self, values, t=0.0):
        values = np.array(values, dtype=float)
        if values.ndim != 1:
            raise ValueError("State must be a 1D array, got shape %s!"
                             % (values.shape,))
        if not np.all(np.isfinite(values)):
            raise ValueError("State has %d non-finite entries!"
                             % np.count_nonzero(~np.isfinite(values)))
        self.values = values
        self.t = float(t)

    def __len__(self):
        return self.values.size

    def copy(self):
        return StateVector(self.values, self.t)

    def __repr__(self):
        return ('StateVector(n=%d, t=%.6g, min=%.6g, max=%.6g)'
                % (self.values.size, self.t,
                   self.values.min(), self.values.max()))
