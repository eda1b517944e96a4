# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Build element operators of all cells of a mesh,
in a for loop or with a pool of worker processes.
'''

import os
import time
import multiprocessing

from .element import LocalElement
from ..glogger import getGLogger, LogWorkInitializer

__all__ = ['build_operators']
elog = getGLogger('E')


def _build_one(args):
    points, k, eta, space, quad_degree, index = args
    el = LocalElement(points, k, eta=eta, space=space,
                      quad_degree=quad_degree, index=index)
    return el.operators()


def build_operators(mesh, k, strategy=None, space='serendipity',
                    quad_degree=None, workers=1):
    '''
    Return a list of :class:`ElementOperators`, one per cell.

    Parameters
    ----------
    mesh: :class:`PolygonalMesh`
    k: int, degree
    strategy: :class:`EtaStrategy`
    space: 'serendipity' or 'enhanced'
    quad_degree: cell quadrature exactness, default 2k+2
    workers: int, number of worker processes, 0 for os.cpu_count()
    '''
    eta = mesh.eta(strategy)
    tasks = [(mesh.cell_points(i), k, int(eta[i]), space, quad_degree, i)
             for i in range(mesh.n_cells)]
    if workers == 0:
        workers = os.cpu_count() or 1
    workers = min(workers, len(tasks))
    start = time.perf_counter()
    if workers > 1:
        elog.debug('%d processes to work!' % workers)
        manager = multiprocessing.Manager()
        with LogWorkInitializer(manager) as loginitializer:
            with multiprocessing.Pool(
                    processes=workers,
                    initializer=loginitializer) as pool:
                chunk = max(1, len(tasks) // (4 * workers))
                ops = pool.map(_build_one, tasks, chunksize=chunk)
        manager.shutdown()
    else:
        ops = [_build_one(t) for t in tasks]
    elog.info("Built %s operators (k=%d) of %d cells in %.3fs."
              % (space, k, len(ops), time.perf_counter() - start))
    return ops
