# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Svem's logger module.

One logger per subpackage, named by a letter, see :data:`LOGGERS`.
Records go to stderr from INFO and to a rotating file from DEBUG.
Worker processes of a pool send theirs through a queue to the main
process, see :class:`LogWorkInitializer`.
'''

import os
import tempfile
import getpass
import time
import logging
import logging.config
import logging.handlers

__all__ = ['LOGGERS', 'logfile', 'getGLogger', 'LogWorkInitializer']

LOGGERS = {
    'G': 'svem, svem.cli',
    'M': 'svem.mesh',
    'Q': 'svem.polyspace',
    'E': 'svem.projectors',
    'A': 'svem.assembly',
    'T': 'svem.timestep',
    'H': 'svem.harness',
}
CONSOLE_FORMAT = '[%(name)s]%(levelname)-7s - {tag}%(message)s'
FILE_FORMAT = ('%(asctime)s - %(name)s:%(module)s:%(lineno)d'
               ':%(levelname)s - {tag}%(message)s')
ROTATE = dict(maxBytes=3 * 1024 * 1024, backupCount=9)


def _stream_and_file(logfile, tag):
    formatters = dict(
        simple=dict(format=CONSOLE_FORMAT.format(tag=tag)),
        detailed=dict(format=FILE_FORMAT.format(tag=tag),
                      datefmt='%m-%d %H:%M:%S'))
    console = {'class': 'logging.StreamHandler', 'level': 'INFO',
               'formatter': 'simple', 'stream': 'ext://sys.stderr'}
    rotating = {'class': 'logging.handlers.RotatingFileHandler',
                'level': 'DEBUG', 'formatter': 'detailed',
                'filename': logfile, **ROTATE}
    return formatters, dict(console=console, file=rotating)


def get_glogger_config(c, logfile=None, queue=None):
    '''
    Parameters
    ----------
    c: str
        'main' for a plain run, 'listen' for the main process of a
        worker pool (records carry the process name), 'work' for
        a pool worker
    logfile: str
        rotating log file, for 'main' and 'listen'
    queue: Queue
        queue to the main process, for 'work'
    '''
    if c == 'work':
        formatters = {}
        handlers = {'queue': {'class': 'logging.handlers.QueueHandler',
                              'queue': queue}}
    elif c in ('main', 'listen'):
        tag = '{%(processName)s} ' if c == 'listen' else ''
        formatters, handlers = _stream_and_file(logfile, tag)
    else:
        raise ValueError("Unknown logging mode %r!" % c)
    loggers = {letter: dict(level='DEBUG', handlers=sorted(handlers),
                            propagate=False)
               for letter in LOGGERS}
    return dict(version=1, disable_existing_loggers=True,
                formatters=formatters, handlers=handlers, loggers=loggers)


logfile = os.path.join(
    tempfile.gettempdir(),
    'svem-%s-%s.log' % (getpass.getuser(), time.strftime('%Y')))
logging.config.dictConfig(get_glogger_config('main', logfile=logfile))
_listener = None


def getGLogger(name):
    '''
    Return logger *name*, a letter of :data:`LOGGERS` or a dotted
    child of one, like 'H.runner'.
    '''
    if name.split('.')[0] not in LOGGERS:
        raise KeyError("Logger '%s' not supported!" % name)
    return logging.getLogger(name)


class LogWorkInitializer(object):
    '''
    Pool initializer forwarding worker records to the handlers of the
    main process through a managed queue. Use it as a context manager
    around the pool, it restores the plain config on exit.

    Attributes
    ----------
    worker_config: dict
        logging config applied in each worker
    '''
    __slots__ = ['worker_config']

    def __init__(self, manager):
        global _listener
        logqueue = manager.Queue(-1)
        logging.config.dictConfig(
            get_glogger_config('listen', logfile=logfile))
        _listener = logging.handlers.QueueListener(
            logqueue, *logging.getLogger('G').handlers,
            respect_handler_level=True)
        _listener.start()
        self.worker_config = get_glogger_config('work', queue=logqueue)

    def __call__(self):
        logging.config.dictConfig(self.worker_config)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        global _listener
        if _listener is not None:
            _listener.stop()
            _listener = None
        logging.config.dictConfig(get_glogger_config('main', logfile=logfile))
