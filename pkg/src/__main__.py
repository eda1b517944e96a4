# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import os
import sys
from .glogger import getGLogger

log = getGLogger('G')


def entry_iface(candidates=('cli',), default='cli'):
    '''
    Get and enter first valid iface in candidates.

    There are 2 ways to set entry iface: program name and environment
    variable 'SVEM_IFACE'. First, check if program name without 'svem-'
    in candidates; then if value of 'SVEM_IFACE' in candidates.
    After both checks failed, use default iface.

    Parameters
    ----------
    candidates: tuple
        choose candidates from available interfaces, only 'cli' now
    default: str
        default interface in candidates
    '''
    log.debug('Current working directory (CWD) is %s' % os.getcwd())
    log.debug('Entry interface arguments is %s' % sys.argv)
    # first, 'svem-cli' -> 'cli'
    prog = os.path.basename(sys.argv[0])
    iface = prog.split('-')[-1]
    if iface in candidates:
        log.debug('Get iface %s from program name %s.' % (iface, prog))
    else:
        iface = os.getenv('SVEM_IFACE', default=None)
        if iface in candidates:
            log.debug('Get iface %s from env SVEM_IFACE.' % iface)
        else:
            iface = default
            log.debug('Get iface %s from default setting.' % iface)
    if iface == 'cli':
        from .cli import cli_script
        cli_script()
    else:
        log.error('Invalid iface %s!' % iface)


if __name__ == "__main__":
    entry_iface()
