# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
JSON helpers for run configurations and summaries.
'''

import os
import json
import numpy as np

from .glogger import getGLogger

__all__ = ['JsonEncoder', 'load_json', 'dump_json']
log = getGLogger('G')


class JsonEncoder(json.JSONEncoder):
    ''' Support numpy int, float, bool and array. '''

    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif hasattr(obj, 'to_dict'):
            return obj.to_dict()
        else:
            return super(JsonEncoder, self).default(obj)


def load_json(path):
    '''Read a JSON object from *path*.'''
    with open(path, 'r') as f:
        obj = json.load(f)
    if not isinstance(obj, dict):
        raise ValueError("%s does not hold a JSON object!" % path)
    log.debug("Read %d keys from %s." % (len(obj), path))
    return obj


def dump_json(obj, path, indent=2):
    '''Write *obj* to *path*, replaced atomically.'''
    tmp = '%s.tmp' % path
    with open(tmp, 'w') as f:
        json.dump(obj, f, cls=JsonEncoder, indent=indent, sort_keys=True)
        f.write('\n')
    os.replace(tmp, path)
    log.debug("Wrote %s." % path)
    return path
