# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import os
import sys

VERSION = (0, 3, 0)

__description__ = ("Interpolatory Serendipity Virtual Element solver for "
                   "semilinear parabolic equations on polygonal meshes")
__url__ = "https://github.com/svem-dev/svem.git"
__version__ = '.'.join(map(str, VERSION))
__status__ = "4 - Beta"
__author__ = "svem developers"
__email__ = "svem-dev@users.noreply.github.com"
__license__ = "MIT"
__copyright__ = 'Copyright (c) 2024-2025 svem developers'


# see: sysconfig._getuserbase()
def _get_userbase():
    env_base = os.getenv("SVEM_USERBASE", None)
    if env_base:
        return env_base

    def joinuser(*args):
        return os.path.expanduser(os.path.join(*args))

    if os.name == "nt":
        base = os.environ.get("APPDATA") or "~"
        return joinuser(base, "Svem")
    if sys.platform == "darwin" and sys._framework:
        return joinuser("~", "Library", "Svem")
    return joinuser("~", ".Svem")


__userbase__ = _get_userbase()


def get_userbase_dir(*names):
    '''
    Return directory *names* under user's base directory,
    create it when it does not exist.
    '''
    path = os.path.join(__userbase__, *names)
    if not os.path.isdir(path):
        os.makedirs(path, exist_ok=True)
    return path
