"""Select the compiled kernels when built, else the pure-Python ones.

Set ``TEMPERED_KIT_PURE=1`` to force the fallback. The compiled order code
packs bits into 64 bits, so spaces with more than 11 points always take the
Python path.
"""

import os

from . import _pykernels as _py

_c = None
if not os.environ.get("TEMPERED_KIT_PURE"):
    try:
        from . import _ckernels as _c
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"
_C_MAX_POINTS = 11


def _pick(n):
    return _c if _c is not None and n <= _C_MAX_POINTS else _py


def linear_extensions(n, up):
    return _pick(n).linear_extensions(n, up)


def order_code(n, up, perm):
    return _pick(n).order_code(n, up, perm)


def temperature_code(n, tau, perm):
    return _pick(n).temperature_code(n, tau, perm)


def minimal_order_code(n, up):
    return _pick(n).minimal_order_code(n, up)


def minimal_temperature_codes(n, perms):
    return _pick(n).minimal_temperature_codes(n, perms)
