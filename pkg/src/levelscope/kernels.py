"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when
``LEVELSCOPE_PURE=1`` is set, the pure-Python versions are used.  Callers
always go through the module attributes so :func:`set_backend` takes effect
immediately.
"""

import os

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

# packed keys handed to the compiled multiply must stay below this
COMPILED_KEY_LIMIT = 1 << 63

BACKEND = "python"
poly_mul = _pykernels.poly_mul
rref = _pykernels.rref


def available_backends():
    return ["python"] + (["compiled"] if _compiled is not None else [])


def set_backend(name):
    global BACKEND, poly_mul, rref
    if name == "compiled":
        if _compiled is None:
            raise ImportError("levelscope._kernels is not built")
        mod = _compiled
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    poly_mul = mod.poly_mul
    rref = mod.rref


def _pure_multiply(ka, ca, kb, cb, p):
    return _pykernels.poly_mul(ka, ca, kb, cb, p)


def multiply_packed(ka, ca, kb, cb, p, max_key):
    """Dispatch a packed multiply, falling back when keys would overflow."""
    if BACKEND == "compiled" and max_key < COMPILED_KEY_LIMIT:
        return poly_mul(ka, ca, kb, cb, p)
    return _pure_multiply(ka, ca, kb, cb, p)


set_backend("python" if (_compiled is None or os.environ.get("LEVELSCOPE_PURE") == "1") else "compiled")
