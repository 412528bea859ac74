"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  ``BACKEND`` names the active one.  Callers reach the kernels
through this module's attributes, so :func:`use_backend` switches every
caller at once.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_NAMES = ("mul_accumulate", "add_accumulate", "gcd_cross_sum", "gcd_pairwise_sum")


def available_backends():
    return ("cython", "python") if _ckernels is not None else ("python",)


def use_backend(name):
    """Route all kernel calls to ``"cython"`` or ``"python"``."""
    global BACKEND
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    for attr in _NAMES:
        globals()[attr] = getattr(mod, attr)
    BACKEND = name


def current_backend():
    return BACKEND


BACKEND = None
use_backend(available_backends()[0])
