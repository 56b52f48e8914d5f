"""Backend selection for the numerical kernels.

The hot loops in :mod:`magdirac._kernels` are written in a numba-compatible
subset of numpy.  By default they are JIT-compiled; setting the environment
variable ``MAGDIRAC_NO_NUMBA=1`` (or running without numba installed) keeps
them as plain Python/numpy functions producing identical results, just
slower.  The flag is read once at import time.
"""

import os

_flag = os.environ.get("MAGDIRAC_NO_NUMBA", "").strip().lower()
NUMBA_REQUESTED = _flag in ("", "0", "false", "no")

if NUMBA_REQUESTED:
    try:
        from numba import njit as _njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False
else:
    NUMBA_ENABLED = False


def maybe_njit(*args, **kwargs):
    """Return ``numba.njit`` when the JIT backend is active, else a no-op.

    Usable both bare (``@maybe_njit``) and with options
    (``@maybe_njit(cache=True)``).
    """
    if args and callable(args[0]):
        func = args[0]
        return _njit(func) if NUMBA_ENABLED else func

    def decorate(func):
        return _njit(*args, **kwargs)(func) if NUMBA_ENABLED else func

    return decorate


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"
