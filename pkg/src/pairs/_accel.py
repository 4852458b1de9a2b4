"""Backend selection for the hot kernels.

Set ``PAIRS_DISABLE_NUMBA=1`` to force the pure-numpy path.  When numba is
not importable the numpy path is used regardless.
"""
import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

DISABLE_ENV = "PAIRS_DISABLE_NUMBA"


def _env_disabled():
    return os.environ.get(DISABLE_ENV, "").strip().lower() in ("1", "true", "yes", "on")


BACKEND = "numba" if HAVE_NUMBA and not _env_disabled() else "numpy"


def set_backend(name):
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    BACKEND = name


def get_backend():
    return BACKEND


def njit(func):
    """``numba.njit(cache=True)`` when available, identity otherwise."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def dispatch(numba_impl, numpy_impl):
    def kernel(*args):
        if BACKEND == "numba":
            return numba_impl(*args)
        return numpy_impl(*args)

    kernel.numba = numba_impl
    kernel.numpy = numpy_impl
    kernel.__name__ = numpy_impl.__name__.replace("_numpy", "")
    kernel.__doc__ = numpy_impl.__doc__
    return kernel
