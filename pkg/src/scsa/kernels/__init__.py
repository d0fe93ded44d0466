"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports cleanly, unless the environment
variable ``SCSA_DISABLE_NUMBA`` is set to a truthy value (``1``, ``true``,
``yes``). Both paths compute the same quantities; ``benchmarks/`` compares
their speed.
"""

import os

from . import _numpy

_TRUTHY = {"1", "true", "yes", "on"}


def numba_requested() -> bool:
    return os.environ.get("SCSA_DISABLE_NUMBA", "").strip().lower() not in _TRUTHY


try:
    if not numba_requested():
        raise ImportError("numba disabled by SCSA_DISABLE_NUMBA")
    from . import _numba as _impl

    NUMBA_ENABLED = True
except ImportError:
    _impl = _numpy
    NUMBA_ENABLED = False

BACKEND = "numba" if NUMBA_ENABLED else "numpy"

d2_matrix = _impl.d2_matrix
tridiagonalize = _impl.tridiagonalize
tql_implicit = _impl.tql_implicit
weighted_square_sum = _impl.weighted_square_sum

__all__ = [
    "BACKEND",
    "NUMBA_ENABLED",
    "d2_matrix",
    "tridiagonalize",
    "tql_implicit",
    "weighted_square_sum",
]
