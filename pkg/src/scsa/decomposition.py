"""Fast/slow split of an SCSA reconstruction (systolic/diastolic partial sums)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import SchrodingerSpectrum
from .errors import OutOfRangeError

__all__ = ["PulseSplit", "split"]


@dataclass(frozen=True, eq=False)
class PulseSplit:
    fast: np.ndarray = field(repr=False)
    slow: np.ndarray = field(repr=False)
    n_fast: int


def split(spec: SchrodingerSpectrum, n_fast: int = 1) -> PulseSplit:
    """Partial sums over the ``n_fast`` largest kappas and over the rest.

    ``fast + slow`` equals the full reconstruction. For pulse signals the
    fast part is usually one to three components out of five to nine.
    """
    if not 0 <= n_fast <= spec.count:
        raise OutOfRangeError(f"n_fast must lie in [0, {spec.count}], got {n_fast}")
    weights = (4.0 / spec.chi) * spec.kappas
    psi = np.ascontiguousarray(spec.eigfuncs)
    fast = kernels.weighted_square_sum(np.ascontiguousarray(psi[:, :n_fast]), weights[:n_fast])
    slow = kernels.weighted_square_sum(np.ascontiguousarray(psi[:, n_fast:]), weights[n_fast:])
    return PulseSplit(fast, slow, n_fast)
