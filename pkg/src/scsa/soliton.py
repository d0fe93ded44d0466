"""Closed-form N-soliton (reflectionless) signals and Poschl-Teller reference values.

For decay rates kappa_n and norming constants c_n the signal is

    y(x) = (2/chi) * d^2/dx^2 ln det(I + A(x)),
    A_mn(x) = c_m c_n / (kappa_m + kappa_n) * exp(-(kappa_m + kappa_n) x).

With P = (I + A)^-1 and K = diag(kappa) the second derivative has the closed
form 4 tr(K^2 P) - 4 tr((K P)^2), used by default. A finite-difference route
on ln det is kept for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .core import SchrodingerSpectrum
from .errors import DeterminantDegenerateError, GridTooCoarseError, InvalidParameterError
from .signals import Grid, Signal

__all__ = [
    "SolitonModel",
    "log_det",
    "nsoliton_signal",
    "poschl_teller_chi",
    "poschl_teller_kappas",
    "tail_norming_constants",
]

RESOLUTION = 0.25  # dx * max(kappa) must not exceed this


@dataclass(frozen=True)
class SolitonModel:
    chi: float
    kappas: tuple[float, ...]
    constants: tuple[float, ...]

    def __init__(self, chi: float, kappas: Sequence[float], constants: Sequence[float]):
        kappas = tuple(float(k) for k in kappas)
        constants = tuple(float(c) for c in constants)
        if not chi > 0:
            raise InvalidParameterError(f"chi must be positive, got {chi}")
        if len(kappas) != len(constants):
            raise InvalidParameterError("need one norming constant per kappa")
        if any(not k > 0 for k in kappas) or len(set(kappas)) != len(kappas):
            raise InvalidParameterError("kappas must be positive and distinct")
        if any(not c > 0 for c in constants):
            raise InvalidParameterError("norming constants must be positive")
        object.__setattr__(self, "chi", float(chi))
        object.__setattr__(self, "kappas", kappas)
        object.__setattr__(self, "constants", constants)

    @property
    def n(self) -> int:
        return len(self.kappas)

    def translated(self, delta: float) -> "SolitonModel":
        """Model whose signal is this one shifted right by ``delta``."""
        c = [ci * math.exp(ki * delta) for ci, ki in zip(self.constants, self.kappas)]
        return SolitonModel(self.chi, self.kappas, c)


def _scaled_system(model: SolitonModel, x: float):
    # I + A = S F S with S = diag(e^s), s = max(u, 0), u_n = ln c_n - kappa_n x;
    # F stays bounded whichever way the exponentials go.
    k = np.asarray(model.kappas)
    u = np.log(np.asarray(model.constants)) - k * x
    s = np.maximum(u, 0.0)
    e = np.exp(u - s)
    cauchy = 1.0 / (k[:, None] + k[None, :])
    f = np.outer(e, e) * cauchy
    f[np.diag_indices_from(f)] += np.exp(-2.0 * s)
    try:
        chol = scipy.linalg.cho_factor(f, lower=True)
    except np.linalg.LinAlgError:
        raise DeterminantDegenerateError(f"I + A is not positive definite at x={x}") from None
    return k, s, chol


def log_det(model: SolitonModel, x) -> np.ndarray:
    """ln det(I + A(x)) at each abscissa."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if model.n == 0:
        return np.zeros_like(x)
    out = np.empty_like(x)
    for j, xj in enumerate(x):
        _, s, (low, _) = _scaled_system(model, xj)
        out[j] = 2.0 * s.sum() + 2.0 * np.log(np.diag(low)).sum()
    return out


def _second_derivative_trace(model: SolitonModel, x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    for j, xj in enumerate(x):
        k, s, chol = _scaled_system(model, xj)
        g = scipy.linalg.cho_solve(chol, np.eye(k.size))  # F^-1
        w = k * np.exp(-2.0 * s)  # K S^-2
        wg = w[:, None] * g
        out[j] = 4.0 * np.sum(k * w * np.diag(g)) - 4.0 * np.sum(wg * wg.T)
    return out


def _second_derivative_fd(model: SolitonModel, x: np.ndarray, dx: float) -> np.ndarray:
    g = log_det(model, x)
    out = np.empty_like(g)
    out[1:-1] = (g[2:] - 2.0 * g[1:-1] + g[:-2]) / dx**2
    out[0] = (2.0 * g[0] - 5.0 * g[1] + 4.0 * g[2] - g[3]) / dx**2
    out[-1] = (2.0 * g[-1] - 5.0 * g[-2] + 4.0 * g[-3] - g[-4]) / dx**2
    return out


def nsoliton_signal(model: SolitonModel, grid: Grid, method: str = "trace") -> Signal:
    """Sample the reflectionless signal of ``model`` on ``grid``.

    ``method="trace"`` uses the closed-form second derivative (accurate to
    rounding); ``method="fd"`` differentiates ln det with second-order
    central differences, one-sided at the ends.
    """
    x = grid.points
    if model.n == 0:
        return Signal(grid, np.zeros(grid.m))
    kmax = max(model.kappas)
    if grid.dx * kmax > RESOLUTION:
        raise GridTooCoarseError(
            f"dx={grid.dx:.4g} too coarse for kappa={kmax:.4g}; need dx <= {RESOLUTION / kmax:.4g}"
        )
    if method == "trace":
        g2 = _second_derivative_trace(model, x)
    elif method == "fd":
        g2 = _second_derivative_fd(model, x, grid.dx)
    else:
        raise ValueError(f"unknown method {method!r}")
    y = (2.0 / model.chi) * g2
    return Signal(grid, np.clip(y, 0.0, None))


def poschl_teller_chi(n: int) -> float:
    """Coupling at which chi * sech^2 is reflectionless with ``n`` bound states."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    return float(n * (n + 1))


def poschl_teller_kappas(chi: float) -> np.ndarray:
    """Exact kappas of -d2/dx2 - chi*sech^2: s, s-1, ... > 0 with s(s+1) = chi."""
    if not chi > 0:
        raise InvalidParameterError(f"chi must be positive, got {chi}")
    top = (-1.0 + math.sqrt(1.0 + 4.0 * chi)) / 2.0
    # near-integer s: the zero-energy level at s - floor(s) = 0 is not bound
    count = math.ceil(top - 1e-12)
    return top - np.arange(count, dtype=np.float64)


def tail_norming_constants(
    spec: SchrodingerSpectrum, x: np.ndarray, window: tuple[float, float]
) -> np.ndarray:
    """Norming constants c_n from psi_n(x) ~ c_n exp(-kappa_n x) on the right tail.

    Each eigenfunction is fitted on ``window`` by least squares against
    exp(-kappa x) plus a growing exp(+kappa x) term, which absorbs the tail of
    the periodic image on a Fourier grid.
    """
    x = np.asarray(x, dtype=np.float64)
    lo, hi = window
    mask = (x >= lo) & (x <= hi)
    if mask.sum() < 4:
        raise InvalidParameterError("tail window holds fewer than 4 samples")
    xs = x[mask]
    out = np.empty(spec.count)
    for n, kappa in enumerate(spec.kappas):
        basis = np.column_stack([np.exp(-kappa * (xs - lo)), np.exp(kappa * (xs - hi))])
        coef, *_ = np.linalg.lstsq(basis, spec.eigfuncs[mask, n], rcond=None)
        out[n] = abs(coef[0]) * math.exp(kappa * lo)
    return out
