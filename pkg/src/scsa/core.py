"""Discretized Schrodinger operator, its negative spectrum, and the SCSA reconstruction.

Everything is stored in the chi-form: for a signal y and chi = 1/h**2 the
operator is -D2 - chi*diag(y), its negative eigenvalues are -kappa_n**2 with
kappa_1 > kappa_2 > ..., and the reconstruction is

    y_chi = (4/chi) * sum_n kappa_n * psi_n**2

with psi_n normalized so that sum_j psi_n[j]**2 * dx = 1. The semi-classical
form is recovered with h = 1/sqrt(chi) and kappa_nh = kappa_n / sqrt(chi).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import LengthMismatchError, NegativeSignalError
from .signals import Signal
from .spectral import build_d2, eig_sym_below

__all__ = [
    "SchrodingerSpectrum",
    "ScsaResult",
    "assemble_hamiltonian",
    "negative_spectrum",
    "reconstruct",
    "mse",
    "momenta",
    "quantization_levels",
    "reflectionless_deficit",
    "sign_changes",
    "analyze",
    "DEFAULT_EPS_REL",
]

DEFAULT_EPS_REL = 1e-10


@dataclass(frozen=True, eq=False)
class SchrodingerSpectrum:
    chi: float
    kappas: np.ndarray  # descending, > 0
    eigfuncs: np.ndarray = field(repr=False)  # (M, N), column n pairs with kappas[n]
    dx: float

    @property
    def count(self) -> int:
        return int(self.kappas.size)

    @property
    def h(self) -> float:
        return 1.0 / np.sqrt(self.chi)

    @property
    def kappas_h(self) -> np.ndarray:
        """kappa values of the semi-classical operator with h = 1/sqrt(chi)."""
        return self.kappas / np.sqrt(self.chi)


@dataclass(frozen=True, eq=False)
class ScsaResult:
    spectrum: SchrodingerSpectrum
    reconstruction: np.ndarray = field(repr=False)
    mse: float
    inv1: float
    inv3: float
    levels: np.ndarray


def _values(y) -> np.ndarray:
    return y.samples if isinstance(y, Signal) else np.asarray(y, dtype=np.float64)


def _require_nonnegative(s: Signal) -> None:
    if np.any(s.samples < 0):
        raise NegativeSignalError(
            f"signal has negative samples (min {s.samples.min():.3g}); "
            "apply shift_nonnegative first"
        )


def assemble_hamiltonian(s: Signal, chi: float) -> np.ndarray:
    """Dense symmetric matrix -D2 - chi * diag(samples)."""
    _require_nonnegative(s)
    if not chi >= 0:
        raise ValueError(f"chi must be nonnegative, got {chi}")
    h = -build_d2(s.grid).entries
    h[np.diag_indices_from(h)] -= chi * s.samples
    return h


def negative_spectrum(
    s: Signal, chi: float, eps_rel: float = DEFAULT_EPS_REL, method: str = "lapack"
) -> SchrodingerSpectrum:
    """Negative eigenvalues and L2-normalized eigenfunctions of the operator.

    Eigenvalues count as negative below ``-eps_rel * chi * max(y)``; this
    keeps the discretization noise around zero out of the count.
    """
    if not chi > 0:
        raise ValueError(f"chi must be positive, got {chi}")
    h = assemble_hamiltonian(s, chi)
    dx = s.grid.dx
    peak = float(s.samples.max())
    cutoff = -eps_rel * chi * peak
    if peak <= 0.0:
        empty = np.zeros(0)
        return SchrodingerSpectrum(float(chi), empty, np.zeros((s.grid.m, 0)), dx)
    eig = eig_sym_below(h, cutoff, method=method)
    # ascending eigenvalues -> descending kappa
    kappas = np.sqrt(-eig.values)
    psi = eig.vectors / np.sqrt(dx)
    kappas.setflags(write=False)
    psi.setflags(write=False)
    return SchrodingerSpectrum(float(chi), kappas, psi, dx)


def reconstruct(spec: SchrodingerSpectrum) -> np.ndarray:
    weights = (4.0 / spec.chi) * spec.kappas
    return kernels.weighted_square_sum(np.ascontiguousarray(spec.eigfuncs), weights)


def mse(y, y_rec) -> float:
    """Mean square error (1/M) * sum (y_i - y_rec_i)**2."""
    a = _values(y)
    b = _values(y_rec)
    if a.shape != b.shape:
        raise LengthMismatchError(f"length mismatch: {a.shape} vs {b.shape}")
    diff = a - b
    return float(np.mean(diff * diff))


def momenta(spec: SchrodingerSpectrum) -> tuple[float, float]:
    """(1/chi) sum kappa and (1/chi**2) sum kappa**3.

    As chi grows these tend to (1/4) int y and (3/16) int y**2.
    """
    k = spec.kappas
    return float(k.sum() / spec.chi), float((k**3).sum() / spec.chi**2)


def quantization_levels(spec: SchrodingerSpectrum, y: Signal | None = None) -> np.ndarray:
    """Levels kappa_n**2 / chi; each lies in (0, max(y)]."""
    if y is not None and spec.eigfuncs.shape[0] != len(_values(y)):
        raise LengthMismatchError("spectrum and signal live on different grids")
    return spec.kappas**2 / spec.chi


def reflectionless_deficit(y: Signal, spec: SchrodingerSpectrum) -> float:
    """(4/chi) sum kappa - int y dx, with the integral by the trapezoid rule.

    Zero exactly when chi*y is reflectionless; otherwise positive, since the
    continuous spectrum only removes mass.
    """
    integral = float(np.trapezoid(y.samples, dx=y.grid.dx))
    return float(4.0 / spec.chi * spec.kappas.sum()) - integral


def sign_changes(column: np.ndarray, floor: float = 1e-6) -> int:
    """Sign changes of ``column`` ignoring samples with magnitude <= floor."""
    v = column[np.abs(column) > floor]
    if v.size < 2:
        return 0
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


def analyze(
    s: Signal, chi: float, eps_rel: float = DEFAULT_EPS_REL, method: str = "lapack"
) -> ScsaResult:
    spec = negative_spectrum(s, chi, eps_rel=eps_rel, method=method)
    rec = reconstruct(spec)
    inv1, inv3 = momenta(spec)
    return ScsaResult(
        spectrum=spec,
        reconstruction=rec,
        mse=mse(s, rec),
        inv1=inv1,
        inv3=inv3,
        levels=quantization_levels(spec, s),
    )
