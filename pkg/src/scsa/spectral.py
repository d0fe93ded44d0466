"""Fourier pseudo-spectral second-derivative matrix and dense symmetric eigensolver."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg

from . import kernels
from .errors import NoConvergenceError, NonSymmetricInputError
from .signals import Grid

__all__ = [
    "DiffMatrix",
    "EigenDecomposition",
    "build_d2",
    "eig_sym",
    "eig_sym_below",
    "EIG_METHODS",
]

EIG_METHODS = ("lapack", "householder_ql")
SYMMETRY_RTOL = 1e-12
SWEEPS_PER_ROW = 100


@dataclass(frozen=True, eq=False)
class DiffMatrix:
    order: int
    entries: np.ndarray = field(repr=False)


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    values: np.ndarray  # ascending
    vectors: np.ndarray = field(repr=False)  # column n pairs with values[n]

    def __len__(self) -> int:
        return self.values.size


@lru_cache(maxsize=16)
def _d2_entries(m: int, dx: float) -> np.ndarray:
    out = np.ascontiguousarray(kernels.d2_matrix(m, dx))
    out.setflags(write=False)
    return out


def build_d2(grid: Grid) -> DiffMatrix:
    """Second-order Fourier differentiation matrix on ``grid``.

    The wavelength constant is 2*pi/M regardless of the spacing; the spacing
    only enters through the (2*pi/M)**2 / dx**2 prefactor. For odd M the
    diagonal is -pi**2/(3*Delta**2) + 1/12, the value for which constants lie
    in the null space. Entries depend on |k - j| alone, so the matrix is
    exactly symmetric; it is negative semidefinite.
    """
    return DiffMatrix(grid.m, _d2_entries(grid.m, grid.dx))


def _check_symmetric(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetricInputError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonSymmetricInputError("matrix has non-finite entries")
    scale = np.linalg.norm(a)
    if np.linalg.norm(a - a.T) > SYMMETRY_RTOL * scale:
        raise NonSymmetricInputError("matrix is not symmetric")
    return 0.5 * (a + a.T)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    # deterministic orientation: largest-magnitude entry of each column positive
    if vectors.size == 0:
        return vectors
    idx = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[idx, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def _householder_ql(a: np.ndarray, max_sweeps: int | None) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    cap = SWEEPS_PER_ROW * n if max_sweeps is None else int(max_sweeps)
    d, e, q = kernels.tridiagonalize(np.ascontiguousarray(a))
    values, vectors, iters = kernels.tql_implicit(d, e, q, cap)
    if iters < 0:
        raise NoConvergenceError(f"implicit QL did not converge within {cap} sweeps")
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def eig_sym(
    a, method: str = "lapack", max_sweeps: int | None = None
) -> EigenDecomposition:
    """All eigenpairs of a dense real symmetric matrix, values ascending.

    ``method="lapack"`` calls LAPACK through scipy. ``method="householder_ql"``
    uses the package's own Householder tridiagonalization followed by implicit
    QL iterations (numba or numpy kernels); ``max_sweeps`` caps the total QL
    iterations (default 100 * M) before NoConvergenceError.

    Eigenvector signs are normalized so the largest-magnitude entry of each
    column is positive.
    """
    a = _check_symmetric(a)
    if method == "lapack":
        values, vectors = scipy.linalg.eigh(a)
    elif method == "householder_ql":
        values, vectors = _householder_ql(a, max_sweeps)
    else:
        raise ValueError(f"unknown eigensolver method {method!r}; choose from {EIG_METHODS}")
    return EigenDecomposition(values, _fix_signs(vectors))


def eig_sym_below(a, upper: float, method: str = "lapack") -> EigenDecomposition:
    """Eigenpairs with eigenvalue strictly below ``upper``, ascending.

    With LAPACK only the requested part of the spectrum is computed, which is
    what makes dense chi sweeps cheap.
    """
    a = _check_symmetric(a)
    if method == "lapack":
        values, vectors = scipy.linalg.eigh(
            a, subset_by_value=(-np.inf, upper), driver="evr"
        )
        keep = values < upper
        values, vectors = values[keep], vectors[:, keep]
    else:
        full = eig_sym(a, method=method)
        keep = full.values < upper
        values, vectors = full.values[keep], full.vectors[:, keep]
    return EigenDecomposition(values, _fix_signs(vectors))
