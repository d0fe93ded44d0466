"""Choosing chi: sweeps, plateaus of constant eigenvalue count, and J(chi) minimization."""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DEFAULT_EPS_REL, mse, negative_spectrum, reconstruct
from .errors import TargetCountUnreachableError, ZeroSignalError
from .signals import Signal

__all__ = [
    "SweepPoint",
    "Plateau",
    "MonotonicityWarning",
    "evaluate",
    "count_at",
    "sweep",
    "is_monotone",
    "weyl_chi_for_target",
    "bracket_for_count",
    "find_plateau",
    "optimize_chi",
    "golden_section",
]

PLATEAU_RTOL = 1e-3
INVGOLD = (math.sqrt(5.0) - 1.0) / 2.0


class MonotonicityWarning(UserWarning):
    """Eigenvalue counts decreased somewhere along an ascending chi sweep."""


@dataclass(frozen=True)
class SweepPoint:
    chi: float
    count: int
    mse: float


@dataclass(frozen=True)
class Plateau:
    count: int
    chi_lo: float
    chi_hi: float


def evaluate(s: Signal, chi: float, eps_rel: float = DEFAULT_EPS_REL) -> SweepPoint:
    spec = negative_spectrum(s, chi, eps_rel=eps_rel)
    return SweepPoint(float(chi), spec.count, mse(s, reconstruct(spec)))


def count_at(s: Signal, chi: float, eps_rel: float = DEFAULT_EPS_REL) -> int:
    return negative_spectrum(s, chi, eps_rel=eps_rel).count


def is_monotone(points: Sequence[SweepPoint]) -> bool:
    counts = [p.count for p in points]
    return all(b >= a for a, b in zip(counts, counts[1:]))


def sweep(
    s: Signal,
    chis: Sequence[float],
    eps_rel: float = DEFAULT_EPS_REL,
    workers: int = 1,
) -> list[SweepPoint]:
    """Evaluate (count, J) at each chi of an ascending sequence.

    Points come back in input order whatever ``workers`` is. A decreasing
    count emits MonotonicityWarning instead of raising.
    """
    chis = [float(c) for c in chis]
    if any(c <= 0 for c in chis):
        raise ValueError("chi values must be positive")
    if any(b < a for a, b in zip(chis, chis[1:])):
        raise ValueError("chi values must be ascending")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(lambda c: evaluate(s, c, eps_rel), chis))
    else:
        points = [evaluate(s, c, eps_rel) for c in chis]
    if not is_monotone(points):
        warnings.warn("eigenvalue count is not monotone in chi", MonotonicityWarning, stacklevel=2)
    return points


def weyl_chi_for_target(s: Signal, n: int) -> float:
    """chi at which the Weyl law predicts ``n`` negative eigenvalues.

    sqrt(chi) ~ pi * n / int sqrt(y) dx, trapezoid rule for the integral.
    """
    if n < 1:
        raise ValueError(f"target count must be positive, got {n}")
    root_mass = float(np.trapezoid(np.sqrt(np.clip(s.samples, 0.0, None)), dx=s.grid.dx))
    if root_mass <= 0.0:
        raise ZeroSignalError("signal is identically zero")
    return (math.pi * n / root_mass) ** 2


def bracket_for_count(
    s: Signal, n: int, eps_rel: float = DEFAULT_EPS_REL, max_doublings: int = 40
) -> tuple[float, float]:
    """A chi bracket around the Weyl estimate with count(lo) <= n <= count(hi)."""
    guess = weyl_chi_for_target(s, n)
    lo, hi = guess / 2.0, guess * 2.0
    for _ in range(max_doublings):
        if count_at(s, lo, eps_rel) <= n:
            break
        lo /= 2.0
    else:
        raise TargetCountUnreachableError(f"no chi found with count <= {n}")
    for _ in range(max_doublings):
        if count_at(s, hi, eps_rel) >= n:
            break
        hi *= 2.0
    else:
        raise TargetCountUnreachableError(f"no chi found with count >= {n}")
    return lo, hi


def _bisect(pred, lo: float, hi: float, rtol: float) -> tuple[float, float]:
    # invariant: pred(lo) is False, pred(hi) is True
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def find_plateau(
    s: Signal,
    n: int,
    bracket: tuple[float, float],
    eps_rel: float = DEFAULT_EPS_REL,
    rtol: float = PLATEAU_RTOL,
) -> Plateau:
    """Interval of chi on which the count equals ``n``, located by bisection.

    Both returned endpoints evaluate to count ``n``; they lie within ``rtol``
    (relative) of the true jumps, or on the bracket ends when the plateau
    extends past them.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not 0 < lo < hi:
        raise ValueError(f"bad bracket {bracket}")
    count = lambda chi: count_at(s, chi, eps_rel)  # noqa: E731
    c_lo, c_hi = count(lo), count(hi)
    if c_lo > n or c_hi < n:
        raise TargetCountUnreachableError(
            f"count {n} not reachable in [{lo}, {hi}] (counts {c_lo}..{c_hi})"
        )
    if c_lo == n:
        chi_lo = lo
    else:
        _, chi_lo = _bisect(lambda c: count(c) >= n, lo, hi, rtol)
    if c_hi == n:
        chi_hi = hi
    else:
        chi_hi, _ = _bisect(lambda c: count(c) > n, chi_lo, hi, rtol)
    if count(chi_lo) != n or count(chi_hi) != n or not chi_lo < chi_hi:
        raise TargetCountUnreachableError(
            f"count jumps past {n} inside [{lo}, {hi}]; no plateau found"
        )
    return Plateau(n, chi_lo, chi_hi)


def golden_section(f, a: float, b: float, xtol: float, max_iter: int = 200):
    """Minimize a unimodal ``f`` on [a, b]. Returns (x, f(x), evaluations)."""
    c = b - INVGOLD * (b - a)
    d = a + INVGOLD * (b - a)
    fc, fd = f(c), f(d)
    evaluations = [(c, fc), (d, fd)]
    for _ in range(max_iter):
        if abs(b - a) <= xtol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INVGOLD * (b - a)
            fc = f(c)
            evaluations.append((c, fc))
        else:
            a, c, fc = c, d, fd
            d = a + INVGOLD * (b - a)
            fd = f(d)
            evaluations.append((d, fd))
    x, fx = min(evaluations, key=lambda p: p[1])
    return x, fx, evaluations


def optimize_chi(
    s: Signal,
    plateau: Plateau,
    budget: int = 16,
    eps_rel: float = DEFAULT_EPS_REL,
    xtol_rel: float = 1e-6,
) -> tuple[float, float]:
    """Minimize J(chi) over a plateau: coarse grid, then golden-section polish.

    The coarse grid has ``budget`` points including both endpoints; the
    golden-section search runs on the two cells around the best grid point.
    The result is never worse than the best grid sample.
    """
    if budget < 8:
        raise ValueError(f"budget must be at least 8 evaluations, got {budget}")
    lo, hi = plateau.chi_lo, plateau.chi_hi
    if hi - lo <= 1e-6 * max(1.0, abs(hi)):
        return lo, evaluate(s, lo, eps_rel).mse

    def J(chi: float) -> float:
        return evaluate(s, chi, eps_rel).mse

    grid = np.linspace(lo, hi, budget)
    values = [J(c) for c in grid]
    best = int(np.argmin(values))
    chi_best, j_best = float(grid[best]), float(values[best])
    a = float(grid[max(best - 1, 0)])
    b = float(grid[min(best + 1, budget - 1)])
    x, fx, _ = golden_section(J, a, b, xtol=xtol_rel * hi)
    if fx < j_best:
        chi_best, j_best = float(x), float(fx)
    return chi_best, j_best
