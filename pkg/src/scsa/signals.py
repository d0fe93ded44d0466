"""Equidistant grids, sampled signals, test-signal generators and CSV I/O."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import (
    InvalidDomainError,
    InvalidParameterError,
    LengthMismatchError,
    NonEquidistantGridError,
    ParseError,
)

__all__ = [
    "Grid",
    "Signal",
    "ShiftedSignal",
    "make_grid",
    "generate",
    "shift_nonnegative",
    "load_csv",
    "save_csv",
    "SIGNAL_KINDS",
]

# relative tolerance on abscissae when reading sampled data
EQUIDISTANT_RTOL = 1e-9


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Grid:
    """Closed interval [a, b] sampled at m equidistant points (m - 1 intervals)."""

    a: float
    b: float
    m: int

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.a >= self.b:
            raise InvalidDomainError(f"need finite a < b, got a={self.a}, b={self.b}")
        if int(self.m) != self.m or self.m < 4:
            raise InvalidDomainError(f"need an integer point count m >= 4, got {self.m}")

    @property
    def dx(self) -> float:
        return (self.b - self.a) / (self.m - 1)

    @property
    def points(self) -> np.ndarray:
        x = self.a + self.dx * np.arange(self.m, dtype=np.float64)
        x[-1] = self.b
        return x


def make_grid(a: float, b: float, m: int) -> Grid:
    if isinstance(m, float) and m.is_integer():
        m = int(m)
    return Grid(float(a), float(b), m)


@dataclass(frozen=True, eq=False)
class Signal:
    grid: Grid
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        samples = _frozen(self.samples)
        if samples.ndim != 1 or samples.size != self.grid.m:
            raise LengthMismatchError(
                f"expected {self.grid.m} samples, got shape {samples.shape}"
            )
        if not np.all(np.isfinite(samples)):
            raise InvalidParameterError("signal samples must be finite")
        object.__setattr__(self, "samples", samples)

    @property
    def x(self) -> np.ndarray:
        return self.grid.points

    def __len__(self) -> int:
        return self.grid.m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signal):
            return NotImplemented
        return self.grid == other.grid and np.array_equal(self.samples, other.samples)

    __hash__ = None


@dataclass(frozen=True)
class ShiftedSignal:
    """A nonnegative signal together with the minimum that was subtracted."""

    signal: Signal
    offset: float

    @property
    def original(self) -> np.ndarray:
        return self.signal.samples + self.offset


def shift_nonnegative(s: Signal) -> ShiftedSignal:
    lowest = float(np.min(s.samples))
    offset = lowest if lowest < 0.0 else 0.0
    if offset == 0.0:
        return ShiftedSignal(s, 0.0)
    return ShiftedSignal(Signal(s.grid, s.samples - offset), offset)


# --- generators -------------------------------------------------------------


def _sech2(x: np.ndarray, x0: float = 6.0) -> np.ndarray:
    return 1.0 / np.cosh(x - x0) ** 2


def _gaussian(x: np.ndarray, mu: float = 0.75, sigma: float = 0.1) -> np.ndarray:
    if not sigma > 0:
        raise InvalidParameterError(f"sigma must be positive, got {sigma}")
    return np.exp(-((x - mu) ** 2) / (2.0 * sigma**2)) / (sigma * math.sqrt(2.0 * math.pi))


def _sine(
    x: np.ndarray, amplitude: float = 2.0, omega: float = math.pi, phi: float = -0.5
) -> np.ndarray:
    return amplitude * np.sin(omega * x + phi)


def _chirp(
    x: np.ndarray, amplitude: float = 1.0, f0: float = 0.5, f1: float = 3.0
) -> np.ndarray:
    if not (f0 > 0 and f1 > 0):
        raise InvalidParameterError(f"chirp frequencies must be positive, got {f0}, {f1}")
    t = x - x[0]
    span = x[-1] - x[0]
    # instantaneous frequency ramps linearly from f0 at a to f1 at b
    phase = 2.0 * math.pi * (f0 * t + 0.5 * (f1 - f0) * t**2 / span)
    return amplitude * np.sin(phase)


SIGNAL_KINDS: dict[str, Callable[..., np.ndarray]] = {
    "sech2": _sech2,
    "gaussian": _gaussian,
    "sine": _sine,
    "chirp": _chirp,
}


def generate(kind: str, grid: Grid, **params: float) -> Signal:
    """Evaluate a closed-form test signal on ``grid``.

    Supported kinds and their keyword parameters (defaults in parentheses):

    * ``sech2``: ``x0`` (6)
    * ``gaussian``: ``mu`` (0.75), ``sigma`` (0.1)
    * ``sine``: ``amplitude`` (2), ``omega`` (pi), ``phi`` (-0.5)
    * ``chirp``: ``amplitude`` (1), ``f0`` (0.5), ``f1`` (3); linear frequency
      ramp from ``f0`` at ``grid.a`` to ``f1`` at ``grid.b``

    ``sine`` and ``chirp`` take negative values; pass them through
    :func:`shift_nonnegative` before analysis.
    """
    try:
        func = SIGNAL_KINDS[kind]
    except KeyError:
        raise InvalidParameterError(
            f"unknown signal kind {kind!r}; choose from {sorted(SIGNAL_KINDS)}"
        ) from None
    try:
        samples = func(grid.points, **params)
    except TypeError as exc:
        raise InvalidParameterError(f"bad parameters for {kind}: {exc}") from None
    return Signal(grid, samples)


# --- CSV ------------------------------------------------------------------------


def _parse_rows(path: Path) -> tuple[np.ndarray, np.ndarray]:
    xs: list[float] = []
    ys: list[float] = []
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or all(not cell.strip() for cell in row):
                    continue
                if len(row) != 2:
                    raise ParseError(f"{path}:{lineno}: expected 2 columns, got {len(row)}")
                try:
                    x, y = float(row[0]), float(row[1])
                except ValueError:
                    if lineno == 1 and not xs:
                        continue  # header
                    raise ParseError(f"{path}:{lineno}: non-numeric row {row!r}") from None
                xs.append(x)
                ys.append(y)
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 ({exc})") from None
    return np.asarray(xs), np.asarray(ys)


def load_csv(path: str | Path) -> Signal:
    """Read ``x,value`` rows into a Signal; a single header line is allowed.

    Raises ParseError for malformed content (and FileNotFoundError for a
    missing file) and NonEquidistantGridError when the abscissae deviate from
    an equidistant grid by more than ``EQUIDISTANT_RTOL`` of the span.
    """
    path = Path(path)
    x, y = _parse_rows(path)
    if x.size < 4:
        raise ParseError(f"{path}: need at least 4 samples, got {x.size}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ParseError(f"{path}: non-finite values")
    if np.any(np.diff(x) <= 0):
        raise NonEquidistantGridError(f"{path}: abscissae are not strictly increasing")
    grid = make_grid(x[0], x[-1], x.size)
    if np.max(np.abs(x - grid.points)) > EQUIDISTANT_RTOL * (grid.b - grid.a):
        raise NonEquidistantGridError(f"{path}: abscissae are not equidistant")
    return Signal(grid, y)


def save_csv(s: Signal, path: str | Path) -> None:
    # repr() round-trips doubles exactly
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write("x,value\n")
        for x, y in zip(s.x, s.samples):
            fh.write(f"{float(x)!r},{float(y)!r}\n")
