"""Command-line interface.

Subcommands: generate, analyze, sweep, fit, decompose, soliton.
Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import chi_search, core, decomposition, signals, soliton
from .errors import (
    DeterminantDegenerateError,
    GridTooCoarseError,
    InvalidDomainError,
    InvalidParameterError,
    LengthMismatchError,
    NegativeSignalError,
    NoConvergenceError,
    NonEquidistantGridError,
    NonSymmetricInputError,
    OutOfRangeError,
    ParseError,
    TargetCountUnreachableError,
    ZeroSignalError,
)

log = logging.getLogger("scsa")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERICAL = 0, 1, 2, 3

_DATA_ERRORS = (
    OSError,
    ParseError,
    NonEquidistantGridError,
    LengthMismatchError,
    NegativeSignalError,
    ZeroSignalError,
)
_NUMERICAL_ERRORS = (
    NoConvergenceError,
    DeterminantDegenerateError,
    TargetCountUnreachableError,
    NonSymmetricInputError,
    np.linalg.LinAlgError,
)
_USAGE_ERRORS = (InvalidDomainError, InvalidParameterError, OutOfRangeError, GridTooCoarseError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class AnalysisReport:
    chi: float
    count: int
    kappas: list[float]
    inv1: float
    inv3: float
    mse: float
    deficit: float
    shift_offset: float

    @classmethod
    def from_signal(cls, shifted: signals.ShiftedSignal, chi: float, eps_rel: float):
        result = core.analyze(shifted.signal, chi, eps_rel=eps_rel)
        spec = result.spectrum
        return cls(
            chi=float(chi),
            count=spec.count,
            kappas=[float(k) for k in spec.kappas],
            inv1=result.inv1,
            inv3=result.inv3,
            mse=result.mse,
            deficit=core.reflectionless_deficit(shifted.signal, spec),
            shift_offset=float(shifted.offset),
        ), result


def _write_json(path: str, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _load_shifted(path: str) -> signals.ShiftedSignal:
    return signals.shift_nonnegative(signals.load_csv(path))


def _fit(s: signals.Signal, target: int, budget: int, eps_rel: float):
    bracket = chi_search.bracket_for_count(s, target, eps_rel=eps_rel)
    plateau = chi_search.find_plateau(s, target, bracket, eps_rel=eps_rel)
    chi, _ = chi_search.optimize_chi(s, plateau, budget=budget, eps_rel=eps_rel)
    return plateau, chi


# --- subcommands ------------------------------------------------------------


def cmd_generate(args) -> int:
    grid = signals.make_grid(args.a, args.b, args.m)
    params = {
        "sech2": {"x0": args.x0},
        "gaussian": {"mu": args.mu, "sigma": args.sigma},
        "sine": {"amplitude": args.amplitude, "omega": args.omega, "phi": args.phi},
        "chirp": {"amplitude": args.amplitude, "f0": args.f0, "f1": args.f1},
    }[args.kind]
    params = {k: v for k, v in params.items() if v is not None}
    signals.save_csv(signals.generate(args.kind, grid, **params), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    shifted = _load_shifted(args.input)
    report, result = AnalysisReport.from_signal(shifted, args.chi, args.eps_rel)
    _write_json(args.out, asdict(report))
    if args.recon_out:
        signals.save_csv(signals.Signal(shifted.signal.grid, result.reconstruction), args.recon_out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if not 0 < args.chi_min < args.chi_max:
        raise UsageError("need 0 < --chi-min < --chi-max")
    shifted = _load_shifted(args.input)
    space = np.geomspace if args.log else np.linspace
    chis = space(args.chi_min, args.chi_max, args.num)
    points = chi_search.sweep(shifted.signal, chis, eps_rel=args.eps_rel, workers=args.workers)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        fh.write("chi,count,mse\n")
        for p in points:
            fh.write(f"{p.chi!r},{p.count},{p.mse!r}\n")
    if not chi_search.is_monotone(points):
        log.warning("eigenvalue count is not monotone along the sweep")
    return EXIT_OK


def cmd_fit(args) -> int:
    shifted = _load_shifted(args.input)
    plateau, chi = _fit(shifted.signal, args.target_count, args.budget, args.eps_rel)
    report, _ = AnalysisReport.from_signal(shifted, chi, args.eps_rel)
    payload = asdict(report)
    payload.update(chi_lo=plateau.chi_lo, chi_hi=plateau.chi_hi)
    _write_json(args.out, payload)
    return EXIT_OK


def cmd_decompose(args) -> int:
    shifted = _load_shifted(args.input)
    s = shifted.signal
    if args.chi is not None:
        chi = args.chi
    elif args.target_count is not None:
        _, chi = _fit(s, args.target_count, args.budget, args.eps_rel)
    else:
        raise UsageError("decompose needs --chi or --target-count")
    spec = core.negative_spectrum(s, chi, eps_rel=args.eps_rel)
    parts = decomposition.split(spec, args.n_fast)
    signals.save_csv(signals.Signal(s.grid, parts.fast), args.out_fast)
    signals.save_csv(signals.Signal(s.grid, parts.slow), args.out_slow)
    log.info("chi=%r count=%d n_fast=%d", chi, spec.count, args.n_fast)
    return EXIT_OK


def cmd_soliton(args) -> int:
    model = soliton.SolitonModel(args.chi, args.kappas, args.constants)
    grid = signals.make_grid(args.a, args.b, args.m)
    signals.save_csv(soliton.nsoliton_signal(model, grid, method=args.method), args.out)
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def _add_grid(p, a=0.0, b=15.0, m=512):
    p.add_argument("--a", type=float, default=a, help="domain start (default %(default)s)")
    p.add_argument("--b", type=float, default=b, help="domain end (default %(default)s)")
    p.add_argument("--m", type=int, default=m, help="number of points (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scsa", description="Semi-classical signal analysis.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write a test signal as CSV")
    p.add_argument("--kind", required=True, choices=sorted(signals.SIGNAL_KINDS))
    p.add_argument("--x0", type=float)
    p.add_argument("--mu", type=float)
    p.add_argument("--sigma", type=float)
    p.add_argument("--amplitude", type=float)
    p.add_argument("--omega", type=float)
    p.add_argument("--phi", type=float)
    p.add_argument("--f0", type=float)
    p.add_argument("--f1", type=float)
    _add_grid(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    def with_input(p):
        p.add_argument("--in", dest="input", required=True, help="signal CSV (x,value)")
        p.add_argument("--eps-rel", type=float, default=core.DEFAULT_EPS_REL)

    p = sub.add_parser("analyze", help="spectrum, invariants and error at one chi")
    with_input(p)
    p.add_argument("--chi", type=float, required=True)
    p.add_argument("--out", required=True, help="JSON report")
    p.add_argument("--recon-out", help="optional CSV of the reconstruction")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="count and error over a range of chi")
    with_input(p)
    p.add_argument("--chi-min", type=float, default=1.0)
    p.add_argument("--chi-max", type=float, default=500.0)
    p.add_argument("--num", type=int, default=200)
    p.add_argument("--log", action="store_true", help="log-spaced chi values")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="CSV chi,count,mse")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fit", help="choose chi for a target eigenvalue count")
    with_input(p)
    p.add_argument("--target-count", type=int, required=True)
    p.add_argument("--budget", type=int, default=16)
    p.add_argument("--out", required=True, help="JSON report")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("decompose", help="fast/slow partial sums")
    with_input(p)
    p.add_argument("--chi", type=float)
    p.add_argument("--target-count", type=int)
    p.add_argument("--budget", type=int, default=16)
    p.add_argument("--n-fast", type=int, default=1)
    p.add_argument("--out-fast", required=True)
    p.add_argument("--out-slow", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("soliton", help="evaluate an N-soliton from scattering data")
    p.add_argument("--kappas", type=_floats, required=True)
    p.add_argument("--constants", type=_floats, required=True)
    p.add_argument("--chi", type=float, required=True)
    p.add_argument("--method", choices=("trace", "fd"), default="trace")
    _add_grid(p, a=-15.0, b=15.0, m=1001)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_soliton)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="scsa: %(levelname)s: %(message)s",
    )
    for name in ("chi", "chi_min", "chi_max"):
        value = getattr(args, name, None)
        if value is not None and not (math.isfinite(value) and value > 0):
            print(f"scsa: --{name.replace('_', '-')} must be a positive number", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"scsa: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DATA_ERRORS as exc:
        print(f"scsa: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except _NUMERICAL_ERRORS as exc:
        print(f"scsa: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (*_USAGE_ERRORS, ValueError) as exc:
        print(f"scsa: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
