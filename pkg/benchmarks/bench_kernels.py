"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--sizes 128 256 512] [--repeat 3]

Both backends are imported directly, so the SCSA_DISABLE_NUMBA flag does not
matter here. The first numba call (compilation or cache load) is excluded.
"""

import argparse
import timeit

import numpy as np

from scsa.kernels import _numba, _numpy


def cases(m, rng):
    dx = 15.0 / (m - 1)
    b = rng.standard_normal((m, m))
    a = np.ascontiguousarray((b + b.T) / 2)
    psi = np.ascontiguousarray(rng.standard_normal((m, 40)))
    w = rng.random(40)

    def eig(mod):
        d, e, q = mod.tridiagonalize(a)
        return mod.tql_implicit(d, e, q, 100 * m)

    return {
        "d2_matrix": lambda mod: mod.d2_matrix(m, dx),
        "householder+ql": eig,
        "weighted_square_sum": lambda mod: mod.weighted_square_sum(psi, w),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[128, 256, 512])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    rng = np.random.default_rng(0)

    print(f"{'kernel':<22}{'M':>6}{'numpy [ms]':>14}{'numba [ms]':>14}{'speedup':>10}")
    for m in args.sizes:
        for name, fn in cases(m, rng).items():
            fn(_numba)  # warm-up
            t_np = min(timeit.repeat(lambda: fn(_numpy), number=1, repeat=args.repeat))
            t_nb = min(timeit.repeat(lambda: fn(_numba), number=1, repeat=args.repeat))
            print(f"{name:<22}{m:>6}{t_np * 1e3:>14.2f}{t_nb * 1e3:>14.2f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
