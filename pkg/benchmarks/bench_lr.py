"""Compiled versus pure-Python Littlewood-Richardson kernel.

    python benchmarks/bench_lr.py [--repeat N]

Both kernels see the same inputs; results are compared before timing.
"""
from __future__ import annotations

import argparse
import importlib
import itertools
import timeit

from cayleycoh.schur import _lr_py

CASES = {
    "GL(3), |shape| <= 6": [(a, b, 3) for a in itertools.product(range(4), repeat=3) for b in [(2, 1, 0), (3, 3, 1)]
                            if list(a) == sorted(a, reverse=True)],
    "GL(4), Lambda^2 x S21": [((1, 1, 0, 0), (2, 1, 0, 0), 4)] * 20,
    "GL(7), large": [((4, 3, 2, 1, 1, 0, 0), (3, 2, 2, 1, 0, 0, 0), 7), ((5, 4, 2, 2, 1, 1, 0), (4, 2, 1, 0, 0, 0, 0), 7)],
}


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    try:
        compiled = importlib.import_module("cayleycoh.schur._lr").lr_coefficients
    except ImportError:
        raise SystemExit("compiled kernel not built; run pip install -e . --no-build-isolation")
    kernels = {"python": _lr_py.lr_coefficients, "cython": compiled}
    print(f"{'case':<24} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, cases in CASES.items():
        for lam, mu, m in cases:
            assert compiled(list(lam), list(mu), m) == _lr_py.lr_coefficients(list(lam), list(mu), m)
        best = {}
        for kname, k in kernels.items():
            t = timeit.repeat(lambda: [k(list(a), list(b), m) for a, b, m in cases], number=1, repeat=args.repeat)
            best[kname] = min(t) * 1e3
        print(f"{name:<24} {best['python']:>10.2f} {best['cython']:>10.2f} {best['python'] / best['cython']:>7.1f}x")


if __name__ == "__main__":
    main()
