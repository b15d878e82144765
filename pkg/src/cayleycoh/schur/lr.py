"""Littlewood-Richardson decomposition for GL(m), with negative weights.

The counting kernel is compiled when the extension is available and falls
back to the pure-Python implementation otherwise.  Set
``CAYLEYCOH_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from functools import lru_cache

from . import _lr_py

if os.environ.get("CAYLEYCOH_PURE_PYTHON"):
    _kernel = _lr_py.lr_coefficients
    KERNEL = "python"
else:
    try:
        from . import _lr  # type: ignore[attr-defined]

        _kernel = _lr.lr_coefficients
        KERNEL = "cython"
    except ImportError:  # extension not built
        _kernel = _lr_py.lr_coefficients
        KERNEL = "python"


def _pad(w, m):
    w = tuple(int(x) for x in w)
    if len(w) > m:
        raise ValueError(f"weight {w} longer than rank {m}")
    if len(w) < m:
        if w and w[-1] < 0:
            raise ValueError(f"cannot zero-pad {w}: negative tail")
        w = w + (0,) * (m - len(w))
    if any(w[i] < w[i + 1] for i in range(m - 1)):
        raise ValueError(f"weight {w} is not dominant")
    return w


@lru_cache(maxsize=None)
def _lr_cached(lam, mu, m):
    s, t = lam[-1], mu[-1]
    raw = _kernel([x - s for x in lam], [x - t for x in mu], m)
    return tuple(sorted((tuple(x + s + t for x in nu), c) for nu, c in raw.items()))


def lr_tensor(lam, mu, m: int) -> dict[tuple[int, ...], int]:
    """Decompose Sigma^lam (x) Sigma^mu for GL(m) into irreducibles."""
    return dict(_lr_cached(_pad(lam, m), _pad(mu, m), m))
