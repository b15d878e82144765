"""Veronese and Segre quadric-rank correspondences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import kernel, rank

# S^2 U3 coordinates: m11, m22, m33, m12, m13, m23
SYM_INDEX = ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))
WEDGE3 = tuple(combinations(range(3), 2))  # x1^x2, x1^x3, x2^x3
WEDGE4 = tuple(combinations(range(4), 2))  # y1^y2, ..., y3^y4


class GenericityError(ValueError):
    """The image plane of the Segre input lies in the Pluecker quadric."""


@dataclass(frozen=True)
class QuadricReport:
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    kernel: tuple[tuple[Fraction, ...], ...]


def _report(m) -> QuadricReport:
    return QuadricReport(tuple(tuple(r) for r in m), rank(m), tuple(tuple(k) for k in kernel(m)))


def _polarize(quad: dict[tuple[int, int], Fraction], n: int) -> list[list[Fraction]]:
    """Symmetric Gram matrix of sum quad[i, j] z_i z_j (i <= j)."""
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in quad.items():
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def _add(quad, i, j, c):
    if i > j:
        i, j = j, i
    quad[i, j] = quad.get((i, j), Fraction(0)) + Fraction(c)


def _sym_coord(i: int, j: int) -> int:
    return SYM_INDEX.index((min(i, j), max(i, j)))


def veronese_quadric(f: Sequence[Sequence]) -> QuadricReport:
    """Q_f(m) = tr(adj(m) f) on S^2 U3, m symmetric.

    Coordinates follow SYM_INDEX; u u^T has coordinates (u1^2, u2^2, u3^2,
    u1 u2, u1 u3, u2 u3), so the off-diagonal coordinate is the matrix entry.
    """
    f = [[Fraction(x) for x in r] for r in f]
    if any(f[i][j] != f[j][i] for i in range(3) for j in range(3)):
        raise ValueError("f must be symmetric")
    quad: dict[tuple[int, int], Fraction] = {}
    # adj(m)[j][i] = (-1)^(i+j) * minor(i, j); tr(adj(m) f) = sum adj[j][i] f[i][j]
    for i in range(3):
        for j in range(3):
            if f[i][j] == 0:
                continue
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            sign = -1 if (i + j) % 2 else 1
            (r1, r2), (c1, c2) = rows, cols
            _add(quad, _sym_coord(r1, c1), _sym_coord(r2, c2), sign * f[i][j])
            _add(quad, _sym_coord(r1, c2), _sym_coord(r2, c1), -sign * f[i][j])
    return _report(_polarize(quad, 6))


def segre_quadric(s: Sequence[Sequence]) -> QuadricReport:
    """Quadric on U3 (x) U4 from a 3 x 6 array over WEDGE3 x WEDGE4.

    (x_m1 ^ x_m2) (x) (y_n1 ^ y_n2) -> z_m1n1 z_m2n2 - z_m1n2 z_m2n1, with
    z_mn at coordinate 4 m + n.
    """
    quad: dict[tuple[int, int], Fraction] = {}
    for a, (m1, m2) in enumerate(WEDGE3):
        for b, (n1, n2) in enumerate(WEDGE4):
            c = Fraction(s[a][b])
            if c == 0:
                continue
            _add(quad, 4 * m1 + n1, 4 * m2 + n2, c)
            _add(quad, 4 * m1 + n2, 4 * m2 + n1, -c)
    return _report(_polarize(quad, 12))


def _plucker(p: Sequence[Fraction], r: Sequence[Fraction]) -> Fraction:
    """p ^ r in Lambda^4 U4^dual against y1^y2^y3^y4."""
    # y12^y34 = +, y13^y24 = -, y14^y23 = +
    idx = {k: i for i, k in enumerate(WEDGE4)}
    pairs = (((0, 1), (2, 3), 1), ((0, 2), (1, 3), -1), ((0, 3), (1, 2), 1))
    tot = Fraction(0)
    for a, b, sg in pairs:
        tot += sg * (p[idx[a]] * r[idx[b]] + p[idx[b]] * r[idx[a]])
    return tot


def segre_conic(s: Sequence[Sequence]) -> QuadricReport:
    """C(w, w') = S(w) ^ S(w') on Lambda^2 U3, volume y1^y2^y3^y4 on U4.

    The matrix depends on the volume; its rank does not.
    """
    rows = [[Fraction(x) for x in r] for r in s]
    m = [[_plucker(rows[a], rows[b]) / 2 for b in range(3)] for a in range(3)]
    return _report(m)


def segre_check(s: Sequence[Sequence]) -> tuple[QuadricReport, QuadricReport]:
    """Conic and quadric; raises GenericityError when the conic vanishes."""
    conic = segre_conic(s)
    if conic.rank == 0:
        raise GenericityError("the image of Lambda^2 U3 lies in the Pluecker quadric")
    return conic, segre_quadric(s)
