"""Exact rank and kernel over QQ (thin wrapper over sympy's DomainMatrix)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = list[list[Fraction]]


def _dm(rows: Sequence[Sequence]) -> DomainMatrix:
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    data = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not len(rows[0]):
        return 0
    return _dm(rows).rank()


def kernel(rows: Sequence[Sequence]) -> Matrix:
    """Basis of {x : rows . x = 0}, as a list of row vectors."""
    ns = _dm(rows).nullspace()
    return [[_frac(x) for x in r] for r in ns.to_list()] if ns.shape[0] else []


def solve_in_span(basis: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = v, or None."""
    cols = [list(b) for b in basis]
    n = len(v)
    aug = [[cols[j][i] for j in range(len(cols))] + [-Fraction(v[i])] for i in range(n)]
    for k in kernel(aug):
        if k[-1] != 0:
            return [x / k[-1] for x in k[:-1]]
    return None


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in zip(*m)]
