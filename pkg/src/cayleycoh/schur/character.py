"""Splitting-principle characters as sparse Laurent polynomials.

Variables are x_1..x_k (Chern roots of U) followed by y_1..y_{n-k}
(Chern roots of Q).  So U -> sum x_i, U^dual -> sum 1/x_i, Q -> sum y_j,
U^perp -> sum 1/y_j, and O(1) = det U^dual -> 1/(x_1...x_k).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bundles import DEFAULT_N, BundleSum, SchurBundle, as_sum


@dataclass(frozen=True)
class Character:
    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = ()

    @classmethod
    def from_dict(cls, nvars: int, d: dict[tuple[int, ...], int]) -> "Character":
        return cls(nvars, tuple(sorted((e, c) for e, c in d.items() if c)))

    @classmethod
    def one(cls, nvars: int) -> "Character":
        return cls(nvars, (((0,) * nvars, 1),))

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __add__(self, other: "Character") -> "Character":
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return Character.from_dict(self.nvars, d)

    def __neg__(self) -> "Character":
        return Character(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other: "Character") -> "Character":
        d: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return Character.from_dict(self.nvars, d)

    def scaled(self, m: int) -> "Character":
        return Character.from_dict(self.nvars, {e: m * c for e, c in self.terms})

    def inverted(self) -> "Character":
        return Character.from_dict(self.nvars, {tuple(-a for a in e): c for e, c in self.terms})

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.terms)


def _ssyt(shape: tuple[int, ...], m: int):
    """Yield contents (exponent vectors) of SSYT of ``shape`` with entries < m."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            e = [0] * m
            for v in filling.values():
                e[v] += 1
            yield tuple(e)
            return
        r, c = cells[idx]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, m):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)  # absent when lo >= m (dead branch)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_polynomial(weight: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """s_weight(z_1..z_m) for a dominant weight with possibly negative entries."""
    m = len(weight)
    shift = weight[-1]
    shape = tuple(w - shift for w in weight)
    d: dict[tuple[int, ...], int] = {}
    for e in _ssyt(shape, m):
        e = tuple(a + shift for a in e)
        d[e] = d.get(e, 0) + 1
    return tuple(sorted(d.items()))


def _atom_character(s: SchurBundle) -> Character:
    nvars = s.n
    d: dict[tuple[int, ...], int] = {}
    for ex, cx in schur_polynomial(s.b):
        for ey, cy in schur_polynomial(s.c):
            e = tuple(-a for a in ex) + tuple(-a for a in ey)
            d[e] = d.get(e, 0) + cx * cy
    return Character.from_dict(nvars, d)


def character(x: SchurBundle | BundleSum, n: int = DEFAULT_N) -> Character:
    """Character of an atom or sum; ``n`` only matters for the zero sum."""
    s = as_sum(x)
    nvars = s.atoms[0][0].n if s.atoms else n
    total = Character(nvars)
    for a, m in s:
        total = total + _atom_character(a).scaled(m)
    return total


def trivial_character(n: int, multiplicity: int = 1) -> Character:
    return Character.one(n).scaled(multiplicity)

