"""Sparse exact multivectors and forms on a fixed 7-dimensional basis."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

DIM = 7


def _sort_sign(idx: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


@dataclass(frozen=True)
class MultiVector:
    """Element of Lambda^p V (``covariant`` False) or Lambda^p V^dual (True)."""

    degree: int
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)
    covariant: bool = False

    def __post_init__(self):
        clean: dict[tuple[int, ...], Fraction] = {}
        for k, v in dict(self.coeffs).items():
            if len(k) != self.degree:
                raise ValueError(f"index {k} has wrong length for degree {self.degree}")
            s, key = _sort_sign(k)
            if s == 0 or v == 0:
                continue
            clean[key] = clean.get(key, Fraction(0)) + s * Fraction(v)
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v != 0})

    @classmethod
    def basis(cls, *idx: int, covariant: bool = False, coeff=1) -> "MultiVector":
        return cls(len(idx), {tuple(idx): Fraction(coeff)}, covariant)

    @classmethod
    def vector(cls, coords, covariant: bool = False) -> "MultiVector":
        return cls(1, {(i,): Fraction(c) for i, c in enumerate(coords)}, covariant)

    @classmethod
    def scalar(cls, c, covariant: bool = False) -> "MultiVector":
        return cls(0, {(): Fraction(c)}, covariant)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coords(self) -> list[Fraction]:
        """Dense coordinates in lexicographic order of sorted index tuples."""
        return [self.coeffs.get(k, Fraction(0)) for k in combinations(range(DIM), self.degree)]

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._check(other)
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            d[k] = d.get(k, Fraction(0)) + v
        return MultiVector(self.degree, d, self.covariant)

    def __neg__(self) -> "MultiVector":
        return self.scaled(-1)

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + (-other)

    def scaled(self, c) -> "MultiVector":
        c = Fraction(c)
        return MultiVector(self.degree, {k: c * v for k, v in self.coeffs.items()}, self.covariant)

    def __rmul__(self, c) -> "MultiVector":
        return self.scaled(c)

    def _check(self, other):
        if self.degree != other.degree or self.covariant != other.covariant:
            raise ValueError("degree or variance mismatch")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiVector)
            and self.covariant == other.covariant
            and (self.degree == other.degree or (self.is_zero() and other.is_zero()))
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.covariant, tuple(self.coeffs.items())))

    def __str__(self) -> str:
        from .forms import basis_name

        if not self.coeffs:
            return "0"
        parts = []
        for k, v in self.coeffs.items():
            name = "^".join(basis_name(i, self.covariant) for i in k) or "1"
            parts.append(f"{v}*{name}" if v != 1 else name)
        return " + ".join(parts).replace("+ -", "- ")


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    if a.covariant != b.covariant:
        raise ValueError("cannot wedge a vector with a form")
    d: dict[tuple[int, ...], Fraction] = {}
    for ka, va in a.coeffs.items():
        for kb, vb in b.coeffs.items():
            s, key = _sort_sign(ka + kb)
            if s:
                d[key] = d.get(key, Fraction(0)) + s * va * vb
    return MultiVector(a.degree + b.degree, d, a.covariant)


def wedge_all(vs: Iterable[MultiVector]) -> MultiVector:
    vs = list(vs)
    out = MultiVector.scalar(1, vs[0].covariant if vs else False)
    for v in vs:
        out = wedge(out, v)
    return out


def convolve(big: MultiVector, small: MultiVector) -> MultiVector:
    """Contract ``small`` into the first slots of ``big`` (opposite variance).

    e_I with I = J + K (as ordered lists, J first) contracted with e^J gives
    e_K; the basis pairing is the determinant pairing.
    """
    if big.covariant == small.covariant:
        raise ValueError("convolution needs opposite variance")
    if small.degree > big.degree:
        raise ValueError("cannot contract a larger multivector into a smaller one")
    d: dict[tuple[int, ...], Fraction] = {}
    for ki, vi in big.coeffs.items():
        for kj, vj in small.coeffs.items():
            if not set(kj) <= set(ki):
                continue
            rest = tuple(i for i in ki if i not in kj)
            s, _ = _sort_sign(kj + rest)
            # e_I = s * e_J ^ e_rest
            d[rest] = d.get(rest, Fraction(0)) + s * vi * vj
    return MultiVector(big.degree - small.degree, d, big.covariant)
