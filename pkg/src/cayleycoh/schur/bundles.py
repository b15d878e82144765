"""Schur bundles on Gr(k, n) and formal direct sums of them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ..weights import gl_dimension
from .lr import lr_tensor

DEFAULT_K = 3
DEFAULT_N = 7


def _dominant(w: Iterable[int], length: int, what: str) -> tuple[int, ...]:
    t = tuple(int(x) for x in w)
    if len(t) != length:
        raise ValueError(f"{what} must have length {length}, got {t}")
    if any(t[i] < t[i + 1] for i in range(length - 1)):
        raise ValueError(f"{what} {t} is not non-increasing")
    return t


@dataclass(frozen=True, order=True)
class SchurBundle:
    """Sigma^b U^dual (x) Sigma^c U^perp on Gr(k, n).

    Plucker twists always live in ``b``; ``c`` is never used to absorb
    one.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]
    k: int = DEFAULT_K
    n: int = DEFAULT_N

    def __post_init__(self):
        if not (self.n > self.k >= 1):
            raise ValueError(f"need n > k >= 1, got k={self.k}, n={self.n}")
        object.__setattr__(self, "b", _dominant(self.b, self.k, "b"))
        object.__setattr__(self, "c", _dominant(self.c, self.n - self.k, "c"))

    @classmethod
    def from_b(cls, b, k: int = DEFAULT_K, n: int = DEFAULT_N) -> "SchurBundle":
        return cls(tuple(b), (0,) * (n - k), k, n)

    @classmethod
    def trivial(cls, k: int = DEFAULT_K, n: int = DEFAULT_N) -> "SchurBundle":
        return cls((0,) * k, (0,) * (n - k), k, n)

    @property
    def weight(self) -> tuple[int, ...]:
        """The concatenated GL(n) weight (b | c)."""
        return self.b + self.c

    @property
    def rank(self) -> int:
        return gl_dimension(self.b, self.k) * gl_dimension(self.c, self.n - self.k)

    def __str__(self) -> str:
        return f"S{list(self.b)}U*" + ("" if not any(self.c) else f"*S{list(self.c)}Uperp")


def dualize(s: SchurBundle) -> SchurBundle:
    return SchurBundle(
        tuple(-x for x in reversed(s.b)), tuple(-x for x in reversed(s.c)), s.k, s.n
    )


def twist(s: SchurBundle, t: int) -> SchurBundle:
    return SchurBundle(tuple(x + t for x in s.b), s.c, s.k, s.n)


def tensor_atoms(s: SchurBundle, u: SchurBundle) -> dict[SchurBundle, int]:
    if (s.k, s.n) != (u.k, u.n):
        raise ValueError("bundles live on different Grassmannians")
    out: dict[SchurBundle, int] = {}
    bs = lr_tensor(s.b, u.b, s.k)
    cs = lr_tensor(s.c, u.c, s.n - s.k)
    for b, mb in bs.items():
        for c, mc in cs.items():
            atom = SchurBundle(b, c, s.k, s.n)
            out[atom] = out.get(atom, 0) + mb * mc
    return out


@dataclass(frozen=True)
class BundleSum:
    """A formal direct sum with merged multiplicities; empty means zero."""

    atoms: tuple[tuple[SchurBundle, int], ...] = ()

    def __post_init__(self):
        merged: dict[SchurBundle, int] = {}
        for a, m in self.atoms:
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                merged[a] = merged.get(a, 0) + m
        grids = {(a.k, a.n) for a in merged}
        if len(grids) > 1:
            raise ValueError("atoms live on different Grassmannians")
        object.__setattr__(self, "atoms", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, *atoms: SchurBundle) -> "BundleSum":
        return cls(tuple((a, 1) for a in atoms))

    @classmethod
    def from_dict(cls, d: dict[SchurBundle, int]) -> "BundleSum":
        return cls(tuple(d.items()))

    def __iter__(self) -> Iterator[tuple[SchurBundle, int]]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def is_zero(self) -> bool:
        return not self.atoms

    @property
    def rank(self) -> int:
        return sum(a.rank * m for a, m in self.atoms)

    def __add__(self, other: "BundleSum") -> "BundleSum":
        return BundleSum(self.atoms + other.atoms)

    def scaled(self, m: int) -> "BundleSum":
        return BundleSum(tuple((a, k * m) for a, k in self.atoms))

    def __mul__(self, other: "BundleSum") -> "BundleSum":
        out: dict[SchurBundle, int] = {}
        for a, ma in self.atoms:
            for b, mb in other.atoms:
                for c, mc in tensor_atoms(a, b).items():
                    out[c] = out.get(c, 0) + ma * mb * mc
        return BundleSum.from_dict(out)

    def twisted(self, t: int) -> "BundleSum":
        return BundleSum(tuple((twist(a, t), m) for a, m in self.atoms))

    def dual(self) -> "BundleSum":
        return BundleSum(tuple((dualize(a), m) for a, m in self.atoms))

    def __str__(self) -> str:
        if not self.atoms:
            return "0"
        return " + ".join((f"{m}*" if m > 1 else "") + str(a) for a, m in self.atoms)


def as_sum(x: SchurBundle | BundleSum) -> BundleSum:
    return x if isinstance(x, BundleSum) else BundleSum.of(x)
