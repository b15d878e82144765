"""Borel-Bott-Weil on Gr(k, n)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .schur.bundles import DEFAULT_K, DEFAULT_N, BundleSum, SchurBundle, as_sum
from .weights import GradedRep, rho, sort_to_dominant


@dataclass(frozen=True)
class GrassmannianSpec:
    k: int = DEFAULT_K
    n: int = DEFAULT_N

    def __post_init__(self):
        if not (self.n > self.k >= 1):
            raise ValueError(f"need n > k >= 1, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def canonical_twist(self) -> int:
        """K_Gr = O(-n)."""
        return -self.n


GR37 = GrassmannianSpec(3, 7)


@lru_cache(maxsize=None)
def bbw_weight(s: SchurBundle) -> tuple[int, tuple[int, ...]] | None:
    """(degree, GL(n) highest weight) of H^*(s), or None when it vanishes."""
    r = rho(s.n)
    a = [x + y for x, y in zip(s.weight, r)]
    srt, inversions, repeats = sort_to_dominant(a)
    if repeats:
        return None
    return inversions, tuple(x - y for x, y in zip(srt, r))


def bbw_cohomology(g: GrassmannianSpec, s: SchurBundle) -> GradedRep:
    if (s.k, s.n) != (g.k, g.n):
        raise ValueError("bundle and Grassmannian do not match")
    hit = bbw_weight(s)
    if hit is None:
        return GradedRep.zero(g.n)
    deg, w = hit
    return GradedRep.from_dict(g.n, {deg: {w: 1}})


def bulk_cohomology(g: GrassmannianSpec, s: SchurBundle | BundleSum) -> GradedRep:
    out: dict[int, dict[tuple[int, ...], int]] = {}
    for atom, m in as_sum(s):
        if (atom.k, atom.n) != (g.k, g.n):
            raise ValueError("bundle and Grassmannian do not match")
        hit = bbw_weight(atom)
        if hit is None:
            continue
        deg, w = hit
        slot = out.setdefault(deg, {})
        slot[w] = slot.get(w, 0) + m
    return GradedRep.from_dict(g.n, out)
