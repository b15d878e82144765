"""Integer weights of GL(n): dominance, rho shifts, sorting, dimensions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Iterator


def _as_tuple(entries: Iterable[int]) -> tuple[int, ...]:
    t = tuple(int(e) for e in entries)
    if not t:
        raise ValueError("a weight needs at least one entry")
    return t


@dataclass(frozen=True, order=True)
class Weight:
    """An integer vector of fixed length."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        object.__setattr__(self, "entries", _as_tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other: "Weight") -> "Weight":
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Weight") -> "Weight":
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return Weight(a - b for a, b in zip(self, other))

    def shifted(self, t: int) -> "Weight":
        return Weight(a + t for a in self)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.entries)})"


class DominantWeight(Weight):
    """A non-increasing integer vector (a highest weight of GL(n))."""

    def __init__(self, entries: Iterable[int]):
        super().__init__(entries)
        if not self.is_dominant():
            raise ValueError(f"weight {list(self.entries)} is not non-increasing")

    def shifted(self, t: int) -> "DominantWeight":
        return DominantWeight(a + t for a in self)

    def padded(self, n: int) -> "DominantWeight":
        """Append zeros up to length n; only valid when the tail is >= 0."""
        if len(self) > n:
            raise ValueError(f"weight of length {len(self)} exceeds rank {n}")
        if len(self) == n:
            return self
        if self.entries[-1] < 0:
            raise ValueError("cannot zero-pad a weight with negative tail")
        return DominantWeight(self.entries + (0,) * (n - len(self)))

    def dual(self) -> "DominantWeight":
        return DominantWeight(-a for a in reversed(self.entries))


def rho(n: int) -> Weight:
    """(n, n-1, ..., 1)."""
    if n < 1:
        raise ValueError("rank must be positive")
    return Weight(range(n, 0, -1))


def sort_to_dominant(a: Weight | Iterable[int]) -> tuple[Weight, int, bool]:
    """Sort ``a`` into non-increasing order.

    Returns the sorted weight, the number of inversions of the sorting
    permutation, and whether ``a`` has a repeated entry.  With repeats the
    inversion count is that of a stable sort.
    """
    entries = tuple(a)
    inversions = sum(
        1
        for i in range(len(entries))
        for j in range(i + 1, len(entries))
        if entries[i] < entries[j]
    )
    has_repeats = len(set(entries)) != len(entries)
    return Weight(sorted(entries, reverse=True)), inversions, has_repeats


def sorting_permutation(a: Iterable[int]) -> tuple[int, ...]:
    """Stable permutation p with a[p[0]] >= a[p[1]] >= ...."""
    entries = tuple(a)
    return tuple(sorted(range(len(entries)), key=lambda i: -entries[i]))


def permutation_sign(p: tuple[int, ...]) -> int:
    """Sign via cycle decomposition (independent of inversion counting)."""
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def gl_dimension(lam: Weight | Iterable[int], n: int) -> int:
    """Weyl dimension formula for the GL(n) irrep of highest weight ``lam``."""
    entries = list(lam)
    if len(entries) > n:
        raise ValueError(f"weight of length {len(entries)} exceeds rank {n}")
    if len(entries) < n:
        if entries and entries[-1] < 0:
            raise ValueError("cannot zero-pad a weight with negative tail")
        entries += [0] * (n - len(entries))
    if any(entries[i] < entries[i + 1] for i in range(n - 1)):
        raise ValueError("weight is not dominant")
    num = prod(entries[i] - entries[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    value = Fraction(num, den)
    assert value.denominator == 1
    return int(value)


def normalize_sl(w: Weight | Iterable[int]) -> tuple[int, ...]:
    """Representative modulo powers of the determinant (last entry zero)."""
    entries = tuple(w)
    return tuple(a - entries[-1] for a in entries)


@dataclass(frozen=True)
class GradedRep:
    """Graded GL(n)-representation: degree -> {dominant weight: multiplicity}."""

    n: int
    data: tuple[tuple[int, tuple[tuple[tuple[int, ...], int], ...]], ...] = ()

    @classmethod
    def from_dict(cls, n: int, d: dict[int, dict[tuple[int, ...], int]]) -> "GradedRep":
        clean = []
        for deg in sorted(d):
            reps = tuple(sorted((tuple(w), m) for w, m in d[deg].items() if m))
            if any(m < 0 for _, m in reps):
                raise ValueError("negative multiplicity")
            if reps:
                clean.append((deg, reps))
        return cls(n, tuple(clean))

    @classmethod
    def zero(cls, n: int) -> "GradedRep":
        return cls(n, ())

    def as_dict(self) -> dict[int, dict[tuple[int, ...], int]]:
        return {deg: dict(reps) for deg, reps in self.data}

    def is_zero(self) -> bool:
        return not self.data

    def degrees(self) -> list[int]:
        return [deg for deg, _ in self.data]

    def dims(self) -> dict[int, int]:
        return {deg: sum(m * gl_dimension(w, self.n) for w, m in reps) for deg, reps in self.data}

    def euler(self) -> int:
        return sum((-1 if deg % 2 else 1) * d for deg, d in self.dims().items())

    def __add__(self, other: "GradedRep") -> "GradedRep":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        out: dict[int, dict[tuple[int, ...], int]] = {}
        for src in (self, other):
            for deg, reps in src.data:
                slot = out.setdefault(deg, {})
                for w, m in reps:
                    slot[w] = slot.get(w, 0) + m
        return GradedRep.from_dict(self.n, out)

    def scaled(self, m: int) -> "GradedRep":
        if m < 0:
            raise ValueError("negative multiplicity")
        return GradedRep.from_dict(self.n, {d: {w: m * k for w, k in r.items()} for d, r in self.as_dict().items()})

    def regraded(self, f) -> "GradedRep":
        """Apply a degree map ``f``; distinct degrees must stay distinct."""
        out: dict[int, dict[tuple[int, ...], int]] = {}
        for deg, reps in self.data:
            slot = out.setdefault(f(deg), {})
            for w, m in reps:
                slot[w] = slot.get(w, 0) + m
        return GradedRep.from_dict(self.n, out)

    def dual(self) -> "GradedRep":
        return GradedRep.from_dict(
            self.n,
            {d: {tuple(-a for a in reversed(w)): m for w, m in r.items()} for d, r in self.as_dict().items()},
        )

    def __str__(self) -> str:
        if not self.data:
            return "0"
        parts = []
        for deg, reps in self.data:
            body = " + ".join((f"{m}*" if m > 1 else "") + f"S{list(w)}" for w, m in reps)
            parts.append(f"H^{deg}: {body}")
        return "; ".join(parts)
