"""Formal complexes of Schur atoms (twisted complexes without maps).

A complex is a list of terms, each a bundle placed in cohomological
degree ``degree`` and in filtration level ``level``.  Components of the
(never materialized) differential only go from lower to higher level.
For an ordinary complex level and degree coincide up to an offset.  They
are kept apart because the cone of a map out of a complex needs the
target after every source term, whatever its degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..cg import euler_char
from ..schur.bundles import BundleSum, SchurBundle, as_sum
from ..schur.character import Character, character


@dataclass(frozen=True, order=True)
class Term:
    level: int
    degree: int
    bundle: BundleSum


@dataclass(frozen=True)
class Origin:
    """How a mutation object was built: kind is "left" or "right"."""

    kind: str
    through: "FormalComplex"
    target: "FormalComplex"


@dataclass(frozen=True)
class FormalComplex:
    terms: tuple[Term, ...]
    name: str = field(default="", compare=False)
    alternatives: tuple["FormalComplex", ...] = ()
    origin: Origin | None = None
    exact: bool = True  # False: terms only represent the K-class

    def __post_init__(self):
        merged: dict[tuple[int, int], BundleSum] = {}
        for t in self.terms:
            key = (t.level, t.degree)
            merged[key] = merged.get(key, BundleSum()) + t.bundle
        terms = tuple(Term(l, d, b) for (l, d), b in sorted(merged.items()) if not b.is_zero())
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.terms, self.alternatives, self.origin, self.exact))
            object.__setattr__(self, "_hash", h)
        return h

    # construction ---------------------------------------------------
    @classmethod
    def of(cls, x: SchurBundle | BundleSum, name: str = "") -> "FormalComplex":
        return cls((Term(0, 0, as_sum(x)),), name)

    @classmethod
    def from_degrees(cls, pieces, name: str = "") -> "FormalComplex":
        """Ordinary complex from (degree, bundle) pairs; level = order."""
        pieces = sorted(pieces, key=lambda p: p[0])
        return cls(tuple(Term(i, d, as_sum(b)) for i, (d, b) in enumerate(pieces)), name)

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def single_atom(self) -> tuple[int, BundleSum] | None:
        if len(self.terms) == 1:
            return self.terms[0].degree, self.terms[0].bundle
        return None

    @property
    def max_level(self) -> int:
        return max((t.level for t in self.terms), default=-1)

    def label(self) -> str:
        return self.name or " -> ".join(f"[{t.degree}]{t.bundle}" for t in self.terms)

    def __str__(self) -> str:
        return self.label()

    def presentations(self) -> list["FormalComplex"]:
        out = [self] if self.exact else []
        out.extend(a for a in self.alternatives if a.exact)
        return out

    # operations -------------------------------------------------------
    def renamed(self, name: str) -> "FormalComplex":
        return FormalComplex(self.terms, name, self.alternatives, self.origin, self.exact)

    def shift(self, m: int) -> "FormalComplex":
        """X[m]: the term in degree p moves to p - m."""
        if m == 0:
            return self
        return FormalComplex(
            tuple(Term(t.level, t.degree - m, t.bundle) for t in self.terms),
            _suffix(self.name, f"[{m}]"),
            tuple(a.shift(m) for a in self.alternatives),
            None if self.origin is None else Origin(self.origin.kind, self.origin.through, self.origin.target.shift(m)),
            self.exact,
        )

    def twist(self, t: int) -> "FormalComplex":
        if t == 0:
            return self
        return FormalComplex(
            tuple(Term(x.level, x.degree, x.bundle.twisted(t)) for x in self.terms),
            _suffix(self.name, f"({t})"),
            tuple(a.twist(t) for a in self.alternatives),
            None
            if self.origin is None
            else Origin(self.origin.kind, self.origin.through.twist(t), self.origin.target.twist(t)),
            self.exact,
        )

    def tensor(self, other: "FormalComplex") -> "FormalComplex":
        if self.is_zero() or other.is_zero():
            return FormalComplex(())
        span = other.max_level + 1
        terms = tuple(
            Term(a.level * span + b.level, a.degree + b.degree, a.bundle * b.bundle)
            for a in self.terms
            for b in other.terms
        )
        alts = tuple(x.tensor(other) for x in self.alternatives if x.exact)
        return FormalComplex(terms, "", alts, None, self.exact and other.exact)

    def __add__(self, other: "FormalComplex") -> "FormalComplex":
        return FormalComplex(self.terms + other.terms, "", (), None, self.exact and other.exact)

    def dual(self) -> "FormalComplex":
        top = self.max_level
        return FormalComplex(
            tuple(Term(top - t.level, -t.degree, t.bundle.dual()) for t in self.terms),
            _suffix(self.name, "^v"),
            tuple(a.dual() for a in self.alternatives),
            None,
            self.exact,
        )

    def substitute(self, index: int, replacement: "FormalComplex") -> "FormalComplex":
        """Replace term ``index`` (a single summand) by a complex resolving it."""
        t = self.terms[index]
        width = replacement.max_level + 1
        terms = []
        for j, s in enumerate(self.terms):
            if j == index:
                continue
            lvl = s.level if s.level < t.level else s.level + width - 1
            if s.level == t.level:
                lvl = t.level  # parallel summands keep their level
            terms.append(Term(lvl, s.degree, s.bundle))
        for r in replacement.terms:
            terms.append(Term(t.level + r.level, t.degree + r.degree, r.bundle))
        return FormalComplex(tuple(terms), self.name, (), None, True)

    # invariants ---------------------------------------------------------
    def character(self, n: int = 7) -> Character:
        total = Character(n)
        for t in self.terms:
            c = character(t.bundle, n)
            total = total + (c if t.degree % 2 == 0 else -c)
        return total


def cone(source: FormalComplex, target: FormalComplex, name: str = "") -> FormalComplex:
    """Cone(f)^p = source^{p+1} + target^p; target placed after source."""
    offset = source.max_level + 1
    terms = tuple(Term(t.level, t.degree - 1, t.bundle) for t in source.terms) + tuple(
        Term(t.level + offset, t.degree, t.bundle) for t in target.terms
    )
    return FormalComplex(terms, name, (), None, source.exact and target.exact)


def euler(X: FormalComplex, Y: FormalComplex) -> int:
    """chi(X, Y) = sum of (-1)^(i) dim Ext^i; defined for K-class-only objects too."""
    total = 0
    for a in X.terms:
        for b in Y.terms:
            total += (-1 if (a.degree + b.degree) % 2 else 1) * euler_char(a.bundle, b.bundle)
    return total


def _suffix(name: str, s: str) -> str:
    return f"{name}{s}" if name else ""
