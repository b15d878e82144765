"""Cohomology and Ext on the Cayley Grassmannian CG in Gr(3,7).

CG is the zero locus of a section of U^perp(1), so O_CG has the Koszul
resolution with terms Lambda^l Q(-l), l = 0..4.  For a bundle F on the
ambient space this gives a spectral sequence

    E1^{-l,t} = H^t(Gr, F (x) Lambda^l Q(-l))  =>  H^{t-l}(CG, F).

Differentials are never computed.  A page is trusted only when no two
nonzero entries sit where some d_r could connect them; otherwise the
answer is reported as indeterminate together with the page.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .bbw import GR37, GrassmannianSpec, bbw_weight
from .schur.bundles import BundleSum, SchurBundle, as_sum
from .weights import GradedRep, gl_dimension


@dataclass(frozen=True)
class VarietySpec:
    ambient: GrassmannianSpec = GR37
    section_rank: int = 4
    dim: int = 8
    canonical_twist: int = -4


CG = VarietySpec()

Slot = tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class E1Page:
    """Nonzero E1 entries keyed by (p, q); total degree is p + q.

    Potential differentials go (p, q) -> (p + r, q - r + 1) for r >= 1.
    For a Koszul page p = -l and q = t.
    """

    n: int
    entries: tuple[tuple[tuple[int, int], Slot], ...]
    source: str = ""

    @classmethod
    def build(cls, n: int, d: dict[tuple[int, int], dict[tuple[int, ...], int]], source: str = "") -> "E1Page":
        items = []
        for pos in sorted(d):
            slot = tuple(sorted((w, m) for w, m in d[pos].items() if m))
            if slot:
                items.append((pos, slot))
        return cls(n, tuple(items), source)

    def links(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        out = []
        pos = [p for p, _ in self.entries]
        for a in pos:
            for b in pos:
                r = b[0] - a[0]
                if r >= 1 and b[1] == a[1] - r + 1:
                    out.append((a, b))
        return out

    def abutment(self) -> GradedRep:
        """E1 read as E_infinity (valid only without links)."""
        out: dict[int, dict[tuple[int, ...], int]] = {}
        for (p, q), slot in self.entries:
            bucket = out.setdefault(p + q, {})
            for w, m in slot:
                bucket[w] = bucket.get(w, 0) + m
        return GradedRep.from_dict(self.n, out)

    def euler(self) -> int:
        return sum(
            (-1 if (p + q) % 2 else 1) * m * gl_dimension(w, self.n) for (p, q), slot in self.entries for w, m in slot
        )

    def is_zero(self) -> bool:
        return not self.entries

    def as_dict(self):
        return {pos: dict(slot) for pos, slot in self.entries}


@dataclass(frozen=True)
class CohomologyResult:
    """Either a determined graded representation or an indeterminate page set."""

    determined: bool
    graded: GradedRep | None
    pages: tuple[E1Page, ...] = ()
    links: tuple = ()
    route: str = "direct"
    euler: int = 0
    notes: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def ok(cls, graded: GradedRep, route: str, pages=(), notes=()) -> "CohomologyResult":
        return cls(True, graded, tuple(pages), (), route, graded.euler(), tuple(notes))

    @classmethod
    def unknown(cls, pages, links, euler: int, route: str, notes=()) -> "CohomologyResult":
        return cls(False, None, tuple(pages), tuple(links), route, euler, tuple(notes))

    def is_zero(self) -> bool:
        return self.determined and self.graded.is_zero()

    def is_k(self) -> bool:
        """Exactly one trivial (up to det) class in degree 0."""
        if not self.determined:
            return False
        d = self.graded.as_dict()
        if set(d) != {0} or len(d[0]) != 1:
            return False
        (w, m), = d[0].items()
        return m == 1 and len(set(w)) == 1

    def dims(self) -> dict[int, int] | None:
        return self.graded.dims() if self.determined else None

    def with_route(self, route: str) -> "CohomologyResult":
        return CohomologyResult(
            self.determined, self.graded, self.pages, self.links, route, self.euler, self.notes
        )

    def __str__(self) -> str:
        if self.determined:
            return f"{self.graded} [{self.route}]"
        return f"indeterminate (chi={self.euler}, {len(self.links)} linked pairs) [{self.route}]"


def koszul_twist(l: int, k: int = 3, n: int = 7) -> SchurBundle:
    """Lambda^l Q(-l)."""
    return SchurBundle((-l,) * k, (0,) * (n - k - l) + (-1,) * l, k, n)


def koszul_terms(F: SchurBundle | BundleSum, variety: VarietySpec = CG) -> list[BundleSum]:
    g = variety.ambient
    F = as_sum(F)
    return [F * BundleSum.of(koszul_twist(l, g.k, g.n)) for l in range(variety.section_rank + 1)]


@lru_cache(maxsize=None)
def atom_page(s: SchurBundle) -> E1Page:
    d: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}
    for l, term in enumerate(koszul_terms(s)):
        for atom, m in term:
            hit = bbw_weight(atom)
            if hit is None:
                continue
            t, w = hit
            slot = d.setdefault((-l, t), {})
            slot[w] = slot.get(w, 0) + m
    return E1Page.build(s.n, d, str(s))


@lru_cache(maxsize=None)
def _atom_cohomology(s: SchurBundle) -> CohomologyResult:
    page = atom_page(s)
    links = page.links()
    if links:
        return CohomologyResult.unknown([page], links, page.euler(), "direct")
    return CohomologyResult.ok(page.abutment(), "direct", [page])


def _dual_atom_for_serre(s: SchurBundle, variety: VarietySpec) -> SchurBundle:
    from .schur.bundles import dualize, twist

    return twist(dualize(s), variety.canonical_twist)


def _combine(parts: Iterable[tuple[CohomologyResult, int]], n: int, route: str) -> CohomologyResult:
    parts = list(parts)
    if all(r.determined for r, _ in parts):
        total = GradedRep.zero(n)
        for r, m in parts:
            total = total + r.graded.scaled(m)
        return CohomologyResult.ok(total, route, [p for r, _ in parts for p in r.pages])
    pages = [p for r, _ in parts for p in r.pages]
    links = [lk for r, _ in parts for lk in r.links]
    euler = sum(r.euler * m for r, m in parts)
    return CohomologyResult.unknown(pages, links, euler, route)


def cg_cohomology(F: SchurBundle | BundleSum) -> CohomologyResult:
    """H^*(CG, F) by the Koszul spectral sequence, atom by atom.

    A direct sum splits the spectral sequence, so linkage is tested on
    each atom's page separately.
    """
    F = as_sum(F)
    n = F.atoms[0][0].n if F.atoms else 7
    return _combine(((_atom_cohomology(a), m) for a, m in F), n, "direct")


def _serre_atom(s: SchurBundle, variety: VarietySpec = CG) -> CohomologyResult:
    """H^i(F) = H^{dim-i}(F^dual (x) K)^dual."""
    r = _atom_cohomology(_dual_atom_for_serre(s, variety))
    if not r.determined:
        return CohomologyResult.unknown(r.pages, r.links, r.euler, "serre")
    g = r.graded.regraded(lambda i: variety.dim - i).dual()
    return CohomologyResult.ok(g, "serre", r.pages)


def hom_bundle(A: SchurBundle | BundleSum, B: SchurBundle | BundleSum) -> BundleSum:
    return as_sum(A).dual() * as_sum(B)


def serre_dual(A: SchurBundle | BundleSum, B: SchurBundle | BundleSum, variety: VarietySpec = CG) -> CohomologyResult:
    """Ext^i(A, B) computed as Ext^{dim-i}(B, A (x) K)^dual."""
    A, B = as_sum(A), as_sum(B)
    r = cg_cohomology(hom_bundle(B, A.twisted(variety.canonical_twist)))
    if not r.determined:
        return CohomologyResult.unknown(r.pages, r.links, r.euler, "serre")
    return CohomologyResult.ok(r.graded.regraded(lambda i: variety.dim - i).dual(), "serre", r.pages)


def cg_ext(A: SchurBundle | BundleSum, B: SchurBundle | BundleSum) -> CohomologyResult:
    """Ext^*(A, B) on CG.

    Routes, in order: direct Koszul page; Serre duality on the whole
    Hom bundle; per-atom choice between the two ("mixed").
    """
    F = hom_bundle(A, B)
    direct = cg_cohomology(F)
    if direct.determined:
        return direct
    serre = serre_dual(A, B)
    if serre.determined:
        return serre
    n = F.atoms[0][0].n
    parts = []
    for a, m in F:
        r = _atom_cohomology(a)
        if not r.determined:
            s = _serre_atom(a)
            if s.determined:
                r = s
        parts.append((r, m))
    mixed = _combine(parts, n, "mixed")
    if mixed.determined:
        return mixed
    return CohomologyResult.unknown(direct.pages, direct.links, direct.euler, "direct")


def euler_char(A: SchurBundle | BundleSum, B: SchurBundle | BundleSum) -> int:
    """chi(A, B); read off the E1 pages, so it never needs determinacy."""
    return sum(m * atom_page(a).euler() for a, m in hom_bundle(A, B))


def chi_sequence_check(
    terms: Sequence[tuple[int, SchurBundle | BundleSum]] | Sequence[SchurBundle | BundleSum],
    probes: Sequence[SchurBundle | BundleSum] | None = None,
) -> bool:
    """True iff sum_i sign_i chi(T, term_i) = 0 for every probe T.

    ``terms`` is either a list of (sign, bundle) pairs or a plain list read
    with alternating signs starting at +1.
    """
    signed = _signed(terms)
    probes = default_probes() if probes is None else probes
    return all(sum(s * euler_char(T, X) for s, X in signed) == 0 for T in probes)


def _signed(terms) -> list[tuple[int, BundleSum]]:
    out = []
    for i, t in enumerate(terms):
        if isinstance(t, tuple) and len(t) == 2 and isinstance(t[0], int):
            out.append((t[0], as_sum(t[1])))
        else:
            out.append((-1 if i % 2 else 1, as_sum(t)))
    return out


def default_probes() -> list[BundleSum]:
    """O, U*, W2 U*, Sym2 U*, S{2,1}U* and their O(1) twists."""
    base = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)]
    out = [BundleSum.of(SchurBundle.from_b(b)) for b in base]
    return out + [x.twisted(1) for x in out]
