"""Ext between formal complexes on CG.

For X with terms X_i (level a_i, degree p_i) and Y with terms Y_j (level
b_j, degree s_j) the filtration by level gives a spectral sequence whose
E1 page holds Ext^q(X_i, Y_j) at filtration P = b_j - a_i and total degree
q - p_i + s_j.  As for a single bundle, the answer is trusted only when
no potential differential connects two nonzero entries.

Routes tried in order:

* ``direct``    single atoms on both sides, handled by ``cg_ext``;
* ``complex``   the double-complex page, over every presentation
                listed in the rewrite table;
* ``split``     the same page with only one side cut into terms; each
                piece is computed by the full engine, so mutation
                identities apply to the side kept whole;
* ``mutation``  exact identities for mutation objects, e.g.
                Ext(X, L_E G) = Ext(X, G) whenever Ext(X, E) = 0;
* ``serre``     Ext^i(X, Y) = Ext^{8-i}(Y, X(-4))^dual.
"""
from __future__ import annotations

import threading
from typing import Optional

from ..cg import CG, CohomologyResult, E1Page, cg_ext
from ..weights import GradedRep
from .complexes import FormalComplex, euler
from .presets import rewrite_presentations

MAX_DEPTH = 12
_IN_PROGRESS = object()


class ExtEngine:
    """Memoizing Ext calculator; one instance may be shared across threads."""

    def __init__(self):
        self._cache: dict = {}
        self._lock = threading.RLock()

    def ext(self, X: FormalComplex, Y: FormalComplex) -> CohomologyResult:
        return self._ext(X, Y, True, 0)

    # ------------------------------------------------------------------
    def _ext(self, X, Y, allow_serre: bool, depth: int) -> CohomologyResult:
        key = (X, Y, allow_serre)
        with self._lock:
            hit = self._cache.get(key)
        if hit is _IN_PROGRESS or depth > MAX_DEPTH:
            return self._unknown(X, Y, "cycle")
        if hit is not None:
            return hit
        with self._lock:
            self._cache[key] = _IN_PROGRESS
        try:
            result = self._compute(X, Y, allow_serre, depth)
        except BaseException:
            with self._lock:
                self._cache.pop(key, None)
            raise
        with self._lock:
            self._cache[key] = result
        return result

    def _compute(self, X, Y, allow_serre, depth) -> CohomologyResult:
        if X.is_zero() or Y.is_zero():
            return CohomologyResult.ok(GradedRep.zero(7), "direct")
        first_page: Optional[E1Page] = None
        first_links: list = []

        if X.exact and Y.exact:
            sx, sy = X.single_atom(), Y.single_atom()
            if sx and sy:
                r = cg_ext(sx[1], sy[1])
                if r.determined:
                    shift = sy[0] - sx[0]
                    return CohomologyResult.ok(r.graded.regraded(lambda q: q + shift), r.route, r.pages)

            for i, (px, py) in enumerate(self._presentation_pairs(X, Y)):
                page, ok = self._page(px, py)
                if page is None:
                    continue
                links = page.links()
                if first_page is None:
                    first_page, first_links = page, links
                if not links:
                    route = "complex" if i == 0 else "complex-rewrite"
                    return CohomologyResult.ok(page.abutment(), route, [page])

        reduced = self._mutation_rules(X, Y, allow_serre, depth)
        if reduced is not None:
            return reduced

        split = self._split(X, Y, allow_serre, depth)
        if split is not None:
            return split

        if allow_serre:
            r = self._ext(Y, X.twist(CG.canonical_twist), False, depth + 1)
            if r.determined:
                g = r.graded.regraded(lambda i: CG.dim - i).dual()
                return CohomologyResult.ok(g, "serre+" + r.route, r.pages)

        return CohomologyResult.unknown(
            [first_page] if first_page else [], first_links, euler(X, Y), "complex"
        )

    def _unknown(self, X, Y, route) -> CohomologyResult:
        return CohomologyResult.unknown([], [], euler(X, Y), route)

    def _presentation_pairs(self, X, Y):
        xs = [p for base in X.presentations() for p in rewrite_presentations(base)]
        ys = [p for base in Y.presentations() for p in rewrite_presentations(base)]
        seen = set()
        for px in xs:
            for py in ys:
                if (px, py) not in seen:
                    seen.add((px, py))
                    yield px, py

    def _page(self, X, Y) -> tuple[Optional[E1Page], bool]:
        """Double-complex E1 page; None if some component Ext is itself unknown."""
        d: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}
        for a in X.terms:
            for b in Y.terms:
                r = cg_ext(a.bundle, b.bundle)
                if not r.determined:
                    return None, False
                P = b.level - a.level
                for q, reps in r.graded.as_dict().items():
                    total = q - a.degree + b.degree
                    slot = d.setdefault((P, total - P), {})
                    for w, m in reps.items():
                        slot[w] = slot.get(w, 0) + m
        return E1Page.build(7, d, f"{X.label()} => {Y.label()}"), True

    def _split(self, X, Y, allow_serre, depth) -> Optional[CohomologyResult]:
        for side, whole, cut in (("right", X, Y), ("left", Y, X)):
            if not cut.exact:
                continue
            for pres in (p for base in cut.presentations() for p in rewrite_presentations(base)):
                if len(pres.terms) < 2:
                    continue
                d: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}
                pieces = [(t, a, m) for t in pres.terms for a, m in t.bundle.atoms]
                for t, a, mult in pieces:
                    piece = FormalComplex.of(a)
                    if side == "right":
                        r = self._ext(whole, piece, allow_serre, depth + 1)
                        P, off = t.level, t.degree
                    else:
                        r = self._ext(piece, whole, allow_serre, depth + 1)
                        P, off = -t.level, -t.degree
                    if not r.determined:
                        break
                    for q, reps in r.graded.as_dict().items():
                        slot = d.setdefault((P, q + off - P), {})
                        for w, m in reps.items():
                            slot[w] = slot.get(w, 0) + m * mult
                else:
                    page = E1Page.build(7, d, f"{X.label()} => {Y.label()}")
                    if not page.links():
                        return CohomologyResult.ok(page.abutment(), "split", [page])
        return None

    def _is_zero(self, X, Y, allow_serre, depth) -> bool:
        return self._ext(X, Y, allow_serre, depth + 1).is_zero()

    def _mutation_rules(self, X, Y, allow_serre, depth) -> Optional[CohomologyResult]:
        oy, ox = Y.origin, X.origin
        if oy is not None and oy.kind == "left" and X == oy.through:
            return CohomologyResult.ok(GradedRep.zero(7), "mutation")
        if ox is not None and ox.kind == "right" and Y == ox.through:
            return CohomologyResult.ok(GradedRep.zero(7), "mutation")
        # Y built from G and copies of E: drop E when Ext(X, E) = 0
        if oy is not None and self._is_zero(X, oy.through, allow_serre, depth):
            r = self._ext(X, oy.target, allow_serre, depth + 1)
            if r.determined:
                return r.with_route("mutation>" + r.route)
        # X built from G and copies of E: drop E when Ext(E, Y) = 0
        if ox is not None and self._is_zero(ox.through, Y, allow_serre, depth):
            r = self._ext(ox.target, Y, allow_serre, depth + 1)
            if r.determined:
                return r.with_route("mutation>" + r.route)
        return None


DEFAULT_ENGINE = ExtEngine()


def complex_ext(X: FormalComplex, Y: FormalComplex, engine: ExtEngine | None = None) -> CohomologyResult:
    return (engine or DEFAULT_ENGINE).ext(X, Y)
