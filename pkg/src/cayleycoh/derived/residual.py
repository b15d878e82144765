"""The residual category of the rectangular Lefschetz part on CG.

With E = (O, U^dual, W2 U^dual) the three objects are

    A = L_E R,   B = S21 U^dual(-1),   C = R(-1),

and tau = L_E(- (x) O(1)) is expected to act as C -> A -> C (up to shift)
and to fix B up to shift.

A is built with the K-class fallback: one Ext along the way,
Ext(O, L_{U*} W2Q), is linked on every page we can write down.  Cells
that need the exact terms of A are then reported with the page built
from its K-class terms, and are left undecided.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..cg import CohomologyResult
from .complexes import FormalComplex, euler
from .ext import ExtEngine, complex_ext
from .mutations import mutate_left_block
from .presets import SIGMA21, block_E, cg15, obj, preset_R

LABELS = ("L_E R", "S21(-1)", "R(-1)")


@dataclass
class ResidualReport:
    labels: tuple[str, ...]
    exact: dict[str, bool]
    cells: dict[tuple[int, int], CohomologyResult]
    kclass_pages: dict[tuple[int, int], CohomologyResult]
    euler: dict[tuple[int, int], int]
    tau: dict[str, tuple[str, int]] = field(default_factory=dict)

    def diagonal_ok(self) -> dict[int, bool | None]:
        out = {}
        for i in range(3):
            r = self.cells[i, i]
            out[i] = r.is_k() if r.determined else None
        return out

    def cross(self) -> dict[tuple[int, int], bool | None]:
        """True for a determined zero, False for a determined nonzero."""
        return {
            (i, j): (r.is_zero() if r.determined else None)
            for (i, j), r in self.cells.items()
            if i != j
        }

    @property
    def determined_cross(self) -> int:
        return sum(v is True for v in self.cross().values())

    @property
    def euler_orthogonal(self) -> bool:
        return all(v == 0 for (i, j), v in self.euler.items() if i != j)

    @property
    def tau_ok(self) -> bool:
        return bool(self.tau) and all(target != "?" for target, _ in self.tau.values())

    @property
    def violations(self) -> list[tuple[int, int]]:
        bad = [(i, j) for (i, j), v in self.cross().items() if v is False]
        bad += [(i, i) for i, v in self.diagonal_ok().items() if v is False]
        return sorted(bad)

    @property
    def undecided(self) -> list[tuple[int, int]]:
        return sorted(k for k, r in self.cells.items() if not r.determined)


def kclass_vector(X: FormalComplex, basis: list[FormalComplex] | None = None) -> tuple[int, ...]:
    """chi(X, E_i) for the fifteen collection objects.

    The Euler matrix of the collection is unimodular, so this vector pins
    down the numerical K-class of X.
    """
    basis = cg15() if basis is None else basis
    return tuple(euler(X, E) for E in basis)


def _match(v, targets: dict[str, tuple[int, ...]]) -> tuple[str, int]:
    for name, w in targets.items():
        if v == w:
            return name, 1
        if v == tuple(-x for x in w):
            return name, -1
    return "?", 0


def _as_exact(X: FormalComplex) -> FormalComplex:
    return FormalComplex(X.terms, X.name, (), None, True)


def residual_objects(engine: ExtEngine | None = None) -> tuple[FormalComplex, FormalComplex, FormalComplex]:
    R = preset_R()
    A = mutate_left_block(block_E(0), R, engine, allow_kclass=True).renamed(LABELS[0])
    B = obj(SIGMA21, "S21").twist(-1).renamed(LABELS[1])
    C = R.twist(-1).renamed(LABELS[2])
    return A, B, C


def residual_check(engine: ExtEngine | None = None) -> ResidualReport:
    engine = engine or ExtEngine()
    objs = residual_objects(engine)
    cells, pages, chis = {}, {}, {}
    for i, X in enumerate(objs):
        for j, Y in enumerate(objs):
            r = complex_ext(X, Y, engine)
            cells[i, j] = r
            chis[i, j] = euler(X, Y)
            if not r.determined:
                # page of the K-class terms: shows where the obstruction sits
                pages[i, j] = ExtEngine().ext(_as_exact(X), _as_exact(Y))

    E = block_E(0)
    targets = {LABELS[k]: kclass_vector(o) for k, o in enumerate(objs)}
    tau = {}
    for k, o in enumerate(objs):
        image = mutate_left_block(E, o.twist(1), engine, allow_kclass=True)
        tau[LABELS[k]] = _match(kclass_vector(image), targets)
    return ResidualReport(LABELS, {LABELS[k]: o.exact for k, o in enumerate(objs)}, cells, pages, chis, tau)
