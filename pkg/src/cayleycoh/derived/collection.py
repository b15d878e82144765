"""Exceptional-collection and Lefschetz-structure checks."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..cg import CohomologyResult
from .complexes import FormalComplex, euler
from .ext import ExtEngine, complex_ext

EXCEPTIONAL = "EXCEPTIONAL"
NOT_EXCEPTIONAL = "NOT_EXCEPTIONAL"
UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True)
class Cell:
    i: int
    j: int
    kind: str  # "diagonal", "required-zero" or "free"
    result: CohomologyResult

    @property
    def ok(self) -> bool | None:
        """True/False for a decided requirement, None if undecided or free."""
        if self.kind == "free":
            return None
        if not self.result.determined:
            # chi alone can refute: zero needs chi = 0, k needs chi = 1
            if self.result.euler != (1 if self.kind == "diagonal" else 0):
                return False
            return None
        return self.result.is_k() if self.kind == "diagonal" else self.result.is_zero()


@dataclass(frozen=True)
class ExtTable:
    labels: tuple[str, ...]
    cells: tuple[Cell, ...]

    def cell(self, i: int, j: int) -> Cell:
        return self.cells[i * len(self.labels) + j]

    @property
    def required(self) -> list[Cell]:
        return [c for c in self.cells if c.kind != "free"]

    @property
    def unresolved(self) -> list[Cell]:
        return [c for c in self.required if not c.result.determined]

    @property
    def violations(self) -> list[Cell]:
        return [c for c in self.required if c.ok is False]

    @property
    def verdict(self) -> str:
        if self.violations:
            return NOT_EXCEPTIONAL
        if self.unresolved:
            return UNRESOLVED
        return EXCEPTIONAL

    def route_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.required:
            out[c.result.route] = out.get(c.result.route, 0) + 1
        return dict(sorted(out.items()))


def _kind(i: int, j: int) -> str:
    if i == j:
        return "diagonal"
    return "required-zero" if i > j else "free"


def check_exceptional_collection(
    objects: Sequence[FormalComplex],
    engine: ExtEngine | None = None,
    jobs: int = 1,
    free_cells: bool = True,
) -> ExtTable:
    """Ext table of an ordered list; cell (i, j) is Ext(objects[i], objects[j])."""
    engine = engine or ExtEngine()
    n = len(objects)
    pairs = [(i, j) for i in range(n) for j in range(n)]

    def work(ij):
        i, j = ij
        kind = _kind(i, j)
        if kind == "free" and not free_cells:
            from ..cg import CohomologyResult as CR

            return Cell(i, j, kind, CR.unknown([], [], euler(objects[i], objects[j]), "skipped"))
        return Cell(i, j, kind, complex_ext(objects[i], objects[j], engine))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(work, pairs))
    else:
        cells = [work(ij) for ij in pairs]
    return ExtTable(tuple(o.label() for o in objects), tuple(cells))


def euler_matrix(objects: Sequence[FormalComplex]) -> list[list[int]]:
    return [[euler(a, b) for b in objects] for a in objects]


def determinant(m: list[list[int]]) -> int:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


def is_upper_unitriangular(m: list[list[int]]) -> bool:
    n = len(m)
    return all(m[i][i] == 1 for i in range(n)) and all(m[i][j] == 0 for i in range(n) for j in range(i))


def lefschetz_validate(blocks: Sequence[Sequence[FormalComplex]]) -> bool:
    """Block i must be the first len(block i) objects of block 0 twisted by i,
    with non-increasing block sizes."""
    if not blocks:
        return True
    sizes = [len(b) for b in blocks]
    if any(s <= 0 for s in sizes) or any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        return False
    first = blocks[0]
    return all(
        list(blk) == [x.twist(i) for x in first[: len(blk)]] for i, blk in enumerate(blocks)
    )
