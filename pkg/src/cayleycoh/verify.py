"""The nine end-to-end checks behind ``verify-all`` and the acceptance suite.

Each check returns a ``CheckResult`` whose ``details`` is JSON-ready and
deterministic for a given seed (timings are kept apart).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .derived import (
    EXCEPTIONAL,
    ExtEngine,
    chi_report,
    check_exceptional_collection,
    cg15,
    complex_ext,
    determinant,
    euler_matrix,
    is_upper_unitriangular,
    mutate_right,
    residual_check,
    same_kclass,
)
from .derived.presets import SIGMA21, W2_Q, W2_U_DUAL, obj, preset_R


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.ok else 'FAIL'}  {self.title}"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok, "details": self.details}


def _graded_json(r) -> dict:
    if not r.determined:
        return {"determined": False, "euler": r.euler, "route": r.route}
    return {"determined": True, "dims": {str(d): n for d, n in sorted(r.dims().items())}, "route": r.route}


def _is_k_in_degree(r, deg: int) -> bool:
    if not r.determined:
        return False
    d = r.graded.as_dict()
    if set(d) != {deg} or len(d[deg]) != 1:
        return False
    (w, m), = d[deg].items()
    return m == 1 and len(set(w)) == 1


# --- 1 ------------------------------------------------------------------------
SHADED = {(0, 0, -3), (1, 1, -1), (2, 1, -1)}


def check_table(**_) -> CheckResult:
    from .cli.table import compute_table, rep_text

    entries = compute_table()
    mismatched = [list(e.weight) for e in entries if not e.matches]
    shaded = {e.weight for e in entries if e.shaded}
    ambient = {e.weight: rep_text(e.gr) for e in entries}
    ok = not mismatched and shaded == SHADED and ambient[(-1, -1, -5)] == "k[-4]"
    return CheckResult(1, "cohomology table", ok, {
        "cells": len(entries),
        "mismatched": mismatched,
        "shaded": sorted(list(w) for w in shaded),
        "ambient (-1,-1,-5)": ambient[(-1, -1, -5)],
    })


# --- 2, 5 -----------------------------------------------------------------------
def check_collection(jobs: int = 1, **_) -> CheckResult:
    table = check_exceptional_collection(cg15(), ExtEngine(), jobs=jobs, free_cells=False)
    ok = table.verdict == EXCEPTIONAL and not table.unresolved
    return CheckResult(2, "cg15 is exceptional", ok, {
        "verdict": table.verdict,
        "unresolved": len(table.unresolved),
        "violations": len(table.violations),
        "routes": table.route_counts(),
    })


def check_euler_matrix(**_) -> CheckResult:
    m = euler_matrix(cg15())
    det = determinant(m)
    return CheckResult(5, "Euler matrix unitriangular", is_upper_unitriangular(m) and det == 1, {
        "upper_unitriangular": is_upper_unitriangular(m),
        "determinant": det,
    })


# --- 3 ------------------------------------------------------------------------
def check_mutations(**_) -> CheckResult:
    engine = ExtEngine()
    w2q, w2u = obj(W2_Q, "W2Q"), obj(W2_U_DUAL, "W2U*")
    hom = complex_ext(w2q, w2u, engine)
    right = mutate_right(w2u, w2q, engine)
    s21 = obj(SIGMA21, "S21")
    self_ext = complex_ext(s21, s21.twist(-1), engine)
    parts = {
        "Ext(W2Q, W2U*) = k": _is_k_in_degree(hom, 0),
        "R_{W2U*} W2Q ~ R in K-theory": same_kclass(right, preset_R()),
        "Ext(S21, S21(-1)) = k[-2]": _is_k_in_degree(self_ext, 2),
    }
    return CheckResult(3, "mutation identities", all(parts.values()), {
        "checks": parts,
        "Ext(W2Q, W2U*)": _graded_json(hom),
        "Ext(S21, S21(-1))": _graded_json(self_ext),
    })


# --- 4 ------------------------------------------------------------------------
def check_residual(**_) -> CheckResult:
    rep = residual_check()
    diag = rep.diagonal_ok()
    cross = rep.cross()
    euler_ok = rep.euler_orthogonal
    ok = (
        euler_ok
        and not rep.violations
        and rep.determined_cross >= 4
        and all(v is not False for v in diag.values())
    )
    return CheckResult(4, "residual objects orthogonal (minimum certificate)", ok, {
        "euler": {f"{i},{j}": v for (i, j), v in sorted(rep.euler.items())},
        "diagonal": {rep.labels[i]: v for i, v in diag.items()},
        "cross": {f"{rep.labels[i]} -> {rep.labels[j]}": v for (i, j), v in sorted(cross.items())},
        "determined_zero_cells": rep.determined_cross,
        "undecided": [f"{rep.labels[i]} -> {rep.labels[j]}" for i, j in rep.undecided],
        "exact": rep.exact,
        "tau": {k: list(v) for k, v in rep.tau.items()},
    })


# --- 6 ------------------------------------------------------------------------
def check_chi(**_) -> CheckResult:
    rep = chi_report()
    return CheckResult(6, "chi-consistency of exact sequences", all(rep.values()), {"checks": rep})


# --- 7 ------------------------------------------------------------------------
def check_g2_constants(**_) -> CheckResult:
    from .g2 import (
        LAMBDA_PUBLISHED,
        ORBIT_POINTS,
        P0,
        P1,
        bracket,
        e,
        forms,
        i_lambda,
        i_lambda_quotient,
        jacobiator_constant,
        lie_type,
        nu_matches_published,
    )
    from .g2 import reference as ref

    brackets = {
        f"{p} [{x},{y}]": bracket(e(x), e(y)) == ref.element(t, 1)
        for p, rows in ref.BRACKETS.items()
        for (x, y), t in rows
    }
    ilam = {}
    points = {"P0": P0, "P1": P1}
    for p, rows in ref.I_LAMBDA_QUOTIENT.items():
        for (x, y), t in rows:
            ilam[f"{p} i({x}^{y})"] = i_lambda_quotient(points[p], e(x), e(y), LAMBDA_PUBLISHED) == ref.element(t, 2)
    for (x, y), t in ref.I_LAMBDA_P2:
        ilam[f"P2 i({x}^{y})"] = i_lambda(e(x), e(y), LAMBDA_PUBLISHED) == ref.element(t, 2, True)
    jac = jacobiator_constant()
    types = {o: lie_type(U) for o, U in ORBIT_POINTS.items()}
    parts = {
        "brackets": all(brackets.values()),
        "i_lambda lists": all(ilam.values()),
        "nu = q(lambda^dual)": nu_matches_published(),
        "Jacobiator proportional to q^-1(lambda)": jac is not None and jac != 0,
        "Lie types": types == {"O0": "semisimple", "O1": "solvable", "O2": "nilpotent"},
    }
    return CheckResult(7, "G2 structure constants", all(parts.values()), {
        "checks": parts,
        "i_lambda_mismatches": sorted(k for k, v in ilam.items() if not v),
        "calibration": str(forms().calibration),
        "jacobiator_constant": None if jac is None else str(jac),
        "lie_types": types,
    })


# --- 8 ------------------------------------------------------------------------
def check_ranks(seed: int = 0, jobs: int = 1, samples: int = 1000, **_) -> CheckResult:
    from .g2 import ORBIT_POINTS, SubspaceBasis, phi_lambda_rank, subalgebra_conic, sweep

    fixed = {
        "<ea,e-a>": phi_lambda_rank(SubspaceBasis.of("a", "-a")),
        "<e0,ea>": phi_lambda_rank(SubspaceBasis.of("0", "a")),
    }
    conics = {o: subalgebra_conic(U)[1] for o, U in ORBIT_POINTS.items()}
    sw = sweep("phi", samples, seed, jobs)
    ok = fixed == {"<ea,e-a>": 4, "<e0,ea>": 2} and conics == {"O0": 3, "O1": 2, "O2": 1} and sw.ok
    return CheckResult(8, "rank stratification", ok, {"phi": fixed, "conic": conics, "sweep": sw.as_dict()})


# --- 9 ------------------------------------------------------------------------
SEGRE_EXAMPLE = [
    [0, 0, 0, -2, 0, 0],   # x1^x2 (x) y2^y3
    [0, 0, -2, 0, 0, 0],   # x1^x3 (x) y1^y4
    [1, 0, 0, 0, 0, 0],    # x2^x3 (x) y1^y2
]
# z_mn at 4m + n: u2 (x) v4 and u3 (x) v3
SEGRE_KERNEL = (7, 10)


def _unit_span(kernel, coords) -> bool:
    from .g2.linalg import rank

    units = [[Fraction(int(i == c)) for i in range(len(kernel[0]))] for c in coords]
    return len(kernel) == len(coords) and rank(list(kernel) + units) == len(coords)


def check_quadrics(seed: int = 0, jobs: int = 1, **_) -> CheckResult:
    from .g2 import segre_check, sweep, veronese_quadric

    ver = veronese_quadric([[0, 1, 0], [1, 0, 0], [0, 0, 0]])  # x1 x2 + x2 x1
    ver_ok = ver.rank == 4 and _unit_span(ver.kernel, (0, 1))  # <u(x)u, v(x)v> = <m11, m22>
    conic, quad = segre_check(SEGRE_EXAMPLE)
    seg_ok = conic.rank == 2 and quad.rank == 10 and _unit_span(quad.kernel, SEGRE_KERNEL)
    vs = sweep("veronese", 400, seed, jobs)
    ss = sweep("segre", 100, seed, jobs)
    smooth = sum(v for k, v in ss.tally.items() if k.startswith("conic 3"))
    ok = ver_ok and seg_ok and vs.ok and ss.ok and smooth == 100
    return CheckResult(9, "quadric correspondences", ok, {
        "veronese_example": {"rank": ver.rank, "kernel_ok": ver_ok},
        "segre_example": {"conic_rank": conic.rank, "rank": quad.rank, "kernel_ok": seg_ok},
        "veronese_sweep": vs.as_dict(),
        "segre_sweep": ss.as_dict(),
    })


CHECKS = {
    1: check_table,
    2: check_collection,
    3: check_mutations,
    4: check_residual,
    5: check_euler_matrix,
    6: check_chi,
    7: check_g2_constants,
    8: check_ranks,
    9: check_quadrics,
}


def run(number: int, seed: int = 0, jobs: int = 1) -> CheckResult:
    t = time.perf_counter()
    res = CHECKS[number](seed=seed, jobs=jobs)
    res.seconds = time.perf_counter() - t
    return res


def run_all(seed: int = 0, jobs: int = 1) -> list[CheckResult]:
    return [run(n, seed, jobs) for n in sorted(CHECKS)]
