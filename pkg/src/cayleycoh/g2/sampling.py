"""Seeded exact random samples and the randomized rank sweeps.

Every sample i of a sweep with seed s draws from its own stream
``random.Random(f"{s}:{tag}:{i}")``, so results do not depend on the
number of workers.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .lie import (
    NILPOTENT,
    O0,
    O1,
    O2,
    SEMISIMPLE,
    SOLVABLE,
    ImpossibleState,
    SubspaceBasis,
    bracket,
    is_cg_point,
    lie_type,
    orbit_type,
    phi_lambda_rank,
)
from .linalg import kernel, rank
from .multivector import DIM, MultiVector
from .quadrics import segre_conic, segre_quadric, veronese_quadric

HEIGHT = 100
EXPECTED_LIE = {O0: SEMISIMPLE, O1: SOLVABLE, O2: NILPOTENT}


def stream(seed: int, tag: str, i: int) -> random.Random:
    return random.Random(f"{seed}:{tag}:{i}")


def rational(rng: random.Random, height: int = HEIGHT) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def vector(rng: random.Random) -> MultiVector:
    return MultiVector.vector([rational(rng) for _ in range(DIM)])


def combination(rng: random.Random, basis) -> MultiVector:
    cs = [rational(rng) for _ in basis]
    return MultiVector.vector([sum((c * b[i] for c, b in zip(cs, basis)), Fraction(0)) for i in range(DIM)])


def isotropic_vector(rng: random.Random) -> MultiVector:
    """q(u) = u0^2 - u1 u2 - u3 u4 - u5 u6 = 0, solved for u2."""
    while True:
        c = [rational(rng) for _ in range(DIM)]
        if c[1] == 0:
            continue
        c[2] = (c[0] ** 2 - c[3] * c[4] - c[5] * c[6]) / c[1]
        return MultiVector.vector(c)


def ad_matrix(u: MultiVector) -> list[list[Fraction]]:
    cols = [bracket(u, MultiVector.basis(j)).coords() for j in range(DIM)]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def _general_point(rng) -> SubspaceBasis:
    while True:
        u, v = vector(rng), vector(rng)
        w = bracket(u, v)
        if rank([u.coords(), v.coords(), w.coords()]) == 3:
            return SubspaceBasis((u, v, w))


def _closed_point(rng) -> SubspaceBasis:
    # the centralizer of a null vector
    u = isotropic_vector(rng)
    return SubspaceBasis(tuple(MultiVector.vector(k) for k in kernel(ad_matrix(u))))


def _middle_point(rng) -> SubspaceBasis:
    # abelian null plane <u, v> plus an element of its normalizer
    while True:
        u = isotropic_vector(rng)
        v = combination(rng, kernel(ad_matrix(u)))
        au, av = ad_matrix(u), ad_matrix(v)
        cu, cv = u.coords(), v.coords()
        rows = []
        for i in range(DIM):
            rows.append([-au[i][j] for j in range(DIM)] + [-cu[i], -cv[i], 0, 0])
            rows.append([-av[i][j] for j in range(DIM)] + [0, 0, -cu[i], -cv[i]])
        x = combination(rng, [k[:DIM] for k in kernel(rows)])
        if rank([cu, cv, x.coords()]) == 3:
            return SubspaceBasis((u, v, x))


POINT_SAMPLERS = {O0: _general_point, O1: _middle_point, O2: _closed_point}


def cg_point(rng: random.Random, orbit: str = O0) -> SubspaceBasis:
    """A random point of CG, built to land in the requested orbit.

    The orbit is not assumed: callers classify the result independently.
    """
    return POINT_SAMPLERS[orbit](rng)


def subspace(rng: random.Random, d: int) -> SubspaceBasis:
    while True:
        vs = [vector(rng) for _ in range(d)]
        if rank([v.coords() for v in vs]) == d:
            return SubspaceBasis(tuple(vs))


def symmetric_of_rank(rng: random.Random, r: int) -> list[list[Fraction]]:
    """f = sum of r random w w^T (rank r), or u v^T + v u^T when r = -2."""
    while True:
        if r == -2:
            u, v = [rational(rng) for _ in range(3)], [rational(rng) for _ in range(3)]
            f = [[u[i] * v[j] + v[i] * u[j] for j in range(3)] for i in range(3)]
            if rank(f) == 2:
                return f
            continue
        ws = [[rational(rng) for _ in range(3)] for _ in range(r)]
        cs = [rational(rng) or Fraction(1) for _ in range(r)]
        f = [[sum((c * w[i] * w[j] for c, w in zip(cs, ws)), Fraction(0)) for j in range(3)] for i in range(3)]
        if rank(f) == r:
            return f


def segre_input(rng: random.Random) -> list[list[Fraction]]:
    return [[rational(rng) for _ in range(6)] for _ in range(3)]


# --- sweeps ---------------------------------------------------------------------
@dataclass
class SweepResult:
    name: str
    samples: int
    failures: list[str] = field(default_factory=list)
    tally: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "ok": self.ok,
            "failures": self.failures[:10],
            "tally": {str(k): v for k, v in sorted(self.tally.items(), key=str)},
        }


def _cg_sample(args) -> tuple[str, str | None]:
    seed, i = args
    orbit = (O0, O1, O2)[i % 3] if i % 5 == 0 else O0
    U = cg_point(stream(seed, "cg", i), orbit)
    if not is_cg_point(U):
        return "not-on-CG", f"sample {i}: bracket-closed subspace not annihilated by lambda"
    try:
        o, t = orbit_type(U), lie_type(U)
    except ImpossibleState as exc:
        return "impossible", f"sample {i}: {exc}"
    if EXPECTED_LIE[o] != t:
        return f"{o}/{t}", f"sample {i}: orbit {o} but Lie type {t}"
    return f"{o}/{t}", None


def _phi_sample(args) -> tuple[str, str | None]:
    seed, i = args
    r = phi_lambda_rank(subspace(stream(seed, "phi", i), 2))
    return f"rank {r}", None if r in (2, 4) else f"sample {i}: rank {r}"


def _veronese_sample(args) -> tuple[str, str | None]:
    seed, i = args
    kind = (3, -2)[i % 2]
    f = symmetric_of_rank(stream(seed, "veronese", i), kind)
    rk = veronese_quadric(f).rank
    expected = 6 if kind == 3 else 4
    label = f"f rank {abs(kind)} -> {rk}"
    return label, None if rk == expected else f"sample {i}: {label}"


def _segre_sample(args) -> tuple[str, str | None]:
    seed, i = args
    s = segre_input(stream(seed, "segre", i))
    c = segre_conic(s).rank
    if c != 3:
        return "skipped (conic not smooth)", None
    q = segre_quadric(s).rank
    return f"conic 3 -> {q}", None if q == 12 else f"sample {i}: quadric rank {q}"


SWEEPS: dict[str, Callable] = {
    "cg": _cg_sample,
    "phi": _phi_sample,
    "veronese": _veronese_sample,
    "segre": _segre_sample,
}


def sweep(name: str, n: int, seed: int = 0, jobs: int = 1) -> SweepResult:
    fn = SWEEPS[name]
    args = [(seed, i) for i in range(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, args, chunksize=max(1, n // (4 * jobs))))
    else:
        results = [fn(a) for a in args]
    out = SweepResult(name, n)
    for label, failure in results:
        out.tally[label] = out.tally.get(label, 0) + 1
        if failure:
            out.failures.append(failure)
    return out

