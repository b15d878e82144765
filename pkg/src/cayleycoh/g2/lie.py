"""The bracket on V, the Cayley Grassmannian as subalgebras, and i_lambda."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .forms import Q, e, forms, q_raise
from .linalg import kernel, rank, solve_in_span
from .multivector import DIM, MultiVector, convolve, wedge, wedge_all

O0, O1, O2 = "O0", "O1", "O2"
SEMISIMPLE, SOLVABLE, NILPOTENT = "semisimple", "solvable", "nilpotent"


class NotOnCG(ValueError):
    """The subspace is not annihilated by lambda."""


class ImpossibleState(RuntimeError):
    """An outcome excluded by the orbit classification (e.g. q-rank 2 on CG)."""


@dataclass(frozen=True)
class SubspaceBasis:
    vectors: tuple[MultiVector, ...]

    def __post_init__(self):
        vs = tuple(self.vectors)
        if any(v.degree != 1 or v.covariant for v in vs):
            raise ValueError("subspace basis vectors must be vectors in V")
        if rank([v.coords() for v in vs]) != len(vs):
            raise ValueError("subspace basis is linearly dependent")
        object.__setattr__(self, "vectors", vs)

    @classmethod
    def of(cls, *vs) -> "SubspaceBasis":
        return cls(tuple(e(v) if isinstance(v, str) else v for v in vs))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def rows(self) -> list[list[Fraction]]:
        return [v.coords() for v in self.vectors]

    def contains(self, v: MultiVector) -> bool:
        return v.is_zero() or solve_in_span(self.rows(), v.coords()) is not None

    def annihilator(self) -> list[MultiVector]:
        """Basis of U^perp in V^dual."""
        return [MultiVector.vector(k, covariant=True) for k in kernel(self.rows())]


P0 = SubspaceBasis.of("0", "c", "-c")
P1 = SubspaceBasis.of("0", "b", "-c")
P2 = SubspaceBasis.of("a", "b", "-c")
ORBIT_POINTS = {O0: P0, O1: P1, O2: P2}


# --- bracket ---------------------------------------------------------------
def bracket(u: MultiVector, v: MultiVector) -> MultiVector:
    """q^-1(nu contracted with u ^ v)."""
    return q_raise(convolve(forms().nu, wedge(u, v)))


def jacobiator(x: MultiVector, y: MultiVector, z: MultiVector) -> MultiVector:
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def lambda_vector(x, y, z, lam: MultiVector | None = None) -> MultiVector:
    lam = forms().lam if lam is None else lam
    return q_raise(convolve(lam, wedge_all((x, y, z))))


@lru_cache(maxsize=None)
def jacobiator_constant(lam: MultiVector | None = None) -> Fraction | None:
    """c with Jac(x, y, z) = c q^-1(lambda _| x^y^z) on all 35 basis triples.

    None when no single constant works.
    """
    basis = [MultiVector.basis(i) for i in range(DIM)]
    ratios = set()
    for i, j, k in combinations(range(DIM), 3):
        jac = jacobiator(basis[i], basis[j], basis[k]).coords()
        ref = lambda_vector(basis[i], basis[j], basis[k], lam).coords()
        for a, b in zip(jac, ref):
            if b == 0:
                if a != 0:
                    return None
            else:
                ratios.add(a / b)
    return ratios.pop() if len(ratios) == 1 else None


def jacobiator_identity_check(lam: MultiVector | None = None) -> bool:
    c = jacobiator_constant(lam)
    return c is not None and c != 0


# --- points of CG ------------------------------------------------------------
def is_cg_point(U: SubspaceBasis, lam: MultiVector | None = None) -> bool:
    if U.dim != 3:
        raise ValueError("is_cg_point expects a 3-dimensional subspace")
    lam = forms().lam if lam is None else lam
    return convolve(lam, wedge_all(U.vectors)).is_zero()


def q_restricted(U: SubspaceBasis) -> list[list[Fraction]]:
    rows = U.rows()
    return [
        [sum(a[i] * Q[i][j] * b[j] for i in range(DIM) for j in range(DIM)) for b in rows] for a in rows
    ]


def orbit_type(U: SubspaceBasis) -> str:
    if not is_cg_point(U):
        raise NotOnCG("orbit_type needs a point of CG")
    r = rank(q_restricted(U))
    if r == 3:
        return O0
    if r == 1:
        return O1
    if r == 0:
        return O2
    raise ImpossibleState("q restricted to a point of CG has rank 2")


def structure_constants(U: SubspaceBasis) -> dict[tuple[int, int], list[Fraction]]:
    """[u_i, u_j] in the basis of U; raises if U is not bracket-closed."""
    out = {}
    for i, j in combinations(range(U.dim), 2):
        c = solve_in_span(U.rows(), bracket(U.vectors[i], U.vectors[j]).coords())
        if c is None:
            raise NotOnCG(f"[u{i + 1}, u{j + 1}] leaves the subspace")
        out[i, j] = c
    return out


def _span_dim(vectors: Sequence[Sequence[Fraction]]) -> int:
    vs = [v for v in vectors if any(v)]
    return rank(vs) if vs else 0


def _derived(U: SubspaceBasis, a: list[MultiVector], b: list[MultiVector]) -> list[MultiVector]:
    """A basis of [a, b]."""
    spans = [bracket(x, y) for x in a for y in b]
    rows = [s.coords() for s in spans if not s.is_zero()]
    if not rows:
        return []
    # row-reduce to a basis
    basis: list[list[Fraction]] = []
    for r in rows:
        if rank(basis + [r]) > len(basis):
            basis.append(r)
    return [MultiVector.vector(r) for r in basis]


def lie_type(U: SubspaceBasis) -> str:
    if not is_cg_point(U):
        raise NotOnCG("lie_type needs a point of CG")
    structure_constants(U)  # closure
    g = list(U.vectors)
    d1 = _derived(U, g, g)
    if len(d1) == 3:
        return SEMISIMPLE
    lower = d1
    while lower:
        nxt = _derived(U, g, lower)
        if len(nxt) == len(lower):
            break
        lower = nxt
    if not lower:
        return NILPOTENT
    derived = d1
    while derived:
        nxt = _derived(U, derived, derived)
        if len(nxt) == len(derived):
            raise ImpossibleState("three-dimensional algebra that is neither perfect nor solvable")
        derived = nxt
    return SOLVABLE


# --- i_lambda ----------------------------------------------------------------
def i_lambda(u: MultiVector, v: MultiVector, lam: MultiVector | None = None) -> MultiVector:
    """The 2-form lambda(u, v, -, -)."""
    lam = forms().lam if lam is None else lam
    return convolve(lam, wedge(u, v))


def wedge2_basis(U: SubspaceBasis) -> list[MultiVector]:
    return [wedge(U.vectors[i], U.vectors[j]) for i, j in combinations(range(U.dim), 2)]


def i_lambda_matrix(U: SubspaceBasis, lam: MultiVector | None = None) -> tuple[list[list[Fraction]], int]:
    """Matrix of Lambda^2 U -> Lambda^2 U^perp (rows u1^u2, u1^u3, u2^u3).

    Columns use the basis f_i ^ f_j (i < j) of Lambda^2 U^perp built from the
    annihilator basis f.
    """
    if not is_cg_point(U, lam):
        raise NotOnCG("i_lambda needs a point of CG")
    f = U.annihilator()
    target = [wedge(f[i], f[j]).coords() for i, j in combinations(range(len(f)), 2)]
    rows = []
    for w in wedge2_basis(U):
        image = convolve(forms().lam if lam is None else lam, w).coords()
        c = solve_in_span(target, image)
        if c is None:
            raise ImpossibleState("i_lambda image is not in Lambda^2 U^perp")
        rows.append(c)
    return rows, rank(rows)


def i_lambda_quotient(U: SubspaceBasis, u: MultiVector, v: MultiVector, lam: MultiVector | None = None) -> MultiVector:
    """i_lambda(u ^ v) read in Lambda^2 Q via the volume on the complement.

    Only for coordinate subspaces: the volume is the wedge of the remaining
    basis vectors in basis order, contracted on its first slots.
    """
    used = set()
    for x in U.vectors:
        if len(x.coeffs) != 1:
            raise ValueError("i_lambda_quotient needs a coordinate subspace")
        used |= {k[0] for k in x.coeffs}
    rest = [i for i in range(DIM) if i not in used]
    vol = MultiVector.basis(*rest)
    return convolve(vol, i_lambda(u, v, lam))


# --- Appendix-style rank checks ---------------------------------------------------
def phi_lambda_rank(U2: SubspaceBasis, lam: MultiVector | None = None) -> int:
    """Rank of the 2-form lambda _| (u1 ^ u2) on V / U2."""
    if U2.dim != 2:
        raise ValueError("phi_lambda_rank expects a 2-dimensional subspace")
    form = i_lambda(U2.vectors[0], U2.vectors[1], lam)
    m = [[Fraction(0)] * DIM for _ in range(DIM)]
    for (i, j), c in form.coeffs.items():
        m[i][j], m[j][i] = c, -c
    return rank(m)


def subalgebra_conic(U: SubspaceBasis) -> tuple[list[list[Fraction]], int]:
    """Quadratic form w -> w ^ [w] on Lambda^2 U, in the basis u1^u2, u1^u3, u2^u3.

    [u ^ v] = [u, v] extends linearly; values are read against u1^u2^u3.
    """
    if not is_cg_point(U):
        raise NotOnCG("subalgebra_conic needs a point of CG")
    sc = structure_constants(U)
    pairs = list(combinations(range(3), 2))
    vol = wedge_all(MultiVector.basis(i) for i in range(3))

    def pairing(p, r):
        w = MultiVector.basis(*p)
        lw = MultiVector.vector(list(sc[r]) + [0] * (DIM - 3))
        return wedge(w, lw).coeffs.get(next(iter(vol.coeffs)), Fraction(0))

    m = [[Fraction(0)] * 3 for _ in range(3)]
    for a, p in enumerate(pairs):
        for b, r in enumerate(pairs):
            m[a][b] += pairing(p, r) / 2
            m[b][a] += pairing(p, r) / 2
    return m, rank(m)
