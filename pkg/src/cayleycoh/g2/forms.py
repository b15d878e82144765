"""The G2-invariant forms on V in the weight basis.

Basis order (index 0..6): e0, e_a, e_-a, e_b, e_-b, e_c, e_-c, where a, b, c
are short roots with a + b + c = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .multivector import DIM, MultiVector, convolve, wedge_all

NAMES = ("0", "a", "-a", "b", "-b", "c", "-c")
INDEX = {n: i for i, n in enumerate(NAMES)}


def basis_name(i: int, covariant: bool = False) -> str:
    return f"e{NAMES[i]}" + ("*" if covariant else "")


def e(name: str) -> MultiVector:
    return MultiVector.basis(INDEX[name])


def edual(name: str) -> MultiVector:
    return MultiVector.basis(INDEX[name], covariant=True)


def _form(terms) -> MultiVector:
    deg = len(terms[0][1])
    return MultiVector(deg, {tuple(INDEX[n] for n in names): Fraction(c) for c, names in terms}, True)


LAMBDA_PUBLISHED = _form(
    [
        (2, ("0", "a", "b", "c")),
        (-2, ("0", "-a", "-b", "-c")),
        (1, ("b", "-b", "c", "-c")),
        (1, ("a", "-a", "c", "-c")),
        (1, ("a", "-a", "b", "-b")),
    ]
)


def flip_e0(f: MultiVector) -> MultiVector:
    """Pull back along e0 -> -e0 (an isometry of q)."""
    return MultiVector(f.degree, {k: (-v if 0 in k else v) for k, v in f.coeffs.items()}, f.covariant)


# The published 4-form and the published 3-form differ by the e0 -> -e0 flip:
# q(lambda^dual) is proportional to nu only after flipping, and only the
# flipped form annihilates bracket-closed 3-spaces.  The bracket tables are
# consistent with nu, so lambda is the one we correct.
LAMBDA = flip_e0(LAMBDA_PUBLISHED)

NU_PUBLISHED = _form(
    [
        (1, ("0", "a", "-a")),
        (1, ("0", "b", "-b")),
        (1, ("0", "c", "-c")),
        (1, ("a", "b", "c")),
        (1, ("-a", "-b", "-c")),
    ]
)


def _q_matrix() -> tuple[tuple[Fraction, ...], ...]:
    # symmetric-product reading: e0*e0 - sum e_s*e_-s with e_s*e_-s = (e_s e_-s + e_-s e_s)/2
    m = [[Fraction(0)] * DIM for _ in range(DIM)]
    m[0][0] = Fraction(1)
    for s in (1, 3, 5):
        m[s][s + 1] = m[s + 1][s] = Fraction(-1, 2)
    return tuple(tuple(r) for r in m)


Q = _q_matrix()
# q is block diagonal with 2x2 blocks [[0,-1/2],[-1/2,0]], inverse [[0,-2],[-2,0]]
Q_INV = tuple(
    tuple(
        Fraction(1)
        if (i, j) == (0, 0)
        else Fraction(-2)
        if i and j and {i, j} in ({1, 2}, {3, 4}, {5, 6})
        else Fraction(0)
        for j in range(DIM)
    )
    for i in range(DIM)
)


def q_pair(u: MultiVector, v: MultiVector) -> Fraction:
    a, b = u.coords(), v.coords()
    return sum((a[i] * Q[i][j] * b[j] for i in range(DIM) for j in range(DIM)), Fraction(0))


def q_lower(v: MultiVector) -> MultiVector:
    """q: V -> V^dual, applied slotwise to a multivector."""
    images = [MultiVector(1, {(j,): Q[i][j] for j in range(DIM)}, True) for i in range(DIM)]
    if v.degree == 0:
        return MultiVector(0, v.coeffs, True)
    out = MultiVector(v.degree, {}, True)
    for k, c in v.coeffs.items():
        out = out + wedge_all(images[i] for i in k).scaled(c)
    return out


def q_raise(f: MultiVector) -> MultiVector:
    """q^-1: V^dual -> V on 1-forms."""
    if f.degree != 1 or not f.covariant:
        raise ValueError("q_raise expects a 1-form")
    c = f.coords()
    return MultiVector.vector([sum(Q_INV[i][j] * c[j] for j in range(DIM)) for i in range(DIM)])


def omega(scale=1) -> MultiVector:
    return MultiVector.basis(*range(DIM), coeff=scale)


@dataclass(frozen=True)
class G2FormSet:
    lam: MultiVector
    q: tuple[tuple[Fraction, ...], ...]
    nu: MultiVector
    lam_dual: MultiVector
    omega: MultiVector
    calibration: Fraction


@lru_cache(maxsize=None)
def forms() -> G2FormSet:
    """The forms with the volume scale fixed so that q(lambda^dual) = nu."""
    raw = q_lower(convolve(omega(), LAMBDA))
    ratios = {NU_PUBLISHED.coeffs[k] / v for k, v in raw.coeffs.items() if k in NU_PUBLISHED.coeffs}
    if len(ratios) != 1 or set(raw.coeffs) != set(NU_PUBLISHED.coeffs):
        raise AssertionError("q(lambda^dual) is not proportional to nu")
    c = ratios.pop()
    w = omega(c)
    lam_dual = convolve(w, LAMBDA)
    return G2FormSet(LAMBDA, Q, q_lower(lam_dual), lam_dual, w, c)


def nu_matches_published() -> bool:
    return forms().nu == NU_PUBLISHED


def published_lambda_compatible() -> bool:
    """Whether q(lambda^dual) is proportional to nu for the printed 4-form."""
    raw = q_lower(convolve(omega(), LAMBDA_PUBLISHED))
    if set(raw.coeffs) != set(NU_PUBLISHED.coeffs):
        return False
    return len({NU_PUBLISHED.coeffs[k] / v for k, v in raw.coeffs.items()}) == 1
