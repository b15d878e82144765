"""Reference structure constants at the orbit representatives P0, P1, P2.

Vectors and forms are written as {basis-name tuple: coefficient}; names
follow ``forms.NAMES``.  ``I_LAMBDA_QUOTIENT`` values live in Lambda^2 Q,
``I_LAMBDA_P2`` values in Lambda^2 U^perp.
"""
from __future__ import annotations

from fractions import Fraction

from .forms import INDEX
from .multivector import MultiVector

BRACKETS = {
    "P0": [
        (("0", "c"), {("c",): -2}),
        (("0", "-c"), {("-c",): 2}),
        (("c", "-c"), {("0",): 1}),
    ],
    "P1": [
        (("0", "b"), {("b",): -2}),
        (("0", "-c"), {("-c",): 2}),
        (("b", "-c"), {}),
    ],
    "P2": [
        (("a", "b"), {("-c",): -2}),
        (("a", "-c"), {}),
        (("b", "-c"), {}),
    ],
}

I_LAMBDA_QUOTIENT = {
    "P0": [
        (("0", "c"), {("-a", "-b"): -2}),
        (("0", "-c"), {("a", "b"): 2}),
        (("c", "-c"), {("a", "-a"): 1, ("b", "-b"): 1}),
    ],
    "P1": [
        (("0", "b"), {("-a", "-b"): -2}),
        (("0", "-c"), {("a", "c"): -2}),
        (("b", "-c"), {("a", "-a"): 1}),
    ],
}

I_LAMBDA_P2 = [
    (("a", "b"), {("0", "c"): 2, ("-a", "-b"): 1}),
    (("a", "-c"), {("-a", "c"): 1}),
    (("b", "-c"), {("-b", "c"): 1}),
]

# lambda _| (e_a ^ e_-a) on V / <e_a, e_-a>
PHI_U2_PRIME = {("c", "-c"): 1, ("b", "-b"): 1}


def element(terms: dict, degree: int, covariant: bool = False) -> MultiVector:
    return MultiVector(
        degree, {tuple(INDEX[n] for n in k): Fraction(v) for k, v in terms.items()}, covariant
    )
