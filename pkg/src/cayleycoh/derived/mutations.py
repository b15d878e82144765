"""Left and right mutations through an exceptional object.

    L_E(G) = Cone(Ext(E, G) (x) E -> G)
    R_E(G) = Cone(G -> Ext(G, E)^dual (x) E)[-1]

Only graded multiplicities enter, so the result is a formal complex that
remembers its origin.  The Ext engine uses that origin for exact
vanishing identities.
"""
from __future__ import annotations

from typing import Sequence

from .complexes import FormalComplex, Origin, Term, cone, euler
from .ext import ExtEngine, complex_ext


class IndeterminateMutation(ValueError):
    """The Ext needed to build the cone is not determined by its E1 page."""


def _copies(E: FormalComplex, mult_by_shift: dict[int, int]) -> FormalComplex:
    """Direct sum over s of mult_by_shift[s] copies of E[s], all at E's levels."""
    terms = []
    for s, m in sorted(mult_by_shift.items()):
        if m <= 0:
            continue
        for t in E.shift(s).terms:
            terms.append(Term(t.level, t.degree, t.bundle.scaled(m)))
    return FormalComplex(tuple(terms), "", (), None, E.exact)


def _multiplicities(E, G, left: bool, engine, allow_kclass: bool):
    r = complex_ext(E, G, engine) if left else complex_ext(G, E, engine)
    if r.determined:
        return r.graded.dims(), True
    if not allow_kclass:
        pair = f"({E.label()}, {G.label()})" if left else f"({G.label()}, {E.label()})"
        raise IndeterminateMutation(
            f"Ext{pair} is indeterminate (chi = {r.euler}); the mutation cone cannot be placed"
        )
    chi = euler(E, G) if left else euler(G, E)
    return ({0: chi} if chi >= 0 else {1: -chi}), False


def mutate_left(
    E: FormalComplex, G: FormalComplex, engine: ExtEngine | None = None, allow_kclass: bool = False
) -> FormalComplex:
    """L_E(G).  With ``allow_kclass`` an undetermined Ext falls back to chi.

    In that case the result only carries the K-class (``exact`` is False).
    """
    o = G.origin
    if o is not None and o.kind == "right" and o.through == E:
        # L_E R_E G = G for G in the right orthogonal of E
        if complex_ext(E, o.target, engine).is_zero():
            return o.target
    dims, exact = _multiplicities(E, G, True, engine, allow_kclass)
    # Ext^q(E, G) contributes E[-q]
    source = _copies(E, {-q: m for q, m in dims.items()})
    c = cone(source, G)
    name = f"L_{{{E.label()}}}({G.label()})"
    return FormalComplex(c.terms, name, (), Origin("left", E, G), exact and c.exact)


def mutate_right(
    E: FormalComplex, G: FormalComplex, engine: ExtEngine | None = None, allow_kclass: bool = False
) -> FormalComplex:
    """R_E(G), the mirror image of ``mutate_left``."""
    o = G.origin
    if o is not None and o.kind == "left" and o.through == E:
        if complex_ext(o.target, E, engine).is_zero():
            return o.target
    dims, exact = _multiplicities(E, G, False, engine, allow_kclass)
    # Ext^q(G, E)^dual contributes E[q]
    target = _copies(E, {q: m for q, m in dims.items()})
    c = cone(G, target).shift(-1)
    name = f"R_{{{E.label()}}}({G.label()})"
    return FormalComplex(c.terms, name, (), Origin("right", E, G), exact and c.exact)


def mutate_left_block(
    block: Sequence[FormalComplex], G: FormalComplex, engine=None, allow_kclass: bool = False
) -> FormalComplex:
    """L_<E_1..E_m> = L_{E_1} o ... o L_{E_m}."""
    for E in reversed(block):
        G = mutate_left(E, G, engine, allow_kclass)
    return G


def mutate_right_block(
    block: Sequence[FormalComplex], G: FormalComplex, engine=None, allow_kclass: bool = False
) -> FormalComplex:
    """R_<E_1..E_m> = R_{E_m} o ... o R_{E_1}."""
    for E in block:
        G = mutate_right(E, G, engine, allow_kclass)
    return G
