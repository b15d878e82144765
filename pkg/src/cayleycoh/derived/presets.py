"""Named objects, quasi-isomorphic presentations, and exact sequences.

Everything here is data.  A rewrite rule says that a given atom (up to
Plucker twist) is quasi-isomorphic to a listed complex; the Ext engine
tries these presentations when the plain one leaves a page linked.
"""
from __future__ import annotations

from ..schur.bundles import BundleSum, SchurBundle
from .complexes import FormalComplex, Term


def atom(b=(0, 0, 0), c=(0, 0, 0, 0), mult: int = 1) -> BundleSum:
    return BundleSum(((SchurBundle(tuple(b), tuple(c)), mult),))


O = atom()
U_DUAL = atom((1, 0, 0))
U = atom((0, 0, -1))
W2_U_DUAL = atom((1, 1, 0))
W2_U = atom((0, -1, -1))
S2_U_DUAL = atom((2, 0, 0))
S2_U = atom((0, 0, -2))
SIGMA21 = atom((2, 1, 0))
SIGMA21_U = atom((0, -1, -2))
Q = atom(c=(0, 0, 0, -1))
U_PERP = atom(c=(1, 0, 0, 0))
W2_Q = atom(c=(0, 0, -1, -1))
W2_U_PERP = atom(c=(1, 1, 0, 0))


def obj(x: BundleSum, name: str = "") -> FormalComplex:
    return FormalComplex.of(x, name)


# --- rewrite table: atom (twist 0) -> list of complexes ------------------
# Lambda^2 Q via the Koszul complex of V (x) O -> Q and its dual.
_W2Q_CORESOLUTION = FormalComplex.from_degrees(
    [(0, O.twisted(1).scaled(21)), (1, U_DUAL.twisted(1).scaled(7)), (2, S2_U_DUAL.twisted(1))]
)
_W2Q_RESOLUTION = FormalComplex.from_degrees([(-2, S2_U), (-1, U.scaled(7)), (0, O.scaled(21))])

# Sigma^{2,1} U^dual via the self-dual sequence on CG
#   0 -> S21(-1) -> (V + k) (x) U^dual -> (V^dual + k) (x) W2 U^dual -> S21 -> 0.
# It does not exist on Gr(3, 7).
_S21_RESOLUTION = FormalComplex.from_degrees(
    [(-2, SIGMA21.twisted(-1)), (-1, U_DUAL.scaled(8)), (0, W2_U_DUAL.scaled(8))]
)

REWRITES: dict[SchurBundle, tuple[FormalComplex, ...]] = {
    W2_Q.atoms[0][0]: (_W2Q_CORESOLUTION, _W2Q_RESOLUTION),
    SIGMA21.atoms[0][0]: (_S21_RESOLUTION,),
}


def _twist_class(a: SchurBundle) -> tuple[SchurBundle, int]:
    t = a.b[-1]
    return SchurBundle(tuple(x - t for x in a.b), a.c, a.k, a.n), t


def rewrite_presentations(X: FormalComplex, limit: int = 16) -> list[FormalComplex]:
    """All presentations obtained by applying the rewrite table to terms."""
    out = [X]
    frontier = [X]
    while frontier and len(out) < limit:
        nxt = []
        for Y in frontier:
            for idx, term in enumerate(Y.terms):
                if len(term.bundle) != 1:
                    continue
                (a, m), = term.bundle.atoms
                base, t = _twist_class(a)
                for rep in REWRITES.get(base, ()):
                    rep_t = rep.twist(t)
                    if m != 1:
                        rep_t = FormalComplex(
                            tuple(Term(r.level, r.degree, r.bundle.scaled(m)) for r in rep_t.terms)
                        )
                    Z = Y.substitute(idx, rep_t)
                    if Z not in out:
                        out.append(Z)
                        nxt.append(Z)
        frontier = nxt
    return out[:limit]


# --- presets -------------------------------------------------------------
def preset_R() -> FormalComplex:
    """Kernel of the surjection Lambda^2 Q -> Lambda^2 U^dual.

    Built as the right mutation of Lambda^2 Q through Lambda^2 U^dual: Hom
    between them is one-dimensional, so the cone is exactly
    [Lambda^2 Q -> Lambda^2 U^dual] in degrees 0, 1, and the object keeps its
    mutation origin.
    """
    from .mutations import mutate_right

    return mutate_right(obj(W2_U_DUAL, "W2U*"), obj(W2_Q, "W2Q")).renamed("R")


def preset_K() -> FormalComplex:
    """Kernel of the evaluation V^dual (x) Lambda^2 U^dual -> Sigma^{2,1} U^dual."""
    return FormalComplex.from_degrees([(0, W2_U_DUAL.scaled(7)), (1, SIGMA21)], "K")


def preset_E10() -> FormalComplex:
    """Extension of U^perp by S^2 U (sub S^2 U, quotient U^perp)."""
    return FormalComplex((Term(0, 0, U_PERP), Term(1, 0, S2_U)), "E10")


def preset_E16() -> FormalComplex:
    """Extension of Lambda^2 U^dual + O(1) by U^perp (x) Lambda^2 U^dual."""
    return FormalComplex(
        (Term(0, 0, W2_U_DUAL + O.twisted(1)), Term(1, 0, U_PERP * W2_U_DUAL)), "E16"
    )


PRESETS = {"R": preset_R, "E10": preset_E10, "E16": preset_E16, "K": preset_K}


def preset(name: str) -> FormalComplex:
    return PRESETS[name]()


# --- collections -----------------------------------------------------------
def block_E(t: int = 0) -> list[FormalComplex]:
    """(O(t), U^dual(t), Lambda^2 U^dual(t))."""
    return [obj(O, "O").twist(t), obj(U_DUAL, "U*").twist(t), obj(W2_U_DUAL, "W2U*").twist(t)]


def cg15_blocks() -> list[list[FormalComplex]]:
    first = block_E(0) + [preset_R(), obj(SIGMA21, "S21U*")]
    support = (5, 4, 3, 3)
    return [[x.twist(i) for x in first[:s]] for i, s in enumerate(support)]


def cg15() -> list[FormalComplex]:
    return [x for blk in cg15_blocks() for x in blk]


# --- exact sequences (for chi checks) -------------------------------------
def exact_sequences() -> dict[str, list[FormalComplex]]:
    """Claimed exact sequences 0 -> X_0 -> X_1 -> ... -> 0 on CG."""
    R, K, E10, E16 = preset_R(), preset_K(), preset_E10(), preset_E16()
    seqs: dict[str, list[FormalComplex]] = {}
    for n in (0, 1, 2):
        seqs[f"koszul n={n}"] = [
            obj(S2_U.twisted(n)),
            obj(W2_U_DUAL.twisted(n - 1).scaled(7)),
            obj(O.twisted(n).scaled(21)),
            obj(W2_Q.twisted(n)),
        ]
        seqs[f"koszul dual n={n}"] = [
            obj(W2_Q.twisted(n - 1)),
            obj(O.twisted(n).scaled(21)),
            obj(U_DUAL.twisted(n).scaled(7)),
            obj(S2_U_DUAL.twisted(n)),
        ]
    seqs["S21 self-dual"] = [
        obj(SIGMA21.twisted(-1)),
        obj(U_DUAL.scaled(8)),
        obj(W2_U_DUAL.scaled(8)),
        obj(SIGMA21),
    ]
    seqs["R"] = [R, obj(W2_Q), obj(W2_U_DUAL)]
    seqs["R dual"] = [obj(W2_U), obj(W2_U_PERP), R.dual()]
    seqs["K"] = [K, obj(W2_U_DUAL.scaled(7)), obj(SIGMA21)]
    seqs["K dual"] = [obj(SIGMA21_U), obj(W2_U.scaled(7)), K.dual()]
    seqs["K extension"] = [obj(U_PERP * W2_U_DUAL), K, obj(O.twisted(1))]
    seqs["K dual extension"] = [obj(O.twisted(-1)), K.dual(), obj(Q * W2_U)]
    seqs["E10"] = [obj(S2_U), E10, obj(U_PERP)]
    seqs["E10 dual"] = [obj(Q), E10.dual(), obj(S2_U_DUAL)]
    seqs["E16"] = [obj(U_PERP * W2_U_DUAL), E16, obj(W2_U_DUAL + O.twisted(1))]
    seqs["E16 dual(1)"] = [obj(U_DUAL + O), E16.dual().twist(1), obj(Q * U_DUAL)]
    return seqs


def self_dualities() -> dict[str, tuple[FormalComplex, FormalComplex]]:
    E10, E16 = preset_E10(), preset_E16()
    return {
        "E10(1) = E10^v": (E10.twist(1), E10.dual()),
        "E16(-1) = E16^v": (E16.twist(-1), E16.dual()),
    }
