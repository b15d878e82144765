"""Formal complexes, Ext, mutations and the collection checks."""
from __future__ import annotations

import pytest

from cayleycoh.derived import (
    EXCEPTIONAL,
    NOT_EXCEPTIONAL,
    ExtEngine,
    FormalComplex,
    IndeterminateMutation,
    chi_report,
    check_exceptional_collection,
    cg15,
    cg15_blocks,
    complex_ext,
    cone,
    determinant,
    euler,
    euler_matrix,
    exact_sequences,
    is_upper_unitriangular,
    kclass_vector,
    lefschetz_validate,
    mutate_left,
    mutate_right,
    preset,
    same_kclass,
    sequence_consistent,
)
from cayleycoh.derived.presets import O, SIGMA21, U_DUAL, W2_Q, W2_U_DUAL, obj


@pytest.fixture(scope="module")
def engine():
    return ExtEngine()


def test_o_then_o1_is_exceptional(engine):
    pair = [obj(O, "O"), obj(O, "O").twist(1)]
    assert check_exceptional_collection(pair, engine).verdict == EXCEPTIONAL


def test_o1_then_o_is_not_exceptional(engine):
    pair = [obj(O, "O").twist(1), obj(O, "O")]
    table = check_exceptional_collection(pair, engine)
    assert table.verdict == NOT_EXCEPTIONAL
    assert [(c.i, c.j) for c in table.violations] == [(1, 0)]
    # H(O(1)) is linked on its page; chi = 28 alone refutes vanishing
    cell = table.cell(1, 0)
    assert not cell.result.determined and cell.result.euler == 28


def test_determined_nonzero_backward_ext(engine):
    table = check_exceptional_collection([obj(U_DUAL, "U*"), obj(O, "O")], engine)
    assert table.verdict == NOT_EXCEPTIONAL and table.cell(1, 0).result.dims() == {0: 7}


def test_shift_moves_degrees(engine):
    r = complex_ext(obj(O), obj(O).shift(2), engine)
    assert r.determined and r.dims() == {-2: 1}  # Ext^i(X, Y[m]) = Ext^(i+m)(X, Y)


def test_cone_euler_is_additive():
    a, b, t = obj(O), obj(U_DUAL), obj(W2_U_DUAL)
    c = cone(a, b)
    assert euler(t, c) == euler(t, b) - euler(t, a)


def test_dual_reverses_euler():
    x, y = obj(U_DUAL), obj(SIGMA21)
    assert euler(x, y) == euler(y.dual(), x.dual())


def test_presets_are_complexes():
    for name in ("R", "K", "E10", "E16"):
        assert isinstance(preset(name), FormalComplex)
    with pytest.raises(KeyError):
        preset("nope")


@pytest.mark.parametrize("i", range(15))
def test_kclass_of_collection_object_is_a_row_of_the_euler_matrix(i):
    objs = cg15()
    assert kclass_vector(objs[i]) == tuple(euler(objs[i], E) for E in objs)


# With chi(E, G) = 0, L_E R_E G has the K-class of G; likewise R_E L_E G
# when chi(G, E) = 0.  The collection supplies such pairs for j > i.
PAIRS = [(0, 3), (1, 4), (2, 5), (3, 8), (4, 9), (0, 14)]


@pytest.mark.parametrize("i, j", PAIRS)
def test_left_after_right_preserves_kclass(engine, i, j):
    objs = cg15()
    E, G = objs[j], objs[i]
    assert euler(E, G) == 0
    back = mutate_left(E, mutate_right(E, G, engine, allow_kclass=True), engine, allow_kclass=True)
    assert same_kclass(back, G)


@pytest.mark.parametrize("i, j", PAIRS)
def test_right_after_left_preserves_kclass(engine, i, j):
    objs = cg15()
    E, G = objs[i], objs[j]
    assert euler(G, E) == 0
    back = mutate_right(E, mutate_left(E, G, engine, allow_kclass=True), engine, allow_kclass=True)
    assert same_kclass(back, G)


def test_single_mutation_kclass_formula(engine):
    E, G = obj(W2_U_DUAL), obj(W2_Q)
    R = mutate_right(E, G, engine)
    probe = obj(SIGMA21)
    # [R_E G] = [G] - chi(G, E) [E]
    assert euler(probe, R) == euler(probe, G) - euler(G, E) * euler(probe, E)


def test_right_mutation_of_w2q_is_r(engine):
    assert same_kclass(mutate_right(obj(W2_U_DUAL), obj(W2_Q), engine), preset("R"))


def test_indeterminate_mutation_is_reported():
    from cayleycoh.derived.residual import residual_objects

    A, _, _ = residual_objects()
    assert not A.exact
    with pytest.raises(IndeterminateMutation):
        from cayleycoh.derived.presets import block_E

        from cayleycoh.derived.mutations import mutate_left_block

        mutate_left_block(block_E(0), preset("R"))


def test_euler_matrix_is_unimodular():
    m = euler_matrix(cg15())
    assert is_upper_unitriangular(m) and determinant(m) == 1


def test_determinant_small_cases():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_lefschetz_blocks():
    blocks = cg15_blocks()
    assert [len(b) for b in blocks] == [5, 4, 3, 3]
    assert lefschetz_validate(blocks)
    assert not lefschetz_validate([blocks[1], blocks[0]])


def test_all_chi_checks_pass():
    rep = chi_report()
    assert len(rep) == 19 and all(rep.values())


def test_chi_check_catches_corruption():
    seq = list(exact_sequences()["koszul n=1"])
    seq[1] = FormalComplex.of(seq[1].terms[0].bundle.scaled(2))
    assert not sequence_consistent(seq)
