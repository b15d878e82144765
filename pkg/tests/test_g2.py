"""G2 forms, the bracket, CG points, i_lambda and the quadric ranks."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from cayleycoh.g2 import (
    LAMBDA,
    LAMBDA_PUBLISHED,
    O0,
    O1,
    O2,
    ORBIT_POINTS,
    GenericityError,
    ImpossibleState,
    MultiVector,
    NotOnCG,
    SubspaceBasis,
    bracket,
    convolve,
    e,
    forms,
    i_lambda_matrix,
    is_cg_point,
    jacobiator,
    jacobiator_constant,
    lie_type,
    nu_matches_published,
    orbit_type,
    phi_lambda_rank,
    published_lambda_compatible,
    segre_check,
    segre_conic,
    subalgebra_conic,
    sweep,
    veronese_quadric,
    wedge,
    wedge_all,
)
from cayleycoh.g2.forms import flip_e0, q_pair
from cayleycoh.g2.linalg import kernel, rank, solve_in_span
from cayleycoh.g2.sampling import cg_point, stream, symmetric_of_rank

BASIS = [MultiVector.basis(i) for i in range(7)]


def test_wedge_is_graded_commutative():
    u, v = e("a"), e("-b")
    assert wedge(u, v) == -wedge(v, u)
    assert wedge(u, u).is_zero()


def test_convolution_of_volume_with_top_form_is_scalar():
    vol = wedge_all(BASIS)
    top = MultiVector.basis(*range(7), covariant=True)
    assert convolve(top, vol).coeffs == {(): Fraction(1)}


def test_linalg_rank_and_kernel():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(m) == 2
    (k,) = kernel(m)
    assert all(sum(Fraction(a) * b for a, b in zip(row, k)) == 0 for row in m)
    assert solve_in_span([[1, 0, 0], [0, 1, 0]], [2, 3, 0]) == [2, 3]
    assert solve_in_span([[1, 0, 0]], [0, 1, 0]) is None


def test_bracket_is_antisymmetric():
    for x, y in combinations(BASIS, 2):
        assert bracket(x, y) == -bracket(y, x)


def test_bracket_is_q_invariant():
    # q([x, y], z) is alternating in x, y, z
    for x, y, z in combinations(BASIS, 3):
        assert q_pair(bracket(x, y), z) == q_pair(bracket(y, z), x) == -q_pair(bracket(x, z), y)


def test_nu_and_calibration():
    assert nu_matches_published()
    assert forms().calibration == -4


def test_printed_lambda_is_not_compatible_but_its_e0_flip_is():
    assert not published_lambda_compatible()
    assert flip_e0(LAMBDA_PUBLISHED) == LAMBDA


def test_jacobiator_constant():
    assert jacobiator_constant() == -3
    assert jacobiator_constant(LAMBDA_PUBLISHED) is None


def test_jacobiator_on_random_triple():
    x, y, z = e("a") + e("0"), e("-b") + e("c").scaled(2), e("-c") - e("b")
    lam = convolve(forms().lam, wedge_all((x, y, z)))
    from cayleycoh.g2.forms import q_raise

    assert jacobiator(x, y, z) == q_raise(lam).scaled(-3)


@pytest.mark.parametrize("orbit, lie, conic", [(O0, "semisimple", 3), (O1, "solvable", 2), (O2, "nilpotent", 1)])
def test_orbit_points(orbit, lie, conic):
    U = ORBIT_POINTS[orbit]
    assert is_cg_point(U)
    assert orbit_type(U) == orbit
    assert lie_type(U) == lie
    assert subalgebra_conic(U)[1] == conic
    assert i_lambda_matrix(U)[1] == 3


def test_non_point_is_rejected():
    U = SubspaceBasis.of("0", "a", "b")
    assert not is_cg_point(U)
    with pytest.raises(NotOnCG):
        orbit_type(U)


def test_dependent_basis_is_rejected():
    with pytest.raises(ValueError):
        SubspaceBasis((e("a"), e("a").scaled(2)))


def test_phi_rank_at_fixed_planes():
    assert phi_lambda_rank(SubspaceBasis.of("a", "-a")) == 4
    assert phi_lambda_rank(SubspaceBasis.of("0", "a")) == 2


@pytest.mark.parametrize("orbit", [O0, O1, O2])
def test_sampled_points_land_in_the_requested_orbit(orbit):
    for i in range(5):
        U = cg_point(stream(7, "t", i), orbit)
        assert is_cg_point(U) and orbit_type(U) == orbit


def test_published_lambda_misses_sampled_points():
    hits = sum(is_cg_point(cg_point(stream(1, "p", i)), LAMBDA_PUBLISHED) for i in range(10))
    assert hits == 0


def test_veronese_ranks():
    assert veronese_quadric([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank == 6
    rep = veronese_quadric([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert rep.rank == 4
    assert rank([list(k) for k in rep.kernel] + [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]) == 2
    assert veronese_quadric([[1, 0, 0], [0, 0, 0], [0, 0, 0]]).rank == 3


def test_veronese_rejects_asymmetric():
    with pytest.raises(ValueError):
        veronese_quadric([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_veronese_random_rank_three():
    for i in range(10):
        assert veronese_quadric(symmetric_of_rank(stream(3, "v", i), 3)).rank == 6


def test_segre_genericity_error():
    s = [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]]
    assert segre_conic(s).rank == 0
    with pytest.raises(GenericityError):
        segre_check(s)


def test_sweeps_do_not_depend_on_workers():
    one = sweep("phi", 40, seed=5, jobs=1)
    two = sweep("phi", 40, seed=5, jobs=2)
    assert one.as_dict() == two.as_dict()


def test_cg_sweep_small():
    res = sweep("cg", 30, seed=0)
    assert res.ok
    assert set(res.tally) <= {"O0/semisimple", "O1/solvable", "O2/nilpotent"}


def test_impossible_state_is_an_error_type():
    assert issubclass(ImpossibleState, RuntimeError)
