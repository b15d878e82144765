"""Weights, Schur polynomials and the Littlewood-Richardson kernels."""
from __future__ import annotations

import importlib
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleycoh.schur import _lr_py
from cayleycoh.schur.character import schur_polynomial
from cayleycoh.schur.lr import KERNEL, lr_tensor
from cayleycoh.weights import gl_dimension, normalize_sl, sort_to_dominant


def dominant(m, lo=-3, hi=4):
    return st.lists(st.integers(lo, hi), min_size=m, max_size=m).map(lambda w: tuple(sorted(w, reverse=True)))


def poly_product(a, b):
    out = {}
    for e1, c1 in a:
        for e2, c2 in b:
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


@pytest.mark.parametrize(
    "weight, dim",
    [((1, 0, 0), 3), ((2, 1, 0), 8), ((1, 1, 0, 0, 0, 0, 0), 21), ((2, 1, 0, 0, 0, 0, 0), 112), ((0, 0, -3), 10)],
)
def test_weyl_dimension_known_values(weight, dim):
    assert gl_dimension(weight, len(weight)) == dim


@given(st.integers(1, 4).flatmap(dominant))
@settings(max_examples=60, deadline=None)
def test_ssyt_count_matches_weyl_dimension(w):
    assert sum(c for _, c in schur_polynomial(w)) == gl_dimension(w, len(w))


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(dominant(m, -2, 3), dominant(m, -2, 3))))
@settings(max_examples=60, deadline=None)
def test_lr_matches_character_product(pair):
    lam, mu = pair
    m = len(lam)
    expected = poly_product(schur_polynomial(lam), schur_polynomial(mu))
    got = {}
    for nu, c in lr_tensor(lam, mu, m).items():
        for e, k in schur_polynomial(nu):
            got[e] = got.get(e, 0) + c * k
    assert {e: c for e, c in got.items() if c} == expected


@given(st.integers(1, 5).flatmap(lambda m: st.tuples(dominant(m, -3, 3), dominant(m, -3, 3))))
@settings(max_examples=80, deadline=None)
def test_lr_conserves_dimension(pair):
    lam, mu = pair
    m = len(lam)
    total = sum(c * gl_dimension(nu, m) for nu, c in lr_tensor(lam, mu, m).items())
    assert total == gl_dimension(lam, m) * gl_dimension(mu, m)


def test_lr_truncates_long_shapes():
    # Lambda^2 (x) Lambda^2 for GL(3): the (1,1,1,1) shape does not fit
    assert lr_tensor((1, 1, 0), (1, 1, 0), 3) == {(2, 2, 0): 1, (2, 1, 1): 1}


@pytest.mark.skipif(KERNEL != "cython", reason="compiled kernel not built")
@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), dominant(m, 0, 4), dominant(m, 0, 4))))
@settings(max_examples=100, deadline=None)
def test_compiled_kernel_agrees_with_python(args):
    m, lam, mu = args
    compiled = importlib.import_module("cayleycoh.schur._lr")
    assert compiled.lr_coefficients(list(lam), list(mu), m) == _lr_py.lr_coefficients(list(lam), list(mu), m)


def test_pure_python_switch(monkeypatch):
    import cayleycoh.schur.lr as lr

    monkeypatch.setenv("CAYLEYCOH_PURE_PYTHON", "1")
    try:
        reloaded = importlib.reload(lr)
        assert reloaded.KERNEL == "python"
        assert reloaded.lr_tensor((2, 1, 0), (1, 0, 0), 3) == {(3, 1, 0): 1, (2, 2, 0): 1, (2, 1, 1): 1}
    finally:
        monkeypatch.delenv("CAYLEYCOH_PURE_PYTHON")
        importlib.reload(lr)


def test_sort_to_dominant_reports_repeats_and_inversions():
    srt, inv, rep = sort_to_dominant((1, 3, 2))
    assert tuple(srt) == (3, 2, 1) and inv == 2 and not rep
    assert sort_to_dominant((2, 2, 0))[2]


def test_normalize_sl_forgets_det():
    assert normalize_sl((0, 0, -1)) == normalize_sl((1, 1, 0))
    assert prod(1 for _ in range(3)) == 1


@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.just(m), dominant(m, 0, 4), dominant(m, 0, 4))))
@settings(max_examples=150, deadline=None)
def test_python_kernel_matches_lrcalc(args):
    lrcalc = pytest.importorskip("lrcalc")
    m, lam, mu = args
    strip = lambda w: [x for x in w if x]  # noqa: E731
    pad = lambda nu: tuple(nu) + (0,) * (m - len(nu))  # noqa: E731
    expected = {pad(nu): c for nu, c in lrcalc.mult(strip(lam), strip(mu), m).items()}
    assert _lr_py.lr_coefficients(list(lam), list(mu), m) == expected
