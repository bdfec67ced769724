import pytest
from hypothesis import given, settings, strategies as st

from infbraid import linalg as la
from infbraid.scalars import Q
from infbraid.series import (HMatrix, HSeries, TruncSeries, bracket, hexp, hmatrix_exp,
                             is_grouplike, series_exp, series_log, shuffle, substitute)

AB = ("A", "B")
D = 4
small = st.integers(-3, 3).map(Q)


@st.composite
def lie_elements(draw, D=D):
    """Random combination of A, B, [A,B], [A,[A,B]], [B,[A,B]]."""
    A = TruncSeries.gen(AB, D, "A")
    B = TruncSeries.gen(AB, D, "B")
    gens = [A, B, bracket(A, B), bracket(A, bracket(A, B)), bracket(B, bracket(A, B))]
    out = TruncSeries.zero(AB, D)
    for g in gens:
        out = out + g.scale(draw(small))
    return out


@st.composite
def series(draw, D=D):
    words = [(), (0,), (1,), (0, 1), (1, 0), (0, 0, 1), (1, 1, 0, 0)]
    return TruncSeries(AB, D, {w: draw(small) for w in words})


@st.composite
def hmatrices(draw, N=2, D=3, unit=False):
    coeffs = [[[draw(small) for _ in range(N)] for _ in range(N)] for _ in range(D + 1)]
    if unit:
        coeffs[0] = la.identity(N)
    return HMatrix(coeffs, D)


@given(lie_elements())
def test_exp_log_roundtrip(L):
    assert series_log(series_exp(L)) == L


@given(lie_elements())
def test_exp_of_lie_is_grouplike(L):
    assert is_grouplike(series_exp(L))


def test_non_grouplike_detected():
    A = TruncSeries.gen(AB, 3, "A")
    assert not is_grouplike(1 + A * A)


@settings(max_examples=40)
@given(series(), series(), series())
def test_series_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_shuffle_counts():
    sh = shuffle((0, 1), (2,))
    assert sum(sh.values()) == 3
    assert shuffle((0,), (0,)) == {(0, 0): 2}


def test_word_json_roundtrip():
    A = TruncSeries.gen(AB, 3, "A")
    B = TruncSeries.gen(AB, 3, "B")
    S = 1 + bracket(A, B).scale(Q(1, 6)) + A * A * B
    assert TruncSeries.from_json(S.to_json()) == S


def test_compose_swaps_letters():
    A = TruncSeries.gen(AB, 3, "A")
    B = TruncSeries.gen(AB, 3, "B")
    S = A * B * B
    assert S.compose({"A": B, "B": A}) == B * A * A
    with pytest.raises(ValueError):
        S.compose({"A": 1 + B, "B": A})


@given(st.lists(small, min_size=4, max_size=4))
def test_hseries_exp_log(c):
    s = HSeries([Q(0)] + c[1:], 3)
    assert s.exp().log() == s
    u = HSeries([Q(1)] + c[1:], 3)
    assert u * u.inverse() == HSeries.const(1, 3)


@given(hmatrices(unit=True), hmatrices(unit=True))
def test_hmatrix_inverse_and_det(X, Y):
    I = HMatrix.identity(2, 3)
    assert X * X.inverse() == I
    assert (X * Y).det() == X.det() * Y.det()


@given(hmatrices(), hmatrices())
def test_hmatrix_transpose_and_twist(X, Y):
    assert (X * Y).transpose() == Y.transpose() * X.transpose()
    assert (X * Y).eps() == X.eps() * Y.eps()
    assert (X * Y).subs_scale(Q(3)) == X.subs_scale(Q(3)) * Y.subs_scale(Q(3))


def test_hexp_matches_hmatrix_exp():
    X = [[Q(1), Q(2)], [Q(0), Q(-1)]]
    H = HMatrix([la.zeros(2), X], 4)
    assert hexp(X, 4) == hmatrix_exp(H)
    assert hexp(X, 4) * hexp(X, 4, Q(-1)) == HMatrix.identity(2, 4)


def test_substitute_commuting_images_is_exp_of_sum():
    A = TruncSeries.gen(AB, 3, "A")
    B = TruncSeries.gen(AB, 3, "B")
    S = series_exp(A + B)
    X = [[Q(1), Q(0)], [Q(0), Q(2)]]
    Y = [[Q(3), Q(0)], [Q(0), Q(-1)]]
    got = substitute(S, {"A": HMatrix.constant(X, 3), "B": HMatrix.constant(Y, 3)}, 1)
    assert got == hexp(la.mat_add(X, Y), 3)
