import json

import pytest
from hypothesis import given, settings, strategies as st

from infbraid import associator as asc
from infbraid.scalars import Q
from infbraid.series import TruncSeries, bracket, series_exp

AB = ("A", "B")


@pytest.fixture(scope="module")
def phi4():
    return asc.solve(Q(1), 4, even=True)


def test_lambda_zero_is_trivial():
    a = asc.solve(Q(0), 3)
    assert a.phi == TruncSeries.one(AB, 3)
    assert asc.verify(asc.trivial(3)).ok


def test_degree2_value():
    psi = asc.solve(Q(1), 2).psi
    A, B = TruncSeries.gen(AB, 2, "A"), TruncSeries.gen(AB, 2, "B")
    assert psi == bracket(A, B).scale(Q(1, 6))


def test_taylor3_coefficients():
    phi = asc.taylor3(1, 1).phi
    assert phi.coeff((0, 0, 1)) == 1 and phi.coeff((0, 1, 0)) == -2 and phi.coeff((1, 0, 0)) == 1
    # minus the mirror [B,[B,A]]
    assert phi.coeff((1, 1, 0)) == -1 and phi.coeff((1, 0, 1)) == 2 and phi.coeff((0, 1, 1)) == -1
    assert asc.degree3_alpha(asc.taylor3(1, 1)) == 1
    assert asc.verify(asc.taylor3(1, 0)).ok


def test_bad_candidate_fails_hexagon():
    A, B = TruncSeries.gen(AB, 2, "A"), TruncSeries.gen(AB, 2, "B")
    bad = asc.Associator(Q(1), 2, 1 + bracket(A, B))
    rep = asc.verify(bad)
    assert not rep.ok and not rep.hexagon.is_zero()


def test_solution_even_and_grouplike(phi4):
    assert asc.is_even(phi4)
    assert asc.is_grouplike(phi4.phi)
    assert asc.verify(phi4).summary() == {"grouplike": True, "inverse": True, "hexagon": True,
                                          "pentagon": True, "central_shift": True}


@settings(max_examples=6, deadline=None)
@given(st.integers(-3, 3).filter(bool).map(Q))
def test_rescaling(mu):
    a = asc.solve(Q(1), 3, even=True).rescale(mu)
    assert a.lam == mu
    assert asc.verify(a).ok
    assert a.phi == asc.solve(mu, 3, even=True).phi


def test_json_roundtrip(phi4):
    back = asc.Associator.from_json(json.loads(json.dumps(phi4.to_json())))
    assert back.phi == phi4.phi and back.lam == phi4.lam


def test_lyndon_words():
    assert [len(asc.lyndon_words(2, d)) for d in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_solve_degree_guard():
    with pytest.raises(ValueError):
        asc.solve(Q(1), 7)


def test_non_grouplike_rejected():
    A = TruncSeries.gen(AB, 2, "A")
    rep = asc.verify(asc.Associator(Q(0), 2, 1 + A * A))
    assert rep.grouplike
