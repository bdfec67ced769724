import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from infbraid.scalars import (Field, Q, QuadElem, format_scalar, is_rational, parse_field,
                              parse_scalar, sqrt_of)

rats = st.fractions(max_denominator=50).map(Q)
D_VALUES = st.sampled_from([2, 3, 5, -1, 6, 7])


@st.composite
def quads(draw, d=None):
    d = draw(D_VALUES) if d is None else d
    return QuadElem(draw(rats), draw(rats), d)


def test_q_refuses_floats():
    with pytest.raises(TypeError):
        Q(0.5)


def test_q_coercions():
    assert Q("3/6") == Q(1, 2) == Q(Fraction(1, 2))
    assert Q(-7) == Q("-7")


def test_sqrt_squares_to_d():
    assert sqrt_of(3) * sqrt_of(3) == 3
    assert (1 + sqrt_of(2)) * (1 - sqrt_of(2)) == -1


def test_rejects_non_squarefree():
    for d in (0, 1, 4, 12):
        with pytest.raises(ValueError):
            QuadElem(1, 1, d)


def test_mixing_fields_raises():
    with pytest.raises(ValueError):
        sqrt_of(2) + sqrt_of(3)


@given(st.integers(0, 5).flatmap(lambda _: D_VALUES).flatmap(
    lambda d: st.tuples(quads(d), quads(d), quads(d))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x - y) + y == x
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(quads())
def test_norm_is_rational_and_multiplicative(x):
    assert x * x.conj() == x.norm()
    assert is_rational(x * x.conj())


@given(st.one_of(rats, quads(3)))
def test_scalar_json_roundtrip(z):
    text = json.dumps(format_scalar(z))
    assert parse_scalar(json.loads(text), 3) == z


def test_parse_scalar_errors():
    with pytest.raises(ValueError):
        parse_scalar(["1", "2"])
    with pytest.raises(ValueError):
        parse_scalar("1.5")
    with pytest.raises(TypeError):
        parse_scalar(True)


def test_parse_field():
    assert parse_field("q") == Field()
    F = parse_field("q-sqrt:5")
    assert F(1, 2) == 1 + 2 * sqrt_of(5)
    assert str(F) == "q-sqrt:5"
    for bad in ("r", "q-sqrt:4", "q-sqrt:x"):
        with pytest.raises(ValueError):
            parse_field(bad)
    with pytest.raises(ValueError):
        Field()(1, 1)
