from fractions import Fraction

import pytest
from hypothesis import given

from strategies import nonzero_scalars, scalars
from ydlab.scalar import ONE, ZERO, DivisionByZero, Scalar, conjugate, scalar

I = Scalar(0, 1)


def test_product_of_conjugates():
    x = Scalar(Fraction(1, 2), 1)
    assert x * x.conjugate() == Scalar(Fraction(5, 4))
    assert (x * x.conjugate()).is_real()


def test_conjugate_examples():
    assert Scalar(Fraction(1, 2), 3).conjugate() == Scalar(Fraction(1, 2), -3)
    assert Scalar(7).conjugate() == Scalar(7)
    assert conjugate(I * Scalar(1, 1)) == Scalar(-1, -1)


def test_integral_parts_normalize():
    x = Scalar(Fraction(4, 2), Fraction(6, 3))
    assert type(x.re) is int and type(x.im) is int
    assert Scalar(Fraction(1, 2)) + Scalar(Fraction(1, 2)) == ONE


def test_mixed_operands():
    assert Scalar(2) * 3 == Scalar(6)
    assert 1 - Scalar(0, 1) == Scalar(1, -1)
    assert Fraction(1, 3) + Scalar(Fraction(2, 3)) == 1
    assert Scalar(1) != "1"


def test_no_float_coercion():
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        Scalar(1) + 0.5


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(DivisionByZero):
        ZERO.inverse()


def test_str_format():
    assert str(ONE) == "1/1"
    assert str(Scalar(Fraction(-1, 2), 3)) == "-1/2+3/1*i"
    assert str(Scalar(0, -1)) == "0/1-1/1*i"


def test_scalar_builder():
    assert scalar("1/2+1/3*i") == Scalar(Fraction(1, 2), Fraction(1, 3))
    assert scalar(ONE) is ONE
    assert scalar(2, 1) == Scalar(2, 1)


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.re = 2


@given(scalars, scalars, scalars)
def test_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x * ONE == x and x + ZERO == x
    assert x - x == ZERO


@given(nonzero_scalars, scalars)
def test_inverse(x, y):
    assert x * x.inverse() == ONE
    assert (y / x) * x == y


@given(scalars, scalars)
def test_conjugation(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert x.conjugate().conjugate() == x
    assert x * x.conjugate() == Scalar(x.norm2())


@given(scalars)
def test_parse_round_trip(x):
    assert Scalar.parse(str(x)) == x


@given(scalars)
def test_hash_matches_equality(x):
    assert hash(x) == hash(Scalar(x.re, x.im))
    if x.is_real():
        assert hash(x) == hash(x.re)
