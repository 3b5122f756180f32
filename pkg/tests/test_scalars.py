from fractions import Fraction

import pytest
from hypothesis import given

from synthkit import GaussianRational, gaussian
from synthkit.scalars import I, ONE, ZERO

from conftest import nonzero_scalars, scalars


def test_construction_coerces_to_fractions():
    s = GaussianRational(1, 2)
    assert s.re == Fraction(1) and s.im == Fraction(2)
    assert gaussian("3/2", "1/4") == GaussianRational(Fraction(3, 2), Fraction(1, 4))


def test_i_squares_to_minus_one():
    assert I * I == GaussianRational(-1)


def test_equality_with_plain_numbers():
    assert GaussianRational(3) == 3
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert GaussianRational(0, 1) != 1


def test_division_exact():
    a = gaussian(1, 1)
    assert a / a == ONE
    assert (ONE / gaussian(0, 1)) == gaussian(0, -1)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_negative_powers():
    two = GaussianRational(2)
    assert two ** -2 == GaussianRational(Fraction(1, 4))
    assert (I ** -1) == -I


def test_str_forms():
    assert str(gaussian("3/2", "1/4")) == "3/2+1/4i"
    assert str(gaussian(0, 1)) == "i"
    assert str(gaussian(0, -1)) == "-i"
    assert str(gaussian(Fraction(3, 2), -1)) == "3/2-i"
    assert str(gaussian(-2)) == "-2"
    assert str(gaussian(0, Fraction(-1, 2))) == "-1/2i"


@given(a=scalars, b=scalars, c=scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(a=nonzero_scalars)
def test_inverse_cancels(a):
    assert a * a.inverse() == ONE
    assert a.norm() == (a * a.conjugate()).re
