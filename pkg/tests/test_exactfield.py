from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from exjordan.exactfield import (HALF, I, OMEGA, ONE, SQRT2, ZERO, Scalar, arith, constant,
                                 deserialize, invert, reduce, serialize, zeta_power)

from conftest import scalars


def test_defining_relation():
    assert reduce([0] * 8 + [1]) == reduce([-1, 0, 0, 0, 1])
    assert reduce([0]) == ZERO
    assert reduce([0] * 24 + [1]) == ONE


def test_named_constants():
    assert arith("mul", I, I) == Scalar.of(-1)
    assert arith("add", OMEGA, arith("add", OMEGA * OMEGA, ONE)) == ZERO
    assert OMEGA ** 3 == ONE and OMEGA != ONE
    assert SQRT2 * SQRT2 == Scalar.of(2)
    assert constant("sqrt2") == SQRT2 and constant("omega") == OMEGA and constant("i") == I
    assert constant("rational", 2, 4) == HALF


def test_sqrt2_is_zeta3_plus_inverse():
    assert SQRT2 == zeta_power(3) + zeta_power(-3)


def test_inverses():
    assert invert(ONE) == ONE
    assert invert(I) == -I
    assert invert(ONE + I) == (ONE - I) * HALF


def test_errors():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        invert(ZERO)
    with pytest.raises(ZeroDivisionError):
        constant("rational", 1, 0)
    with pytest.raises(ValueError):
        arith("pow", ONE, ONE)


def test_canonical_fractions():
    s = Scalar.from_ints([2, 4, 0, 0, 0, 0, 0, 6], 4)
    assert serialize(s) == ["1/2", "1", "0", "0", "0", "0", "0", "3/2"]
    assert s.coeffs[0] == Fraction(1, 2)


@given(scalars(), scalars(), scalars())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(scalars(nonzero=True))
def test_field_inverse(a):
    assert a * invert(a) == ONE


@given(scalars())
def test_serialization_round_trip(a):
    assert deserialize(serialize(a)) == a
