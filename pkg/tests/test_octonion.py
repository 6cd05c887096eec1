from __future__ import annotations

import numpy as np
from hypothesis import given

from exjordan import octonion as oc
from exjordan.exactfield import ONE, ZERO, Scalar
from exjordan.octonion import Octonion, basis, cayley_dickson_basis, forms, omul, tau3

from conftest import octonions

B = [basis(k) for k in range(8)]


def test_table_entries():
    assert omul(basis("u1"), basis("u2")) == basis("v3")
    assert omul(basis("u1"), basis("v1")) == -basis("e1")
    assert omul(basis("e1"), basis("v1")).is_zero()
    assert omul(basis("v1"), basis("e1")) == basis("v1")


def test_forms():
    n, p, _, _ = forms(basis("e1"), basis("e2"))
    assert n == ZERO and p == ONE
    assert basis("e1").conj() == basis("e2")
    assert basis("u1").conj() == -basis("u1")


def test_norm_multiplicative_on_basis():
    for x in B:
        for y in B:
            assert (x * y).norm() == x.norm() * y.norm()


def test_conjugation_identities_on_basis():
    for x in B:
        assert x * x.conj() == Octonion.one().scale(x.norm())
        assert x + x.conj() == Octonion.one().scale(x.trace())


def test_cayley_dickson_basis():
    xs, deg = cayley_dickson_basis()
    assert xs[0] == Octonion.one()
    assert xs[1] * xs[1] == -Octonion.one() and xs[1].norm() == ONE
    assert [deg[k] for k in (1, 2, 4)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i in range(8):
        for j in range(8):
            assert xs[i].polar(xs[j]) == (2 * ONE if i == j else ZERO)
            prod = xs[i] * xs[j]
            k = int(np.argmax([bool(prod.polar(x)) for x in xs]))
            assert prod in (xs[k], -xs[k])
            assert deg[k] == tuple((a + b) % 2 for a, b in zip(deg[i], deg[j]))


def test_tau3():
    assert tau3(basis("u1")) == basis("u2")
    for x in B:
        assert tau3(tau3(tau3(x))) == x
        for y in B:
            assert tau3(x * y) == tau3(x) * tau3(y)


@given(octonions(), octonions())
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(octonions(), octonions())
def test_alternative(x, y):
    assert (x * x) * y == x * (x * y)
    assert y * (x * x) == (y * x) * x


@given(octonions())
def test_polar_is_linearized_norm(x):
    assert x.polar(x) == 2 * x.norm()
    assert x.trace() == x.polar(Octonion.one())
