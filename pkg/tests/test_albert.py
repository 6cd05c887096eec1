from __future__ import annotations

import numpy as np
from hypothesis import given, strategies as st

from exjordan import octonion as oc
from exjordan.albert import (AlbertElem, albert_rank, amul, bilinear_trace, cubic_forms, matrix_model_product,
                             product_tensor, sharp, trace, u_op)
from exjordan.exactfield import HALF, ONE, ZERO, Scalar
from exjordan.exactlinalg import Matrix

from conftest import octonions, small

E1, E2, E3 = (AlbertElem.E(i) for i in (1, 2, 3))
ONE_A = AlbertElem.one()
BASIS = [AlbertElem.basis(k) for k in range(27)]


@st.composite
def albert_elems(draw):
    return AlbertElem.from_vector(draw(st.lists(small, min_size=27, max_size=27)))


def test_product_rules():
    a, b = oc.basis("u1") + oc.basis("e1"), oc.basis("v2").scale(3)
    assert amul(E1, AlbertElem.iota(1, a)).is_zero()
    assert amul(E2, AlbertElem.iota(1, a)) == AlbertElem.iota(1, a).scale(HALF)
    assert amul(AlbertElem.iota(1, a), AlbertElem.iota(2, b)) == AlbertElem.iota(3, a.conj() * b.conj())
    assert amul(AlbertElem.iota(1, a), AlbertElem.iota(1, a)) == (E2 + E3).scale(4 * a.norm())


def test_cubic_form_examples():
    assert cubic_forms(ONE_A) == (Scalar.of(3), Scalar.of(3), ONE)
    assert cubic_forms(E1) == (ONE, ZERO, ZERO)
    assert cubic_forms(E1 + E2 + AlbertElem.iota(3, oc.basis("e1")))[2] == ZERO


def test_sharp_examples():
    assert sharp(E1).is_zero()
    assert sharp(E1 + E2) == E3
    assert sharp(ONE_A) == ONE_A


def test_u_examples():
    y = AlbertElem.iota(2, oc.basis("u3")) + E1.scale(5)
    assert u_op(ONE_A, y) == y
    assert u_op(E1, E1) == E1
    assert u_op(E1, E2).is_zero()


def test_product_tensor_matches_elementwise_product():
    m = product_tensor().to_scalars()
    for a in range(27):
        for b in range(27):
            assert tuple(m[a, b]) == amul(BASIS[a], BASIS[b]).vector()


def _dim_im_u(x: AlbertElem) -> int:
    return Matrix.from_columns([u_op(x, b).vector() for b in BASIS]).rank()


def test_rank_examples_and_oracle():
    reps = [AlbertElem.zero(), E1, E1 + E2, ONE_A]
    assert [albert_rank(x) for x in reps] == [0, 1, 2, 3]
    assert [_dim_im_u(x) for x in reps] == [0, 1, 10, 27]


@given(st.sampled_from([1, 2, 3]), st.integers(-5, 5).filter(bool))
def test_rank_is_homogeneous(k, lam):
    x = [E1, E1 + E2, ONE_A][k - 1].scale(lam)
    assert albert_rank(x) == k
    assert _dim_im_u(x) == [1, 10, 27][k - 1]


@given(albert_elems())
def test_degree_three_identity(x):
    t, s, n = cubic_forms(x)
    x2 = amul(x, x)
    x3 = amul(x, x2)
    assert (x3 - x2.scale(t) + x.scale(s) - ONE_A.scale(n)).is_zero()
    assert amul(x2, x) == x3


@given(albert_elems())
def test_adjoint_identities(x):
    t, s, n = cubic_forms(x)
    assert sharp(sharp(x)) == x.scale(n)
    assert s == HALF * (t * t - trace(amul(x, x)))


@given(albert_elems(), albert_elems(), albert_elems())
def test_trace_form_associative(x, y, z):
    assert bilinear_trace(x, y) == bilinear_trace(y, x)
    assert trace(amul(amul(x, y), z)) == trace(amul(x, amul(y, z)))


@given(albert_elems(), albert_elems())
def test_u_operator_formulas_agree(x, y):
    u_op(x, y)  # raises on disagreement


@given(albert_elems(), albert_elems())
def test_matrix_model_oracle(x, y):
    assert amul(x, y) == matrix_model_product(x, y)
