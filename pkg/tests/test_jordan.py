from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exjordan import jordan as jd
from exjordan import octonion as oc
from exjordan.albert import AlbertElem
from exjordan.exactfield import I, ONE, ZERO, Scalar
from exjordan.exactlinalg import Matrix
from exjordan.octonion import Octonion, basis
from exjordan._ztensor import ZTensor

from conftest import octonions

VB, TB, VA, M12 = jd.bicayley_pair(), jd.bicayley_triple(), jd.albert_pair(), jd.m12_pair()
ZERO8 = Octonion.zero()
ONE8 = Octonion.one()


def bvec(x1: Octonion, x2: Octonion) -> tuple:
    return x1.coords + x2.coords


def split(v) -> tuple[Octonion, Octonion]:
    return Octonion(tuple(v[:8])), Octonion(tuple(v[8:]))


def test_bicayley_examples():
    y1, y2 = basis("u2") + basis("e1").scale(3), basis("v1")
    assert VB.quadratic("+", bvec(ONE8, ZERO8), bvec(y1, y2)) == bvec(y1.conj(), ZERO8)
    x, y = basis("u1") - basis("v3"), basis("e2") + basis("u2")
    assert VB.triple("+", bvec(ZERO8, ONE8), bvec(ZERO8, x), bvec(y, ZERO8)) == bvec(x * y, ZERO8)
    xs, _ = oc.cayley_dickson_basis()
    for xi in xs[1:]:
        got = VB.triple("+", bvec(xi, ZERO8), bvec(ONE8, ZERO8), bvec(ZERO8, ONE8))
        assert got == bvec(ZERO8, -xi)


def test_albert_pair_examples():
    e1, e2 = AlbertElem.E(1).vector(), AlbertElem.E(2).vector()
    y = (AlbertElem.iota(2, basis("u1")) + AlbertElem.E(3)).vector()
    assert VA.quadratic("+", AlbertElem.one().vector(), y) == y
    assert not any(VA.quadratic("+", e1, e2))
    assert VA.trace_form(e1, e1) == ONE


def test_m12_examples():
    y1, y2 = basis("u1") + basis("e2"), basis("v3")
    assert M12.quadratic("+", bvec(ONE8, ZERO8), bvec(y1, y2)) == bvec(y1, ZERO8)
    assert M12.quadratic("-", bvec(ONE8, ZERO8), bvec(y1, y2)) == bvec(y1, ZERO8)
    assert M12.quadratic("+", bvec(ZERO8, ONE8), bvec(y1, y2)) == bvec(ZERO8, y2)


def test_isomorphism_with_m12():
    plus, minus = jd.m12_isomorphism()
    assert jd.verify_pair_isomorphism(VB, M12, plus, minus)
    eye = ZTensor.identity(16)
    assert jd.verify_pair_isomorphism(VB, VB, eye, eye)
    flip = np.eye(16, dtype=np.int64)
    flip[3, 3] = -1
    assert not jd.verify_pair_isomorphism(VB, VB, ZTensor.from_int(flip), eye)
    with pytest.raises(ValueError):
        jd.verify_pair_isomorphism(VB, VA, eye, eye)


def test_operators():
    x = bvec(basis("e1"), ZERO8)
    y = bvec(basis("u1"), basis("v2"))
    q, d, b = jd.operators(VB, "+", x, y)
    z = bvec(basis("u3"), basis("e2"))
    assert d.apply(z) == VB.triple("+", x, y, z)
    assert q.rank() == 1
    _, _, b0 = jd.operators(VB, "+", [0] * 16, [0] * 16)
    assert b0 == Matrix.identity(16)


def test_linear_axioms_bicayley():
    for s in (VB, TB, M12):
        rep = jd.verify_linear_axioms(s)
        assert rep.ok, rep.violations[:3]


def test_corrupted_system_fails():
    t = VB.tensors["+"].to_scalars()
    t[0, 1, 2, 3] = t[0, 1, 2, 3] + 1
    t[2, 1, 0, 3] = t[2, 1, 0, 3] + 1
    bad = VB.with_tensors({"+": ZTensor.from_scalars(t), "-": VB.tensors["-"]}, name="corrupted")
    assert not jd.verify_linear_axioms(bad).ok
    assert not jd.verify_quadratic_axioms(bad, seed=0, trials=5).ok


def test_quadratic_axioms_bicayley():
    assert jd.verify_quadratic_axioms(VB, seed=0, trials=50).ok
    with pytest.raises(ValueError):
        jd.verify_quadratic_axioms(VB, trials=0)


def test_peirce_bicayley():
    e = (bvec(basis("e1"), ZERO8), bvec(basis("e2"), ZERO8))
    dec = jd.peirce(VB, *e)
    assert dec.ok
    assert dec.dims["+"][0] == 1 and sum(dec.dims["+"]) == 16
    with pytest.raises(ValueError, match="not an idempotent"):
        jd.peirce(VB, e[0], e[0])


def test_peirce_albert():
    e3 = AlbertElem.E(3).vector()
    dec = jd.peirce(VA, e3, e3)
    assert dec.ok and dec.dims["+"][1] == 16
    one = AlbertElem.one().vector()
    assert jd.peirce(VA, one, one).dims["+"] == (27, 0, 0)
    assert jd.albert_peirce_one_is_bicayley()


def test_complete_idempotent():
    x = bvec(ONE8, ZERO8)
    assert jd.complete_idempotent(VB, "+", x) == (x, x)
    e = jd.complete_idempotent(VB, "+", bvec(basis("e1"), ZERO8))
    minus1, minus2 = split(e[1])
    assert minus2.is_zero() and all(not c for k, c in enumerate(minus1.coords) if k != 1)
    e1 = AlbertElem.E(1).vector()
    assert jd.complete_idempotent(VA, "+", e1) == (e1, e1)
    with pytest.raises(ValueError):
        jd.complete_idempotent(VB, "+", [0] * 16)


def test_rank_element():
    assert jd.rank_element(VB, "+", [0] * 16) == 0
    assert jd.rank_element(VB, "+", bvec(basis("e1"), ZERO8)) == 1
    assert jd.rank_element(VB, "+", bvec(ONE8, ZERO8)) == 2
    assert jd.rank_element(VA, "+", AlbertElem.E(1).vector()) == 1
    with pytest.raises(ValueError):
        jd.rank_element(M12, "+", bvec(ONE8, ZERO8))


def test_orbit_labels():
    assert str(jd.orbit_label_triple(bvec(basis("e1"), ZERO8))) == "O1"
    lab = jd.orbit_label_triple(bvec(ONE8, ONE8.scale(I)))
    assert lab.name == "O2" and lab.value == ZERO
    lab = jd.orbit_label_triple(bvec(ONE8, ZERO8))
    assert lab.name == "O2" and lab.value == ONE
    assert jd.orbit_label_triple([0] * 16).name == "O0"


def test_trace_forms():
    assert jd.trace_matches_octonion_norm()
    tr = VA.trace.to_scalars()
    for a in range(27):
        for b in range(27):
            want = AlbertElem.basis(a) * AlbertElem.basis(b)
            assert tr[a, b] == sum(want.alphas, ZERO)


@given(octonions(), octonions())
def test_triple_q_of_x_is_qx_times_x(x1, x2):
    x = bvec(x1, x2)
    q = x1.norm() + x2.norm()
    assert TB.quadratic("+", x, x) == tuple(q * c for c in x)


@given(octonions(), octonions())
def test_triple_is_twice_quadratic(x1, x2):
    x, y = bvec(x1, x2), bvec(x2, x1.conj())
    assert VB.triple("+", x, y, x) == tuple(2 * c for c in VB.quadratic("+", x, y))


@given(octonions(), octonions())
def test_orbit_matches_rank(x1, x2):
    x = bvec(x1, x2)
    assert (jd.orbit_label_triple(x).name == "O1") == (jd.rank_element(TB, "+", x) == 1)
