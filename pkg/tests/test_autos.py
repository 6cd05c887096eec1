from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given

from exjordan import autos as au
from exjordan import gradings as grd
from exjordan import octonion as oc
from exjordan.exactfield import HALF, I, OMEGA, ONE, SQRT2, Scalar
from exjordan.exactlinalg import Matrix
from exjordan.gradings import zz23_albert_elements
from exjordan.albert import AlbertElem
from exjordan.octonion import Octonion, basis

from conftest import octonions

R = SQRT2 * HALF
ONE8 = Octonion.one()
MIXED = basis("u1") + basis("e1").scale(2) - basis("v3")


def bvec(x1: Octonion, x2: Octonion) -> tuple:
    return x1.coords + x2.coords


def test_phi_one_formula():
    phi = au.build("phi_a", a=ONE8)
    x1, x2 = basis("u2") + basis("e1"), basis("v1").scale(3)
    assert phi.plus.apply(bvec(x1, x2)) == bvec(x1 - x2.conj(), x2)


def test_tau12_formula():
    t = au.build("tau12_bicayley").plus
    x1, x2 = basis("u2") + basis("e1"), basis("v1").scale(3) + basis("e2")
    assert t.apply(bvec(x1, x2)) == bvec(x2.conj(), x1.conj())


def test_parameter_validation():
    au.build("phi_a_lambda", a=ONE8.scale(-R), lam=R)
    with pytest.raises(ValueError, match="n\\(a\\) \\+ lambda\\^2 = 1"):
        au.build("phi_a_lambda", a=ONE8, lam=1)
    with pytest.raises(ValueError, match="n\\(a\\) \\+ lambda\\^2 = 1"):
        au.build("phi1", a=basis("u1"), lam=2)
    with pytest.raises(ValueError, match="lambda != 0"):
        au.build("c_lambda_mu", lam=0, mu=1)
    with pytest.raises(ValueError, match="lambda_2 != 0"):
        au.build("c_lambdas", lambdas=(1, 0, 1))
    with pytest.raises(ValueError, match="unknown map"):
        au.build("nosuch")
    with pytest.raises(ValueError, match="missing"):
        au.build("phi_a")


BUILT = [
    ("phi_a", dict(a=MIXED)),
    ("phi_hat_a", dict(a=MIXED)),
    ("c_lambda_mu", dict(lam=2, mu=OMEGA)),
    ("c_lambdas", dict(lambdas=(1, OMEGA * OMEGA, OMEGA))),
    ("c_lambdas", dict(lambdas=(I, 1, I))),
    ("tau12_albert", {}),
    ("tau12_bicayley", {}),
    ("phi_a_lambda", dict(a=ONE8.scale(-R), lam=R)),
    ("phi_a_lambda", dict(a=basis("u1") + basis("v1").scale(0), lam=1)),
    ("phi1", dict(a=ONE8.scale(-R), lam=R)),
    ("phi1", dict(a=basis("e1").scale(5) + basis("u2"), lam=-1)),
    ("equivalence_cd", {}),
]


@pytest.mark.parametrize("name,params", BUILT)
def test_built_maps_are_automorphisms(name, params):
    phi = au.build(name, **params)
    assert au.is_automorphism(phi.system, phi)


def test_swap_without_conjugation_fails():
    swap = au.LinearOpPair("swap", "bicayley_triple", au._b_map(lambda x1, x2: (x2, x1)))
    viol = au.automorphism_violations("bicayley_triple", swap, limit=1)
    assert viol and not au.is_automorphism("bicayley_triple", swap)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        au.is_automorphism("albert_pair", au.build("tau12_bicayley"))


def test_singular_map_is_not_an_automorphism():
    zero = au.LinearOpPair("zero", "bicayley_pair", Matrix.zeros(16, 16))
    assert not au.is_automorphism("bicayley_pair", zero)


@given(octonions(), octonions())
def test_phi_additive(a, b):
    ab = au.phi_a(a + b)
    c = au.compose(au.phi_a(a), au.phi_a(b))
    assert c.plus == ab.plus and c.minus == ab.minus


def test_isometries():
    ok, det = au.isometry_check(au.build("phi_a_lambda", a=ONE8.scale(-R), lam=R).plus)
    assert ok and det == ONE
    ok, det = au.isometry_check(au.build("tau12_bicayley").plus)
    assert ok and det == ONE
    ok, det = au.isometry_check(Matrix.identity(16).scale(2))
    assert not ok and det == Scalar.of(2 ** 16)


@given(octonions())
def test_phi_a_lambda_in_special_orthogonal_group(x):
    # a in span(u1, u2, u3) is isotropic, so lambda = 1 is admissible
    a = Octonion.of([0, 0] + list(x.coords[2:5]) + [0, 0, 0])
    ok, det = au.isometry_check(au.phi_a_lambda(a, 1).plus)
    assert ok and det == ONE


def test_related_triples():
    f = au._tau3_matrix()
    eye = Matrix.identity(8)
    assert au.related_triple_check(f, f, f)
    rep = au.related_triple_check(-eye, eye, -eye)
    assert rep.related and rep.tb_automorphism
    assert not au.related_triple_check(eye, -eye, eye)
    for triple in ((f, f, f), (-eye, eye, -eye)):
        assert au.related_triple_check(*triple[1:], triple[0]).related
    with pytest.raises(ValueError):
        au.related_triple_check(Matrix.identity(16), eye, eye)


def test_clifford_relations():
    rep = au.clifford_rep_checks()
    assert rep.ok, rep.failures
    assert au.Phi(ONE8).plus @ au.Phi(ONE8).plus == Matrix.identity(16)
    x = au.Psi(au.WVector.x()).plus
    assert x @ x == Matrix.identity(32)
    lhs = au.psi_word(1, (au.WVector(basis("u1")), au.WVector.e()))
    phi = au.build("phi_a", a="u1")
    assert lhs == au._block_diag(phi.plus, phi.minus)


def test_induced_tau12():
    gr = grd.catalog("cd_bicayley_pair")
    act = au.induced_on_grading("bicayley_pair", gr, au.tau12_bicayley())
    u = act.universal
    a, b = u.coordinates(("+", (1, 0, 0, 0, 0))), u.coordinates(("+", (0, 1, 0, 0, 0)))
    assert act.apply(a) == b and act.apply(b) == a
    twice = au.compose(au.tau12_bicayley(), au.tau12_bicayley())
    assert au.induced_on_grading("bicayley_pair", gr, twice).is_identity()


def test_induced_c_lambdas():
    gr = grd.catalog("z3_albert_pair")
    act = au.induced_on_grading("albert_pair", gr, au.c_lambdas(1, OMEGA * OMEGA, OMEGA))
    u = act.universal
    base = ("+", (1, 0, 0, 0))
    a = u.coordinates(base)
    a3 = u.combine((1, ("+", (1, 0, 0, 1))), (-1, base))
    assert act.apply(a) == u.reduce(np.add(a, a3))


def test_generic_phi_a_does_not_stabilize_cartan_grading():
    gr = grd.catalog("cartan_bicayley_pair")
    assert au.induced_on_grading("bicayley_pair", gr, au.phi_a(MIXED)) is None
    with pytest.raises(ValueError):
        au.induced_on_grading("bicayley_pair", gr, au.Phi(MIXED))


def test_equivalence_images():
    phi = au.equivalence_cd()
    el = zz23_albert_elements()
    assert phi.plus.apply(AlbertElem.E(2).vector()) == el["S+"].scale(HALF).vector()
    xs, _ = oc.cayley_dickson_basis()
    for x in xs:
        assert phi.plus.apply(AlbertElem.iota(2, x).vector()) == el[f"nu-(x{xs.index(x)})"].scale(R).vector()


def test_weyl_evidence():
    rep = au.weyl_evidence()
    assert rep.ok, rep.failures
    assert len(rep.checks) >= 15
