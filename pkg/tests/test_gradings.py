from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exjordan import gradings as grd
from exjordan import jordan as jd
from exjordan.albert import AlbertElem, amul
from exjordan.gradings import AbelianGroup, catalog

EXPECTED_TYPES = {
    "cd_bicayley_pair": (32,), "cartan_bicayley_pair": (32,), "cd_albert_pair": (54,),
    "z3_albert_pair": (54,), "cartan_albert_pair": (54,), "cd_bicayley_triple": (16,),
    "isotropic_cd_bicayley_triple": (16,), "cartan_bicayley_triple": (16,),
    "cartan_albert": (24, 0, 1), "z25_albert": (24, 0, 1), "zz23_albert": (25, 1), "z33_albert": (27,),
}


def test_catalog_names():
    assert len(grd.CATALOG) == 16
    assert len(grd.FINE_PAIR_TRIPLE_GRADINGS) == 8
    with pytest.raises(KeyError):
        catalog("nosuch")


def test_transcribed_degrees():
    assert catalog("cartan_bicayley_pair").degree("+", "(u1,0)").vector() == (1, 0, 0, 1, 0, 0)
    assert catalog("cd_albert_pair").degree("+", "E1").vector() == (-1, 1, 1, 0, 0, 0)
    assert catalog("cartan_bicayley_triple").degree("+", "(u3,0)").vector() == (-1, -1, 1, 2)


@pytest.mark.parametrize("name", grd.CATALOG)
def test_catalog_grading_is_valid(name):
    rep = grd.verify_grading(catalog(name))
    assert rep.ok, rep.violations


@pytest.mark.parametrize("name", grd.CATALOG)
def test_universal_group(name):
    u = grd.universal_group(catalog(name))
    assert u.group.isomorphic(grd.EXPECTED_GROUPS[name]), str(u.group)


@pytest.mark.parametrize("name", list(EXPECTED_TYPES))
def test_types(name):
    gr = catalog(name)
    assert grd.grading_type(gr) == EXPECTED_TYPES[name]
    dims = sum(len(v) for v in grd.components(gr).values())
    assert dims == sum(gr.system.dims) if gr.kind == "pair" else dims == gr.system.dims[0]


@pytest.mark.parametrize("name", grd.FINE_PAIR_TRIPLE_GRADINGS)
def test_support_properties(name):
    assert all(grd.support_checks(catalog(name)).values())


def _trivial(gr):
    zero = {s: np.zeros_like(gr.degrees[s]) for s in ("+", "-")}
    return gr.with_degrees(gr.group, zero, name="trivial")


def test_trivial_grading():
    gr = _trivial(catalog("cartan_bicayley_pair"))
    assert grd.verify_grading(gr).ok
    assert grd.grading_type(gr) == (0,) * 15 + (2,)
    assert not grd.support_checks(gr)["one_dimensional"]


def test_perturbed_table_is_rejected():
    gr = catalog("cartan_bicayley_pair")
    deg = {s: gr.degrees[s].copy() for s in ("+", "-")}
    deg["+"][2, 0] += 1
    rep = grd.verify_grading(gr.with_degrees(gr.group, deg, name="perturbed"))
    assert not rep.ok and rep.violations[0][0] == "triple"


def test_collapsed_supports_are_detected():
    gr = catalog("cd_bicayley_pair")
    proj = np.zeros((5, 3), dtype=np.int64)
    proj[2:, :] = np.eye(3, dtype=np.int64)
    coarse = grd.embed(gr, AbelianGroup(0, (2, 2, 2)), proj)
    assert grd.verify_grading(coarse).ok
    assert not grd.support_checks(coarse)["disjoint_supports"]


def test_shift_rules():
    gr = catalog("cartan_bicayley_pair")
    g, h = np.array([1, 0, 2, 0, 0, -1]), np.array([0, 3, 0, 0, 1, 0])
    a = grd.shift(grd.shift(gr, g), h)
    b = grd.shift(gr, g + h)
    assert all((a.degrees[s] == b.degrees[s]).all() for s in ("+", "-"))
    z = grd.shift(gr, np.zeros(6, dtype=np.int64))
    assert all((z.degrees[s] == gr.degrees[s]).all() for s in ("+", "-"))
    t = catalog("cd_bicayley_triple")
    with pytest.raises(ValueError):
        grd.shift(catalog("cartan_bicayley_triple"), np.array([1, 0, 0, 0]))
    assert grd.verify_grading(grd.shift(t, np.array([1, 0, 0, 0, 0]))).ok


def test_z3_pair_is_a_shift_of_the_z33_grading():
    base = grd.as_pair(catalog("z33_albert"))
    m = np.zeros((3, 4), dtype=np.int64)
    m[:, 1:] = np.eye(3, dtype=np.int64)
    emb = grd.embed(base, AbelianGroup(1, (3, 3, 3)), m)
    shifted = grd.shift(emb, np.array([1, 0, 0, 0]))
    target = catalog("z3_albert_pair")
    assert all((shifted.degrees[s] == target.degrees[s]).all() for s in ("+", "-"))


@pytest.mark.parametrize("name", grd.ALBERT_ALGEBRA_GRADINGS)
def test_albert_gradings_give_pair_gradings(name):
    assert grd.verify_grading(grd.as_pair(catalog(name))).ok


def test_z33_generators_are_homogeneous():
    gr = catalog("z33_albert")
    deg = {lab: gr.degree("+", k).vector() for k, lab in enumerate(gr.labels["+"])}
    inv = gr.inverse_basis("+").to_scalars()
    for x, want in zip(grd.z33_generators(), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]):
        coords = inv.dot(np.array(x.vector(), dtype=object))
        degs = {deg[gr.labels["+"][k]] for k, c in enumerate(coords) if c}
        assert degs == {want}


def test_zz23_elements_in_basis():
    el = grd.zz23_albert_elements()
    assert len(el) == 27
    assert amul(el["E"], el["E"]) == el["E"]


def test_document_round_trip():
    for name in ("cd_albert_pair", "cartan_bicayley_pair", "z33_albert"):
        gr = catalog(name)
        doc = json.loads(gr.dumps())
        back = grd.grading_from_document(doc)
        assert back.to_document() == gr.to_document()
        assert grd.verify_grading(back).ok


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_shift_keeps_validity_and_universal_group(g):
    gr = grd.shift(catalog("cartan_bicayley_pair"), np.array(g))
    assert grd.verify_grading(gr).ok
