"""Acceptance suite: one test per criterion, each timed against its limit.

Each test prints a single PASS/FAIL line; the lines are repeated in the
terminal summary so they survive output capturing.
"""
from __future__ import annotations

import time
from contextlib import contextmanager

import numpy as np
import pytest

from exjordan import albert as alb
from exjordan import autos as au
from exjordan import gradings as grd
from exjordan import jordan as jd
from exjordan import octonion as oc
from exjordan import tkk as tk
from exjordan.albert import AlbertElem
from exjordan.exactfield import HALF, I, OMEGA, SQRT2, Scalar
from exjordan.octonion import Octonion, basis

RESULTS: list[str] = []
SEED = 0


@contextmanager
def criterion(number: int, title: str, limit: float | None):
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        in_time = limit is None or elapsed < limit
        ok = state["ok"] and in_time
        budget = f" (limit {limit:g} s)" if limit else ""
        detail = f" - {state['detail']}" if state["detail"] else ""
        if not in_time:
            detail += " - over time limit"
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} in {elapsed:.1f} s{budget}{detail}"
        RESULTS.append(line)
        print(line)
    assert state["ok"], state["detail"]
    assert in_time, f"criterion {number} took {elapsed:.1f} s, limit {limit} s"


# 1. octonion kernel

def _vec_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum("na,nb,abc->nc", x, y, oc.MULT)


def _vec_norm(x: np.ndarray) -> np.ndarray:
    return np.einsum("na,ab,nb->n", x, oc.NORM_GRAM, x) // 2


def test_criterion_01_octonion_kernel():
    with criterion(1, "octonion norm, alternativity, x conj(x) = n(x) 1", 5) as st:
        bad = 0
        B = [basis(k) for k in range(8)]
        for x in B:
            bad += x * x.conj() != Octonion.one().scale(x.norm())
            for y in B:
                bad += (x * y).norm() != x.norm() * y.norm()
                bad += (x * x) * y != x * (x * y)
                bad += y * (x * x) != (y * x) * x
        rng = np.random.default_rng(SEED)
        x = rng.integers(-9, 10, (1000, 8))
        y = rng.integers(-9, 10, (1000, 8))
        xy = _vec_mul(x, y)
        bad += int(np.count_nonzero(_vec_norm(xy) != _vec_norm(x) * _vec_norm(y)))
        xx = _vec_mul(x, x)
        bad += int(np.count_nonzero(_vec_mul(xx, y) != _vec_mul(x, xy)))
        bad += int(np.count_nonzero(_vec_mul(y, xx) != _vec_mul(_vec_mul(y, x), x)))
        xbar = x @ oc.CONJ.T
        bad += int(np.count_nonzero(_vec_mul(x, xbar) != _vec_norm(x)[:, None] * oc.UNIT[None, :]))
        # the exact Octonion class agrees with the integer kernel
        for k in range(50):
            ox, oy = Octonion.of(x[k].tolist()), Octonion.of(y[k].tolist())
            bad += (ox * oy).coords != tuple(Scalar.of(int(v)) for v in xy[k])
        st["ok"] = bad == 0
        st["detail"] = f"{bad} violations"


# 2. Jordan axioms

def test_criterion_02_jordan_axioms():
    with criterion(2, "linear axioms exhaustive, quadratic axioms seed 0 x 50", 600) as st:
        reports = []
        for name in ("bicayley_pair", "albert_pair"):
            s = jd.get_system(name)
            reports.append(jd.verify_linear_axioms(s))
            reports.append(jd.verify_quadratic_axioms(s, seed=SEED, trials=50))
        bad = [v for r in reports for v in r.violations]
        st["ok"] = not bad
        st["detail"] = f"{len(bad)} violations"


# 3. Albert identities

def test_criterion_03_albert_identities():
    with criterion(3, "degree-3 equation, (x#)# = N(x)x, U double formula", None) as st:
        rng = np.random.default_rng(SEED)
        elems = [AlbertElem.basis(k) for k in range(27)]
        elems += [AlbertElem.from_vector(rng.integers(-3, 4, 27).tolist()) for _ in range(200)]
        partners = [AlbertElem.from_vector(rng.integers(-3, 4, 27).tolist()) for _ in elems]
        bad = 0
        one = AlbertElem.one()
        for x, y in zip(elems, partners):
            t, s, n = alb.cubic_forms(x)
            x2 = alb.amul(x, x)
            bad += not (alb.amul(x, x2) - x2.scale(t) + x.scale(s) - one.scale(n)).is_zero()
            bad += alb.sharp(alb.sharp(x)) != x.scale(n)
            try:
                alb.u_op(x, y)
            except alb.InternalConsistencyError:
                bad += 1
        st["ok"] = bad == 0
        st["detail"] = f"{len(elems)} elements, {bad} violations"


# 4. grading catalog

def test_criterion_04_grading_catalog():
    with criterion(4, f"all {len(grd.CATALOG)} catalog gradings valid; fine pair/triple support checks", None) as st:
        bad = [n for n in grd.CATALOG if not grd.verify_grading(grd.catalog(n)).ok]
        fine = [(n, k) for n in grd.FINE_PAIR_TRIPLE_GRADINGS
                for k, ok in grd.support_checks(grd.catalog(n)).items() if not ok]
        st["ok"] = not bad and not fine and len(grd.FINE_PAIR_TRIPLE_GRADINGS) == 8
        st["detail"] = f"invalid {bad}, failed support checks {fine}" if not st["ok"] else ""


# 5. universal groups

def test_criterion_05_universal_groups():
    with criterion(5, "universal groups by Smith normal form", None) as st:
        wrong = {}
        for n in grd.CATALOG:
            u = grd.universal_group(grd.catalog(n))
            if not u.group.isomorphic(grd.EXPECTED_GROUPS[n]):
                wrong[n] = str(u.group)
        st["ok"] = not wrong
        st["detail"] = f"mismatches {wrong}" if wrong else ""


# 6. TKK

def test_criterion_06_tkk():
    with criterion(6, "TKK dimensions, reduced Jacobi (e6, e7), full Jacobi (e6)", 660) as st:
        t0 = time.perf_counter()
        e6 = tk.tkk(jd.bicayley_pair())
        r6 = tk.verify_lie(e6, "reduced")
        t6 = time.perf_counter() - t0
        t0 = time.perf_counter()
        e7 = tk.tkk(jd.albert_pair())
        r7 = tk.verify_lie(e7, "reduced")
        t7 = time.perf_counter() - t0
        full = tk.verify_lie(e6, "full")
        dims = (e6.dim, e6.level_dim(0), e7.dim, e7.level_dim(0))
        st["ok"] = dims == (78, 46, 133, 79) and r6.ok and r7.ok and full.ok and t6 < 60 and t7 < 600
        st["detail"] = (f"dims {dims}, e6 reduced {t6:.1f} s, e7 reduced {t7:.1f} s, "
                        f"e6 full {'pass' if full.ok else 'fail'}")


# 7. induced grading types

TYPES = {
    "cartan_bicayley_pair": (72, 0, 0, 0, 0, 1),
    "cd_bicayley_pair": (48, 1, 0, 7),
    "cartan_albert_pair": (126, 0, 0, 0, 0, 0, 1),
    "cd_albert_pair": (102, 0, 1, 7),
    "z3_albert_pair": (55, 0, 26),
}


def test_criterion_07_induced_types():
    with criterion(7, "induced grading types on e6 and e7, neutral components", None) as st:
        got, graded = {}, {}
        for name, want in TYPES.items():
            gr = grd.catalog(name)
            graded[name] = tk.extend_grading(tk.tkk(gr.system), gr)
            got[name] = tk.lie_grading_type(graded[name])
        cd = tk.component_dim(graded["cd_bicayley_pair"], [0] * 5, level=0)
        z3 = tk.component_dim(graded["z3_albert_pair"], [0] * 4)
        wrong = {n: t for n, t in got.items() if t != TYPES[n]}
        st["ok"] = not wrong and cd == 2 and z3 == 1
        st["detail"] = f"wrong types {wrong}, neutral dims {cd}, {z3}" if not st["ok"] else ""


# 8. derivations

def test_criterion_08_derivations():
    with criterion(8, "dim Der(T_B) = 36, Der(V_B) = 46, Der(V_A) = 79", None) as st:
        dims = tuple(tk.derivations(jd.get_system(n)).dimension
                     for n in ("bicayley_triple", "bicayley_pair", "albert_pair"))
        st["ok"] = dims == (36, 46, 79)
        st["detail"] = f"got {dims}"


# 9. structure maps

def test_criterion_09_structure_maps():
    with criterion(9, "V_B isomorphic to M_1x2; Peirce-1 space of (E3, E3) is V_B after scaling", None) as st:
        plus, minus = jd.m12_isomorphism()
        iso = jd.verify_pair_isomorphism(jd.bicayley_pair(), jd.m12_pair(), plus, minus)
        peirce = jd.albert_peirce_one_is_bicayley()
        st["ok"] = iso and peirce
        st["detail"] = f"isomorphism {iso}, Peirce {peirce}"


# 10. automorphisms and Weyl evidence

def test_criterion_10_automorphisms():
    with criterion(10, "built automorphisms, Clifford relations, Weyl generator actions", None) as st:
        r = SQRT2 * HALF
        mixed = basis("u1") + basis("e1").scale(2) - basis("v3")
        maps = [au.build("phi_a", a=mixed), au.build("phi_hat_a", a=mixed),
                au.build("c_lambda_mu", lam=2, mu=OMEGA),
                au.build("c_lambdas", lambdas=(1, OMEGA * OMEGA, OMEGA)),
                au.build("c_lambdas", lambdas=(I, 1, I)),
                au.build("tau12_albert"), au.build("tau12_bicayley"),
                au.build("phi_a_lambda", a=Octonion.one().scale(-r), lam=r),
                au.build("phi1", a=Octonion.one().scale(-r), lam=r),
                au.build("equivalence_cd")]
        autos_ok = all(au.is_automorphism(m.system, m) for m in maps)
        cliff = au.clifford_rep_checks()
        weyl = au.weyl_evidence()
        st["ok"] = autos_ok and cliff.ok and weyl.ok
        failed = [k for k, v in {**cliff.checks, **weyl.checks}.items() if not v]
        st["detail"] = f"{len(maps)} maps, {len(cliff.checks) + len(weyl.checks)} checks" + (
            f", failed {failed}" if failed else "")


# 11. orbit criterion

def _random_rank_one(rng) -> tuple:
    """A rank-one vector moved by a random product of triple-system automorphisms."""
    start = [basis("e1"), basis("u2"), basis("v3"), basis("e2")][rng.integers(4)]
    v = start.coords + Octonion.zero().coords
    if rng.integers(2):
        v = v[8:] + v[:8]
    for _ in range(2):
        a = Octonion.of([0, 0] + rng.integers(-2, 3, 3).tolist() + [0, 0, 0])
        m = au.phi_a_lambda(a, 1).plus if rng.integers(2) else au.tau12_bicayley().plus
        v = m.apply(v)
    return v


def test_criterion_11_orbits():
    with criterion(11, "orbit label O1 iff rank 1", None) as st:
        tb = jd.bicayley_triple()
        zero = Octonion.zero().coords
        vecs = [tb.basis_vector("+", k) for k in range(16)]
        vecs += [basis("e1").coords + zero, Octonion.one().coords + Octonion.one().scale(I).coords,
                 Octonion.one().coords + zero]
        rng = np.random.default_rng(SEED)
        for k in range(500):
            if k % 3 == 0:
                vecs.append(tuple(rng.integers(-3, 4, 16).tolist()))
            elif k % 3 == 1:
                v = [0] * 16
                for idx in rng.choice(16, size=2, replace=False):
                    v[idx] = int(rng.integers(-3, 4))
                vecs.append(tuple(v))
            else:
                vecs.append(_random_rank_one(rng))
        disagree, ones = 0, 0
        for v in vecs:
            o1 = jd.orbit_label_triple(v).name == "O1"
            r1 = jd.rank_element(tb, "+", v) == 1
            disagree += o1 != r1
            ones += r1
        st["ok"] = disagree == 0 and len(vecs) == 519
        st["detail"] = f"{len(vecs)} vectors, {ones} of rank one, {disagree} disagreements"
