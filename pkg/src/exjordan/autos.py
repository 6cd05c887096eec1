"""Explicit automorphisms, Clifford representations and Weyl-group evidence.

Maps act on column vectors in the Cartan bases: B = C + C is split as
(x1, x2) with 8 coordinates each, and the Albert algebra uses the 27-element
basis of :mod:`exjordan.albert`.

>>> from exjordan.octonion import basis
>>> phi = build("phi_a", a=basis("u1"))
>>> is_automorphism("bicayley_pair", phi)
True
>>> swap = LinearOpPair("swap", "bicayley_triple", _b_map(lambda x1, x2: (x2, x1)))
>>> is_automorphism("bicayley_triple", swap)
False
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Sequence

import flint
import numpy as np

from . import albert as alb
from . import gradings as grd
from . import jordan as jd
from . import octonion as oc
from .albert import AlbertElem
from .exactfield import HALF, I, OMEGA, ONE, SQRT2, ZERO, Scalar
from .exactlinalg import Matrix, zrank
from .jordan import SIGNS, JordanSystem, opposite
from .octonion import Octonion
from ._ztensor import ZTensor

ALBERT_ALGEBRA = "albert_algebra"


@dataclass(frozen=True)
class LinearOpPair:
    """A linear map, or a pair of maps (plus, minus) on V+ and V-.

    ``minus`` is None for maps of a single space; on a Jordan pair such a map
    acts as (plus, plus).  ``system`` names the structure it is meant to
    preserve, or is None for plain matrices.
    """

    name: str
    system: str | None
    plus: Matrix
    minus: Matrix | None = None
    params: dict = field(default_factory=dict, compare=False)

    def side(self, sigma: str) -> Matrix:
        return self.minus if sigma == "-" and self.minus is not None else self.plus

    @cached_property
    def ztensors(self) -> dict:
        return {s: self.side(s).to_ztensor() for s in SIGNS}

    @property
    def dim(self) -> int:
        return self.plus.rows


def compose(f: LinearOpPair, g: LinearOpPair, name: str | None = None) -> LinearOpPair:
    """f after g, sign by sign."""
    minus = None if f.minus is None and g.minus is None else f.side("-") @ g.side("-")
    return LinearOpPair(name or f"{f.name}*{g.name}", f.system or g.system, f.plus @ g.plus, minus)


# matrices from maps

def _columns(images: list[Sequence]) -> Matrix:
    return Matrix.from_columns([list(v) for v in images])


def _oct_map(fn: Callable[[Octonion], Octonion]) -> Matrix:
    return _columns([fn(oc.basis(j)).coords for j in range(oc.DIM)])


def _b_map(fn: Callable[[Octonion, Octonion], tuple[Octonion, Octonion]]) -> Matrix:
    zero = Octonion.zero()
    cols = []
    for j in range(16):
        x1, x2 = (oc.basis(j), zero) if j < 8 else (zero, oc.basis(j - 8))
        y1, y2 = fn(x1, x2)
        cols.append(y1.coords + y2.coords)
    return _columns(cols)


def _a_map(fn: Callable[[AlbertElem], AlbertElem]) -> Matrix:
    return _columns([fn(AlbertElem.basis(k)).vector() for k in range(alb.DIM)])


def _block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.rows for b in blocks)
    rows = [[ZERO] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            rows[off + i][off:off + b.cols] = b.row(i)
        off += b.rows
    return Matrix.from_rows(rows)


def _blocks(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """[[a, b], [c, d]]."""
    top = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    bot = [list(c.row(i)) + list(d.row(i)) for i in range(c.rows)]
    return Matrix.from_rows(top + bot)


def octonion_matrix(fn: Callable[[Octonion], Octonion]) -> Matrix:
    """Matrix of a linear map of C in the Cartan basis."""
    return _oct_map(fn)


def _as_octonion(a) -> Octonion:
    if isinstance(a, Octonion):
        return a
    if isinstance(a, str):
        return oc.basis(a)
    if isinstance(a, dict):
        return sum((oc.basis(k).scale(v) for k, v in a.items()), Octonion.zero())
    return Octonion.of(list(a))


# para-Cayley multiplications: l_x(y) = conj(x) conj(y), r_x(y) = conj(y) conj(x)

def para_left(x: Octonion) -> Matrix:
    return _oct_map(lambda y: x.conj() * y.conj())


def para_right(x: Octonion) -> Matrix:
    return _oct_map(lambda y: y.conj() * x.conj())


# builders

def _need(params: dict, *names: str) -> list:
    missing = [n for n in names if n not in params]
    if missing:
        raise ValueError(f"missing parameters: {', '.join(missing)}")
    return [params[n] for n in names]


def _unit_constraint(a: Octonion, lam: Scalar) -> None:
    if a.norm() + lam * lam != ONE:
        raise ValueError("constraint n(a) + lambda^2 = 1 violated")


def _nonzero(name: str, v: Scalar) -> Scalar:
    if not v:
        raise ValueError(f"constraint {name} != 0 violated")
    return v


def phi_a(a: Octonion) -> LinearOpPair:
    """phi_a+ (x1, x2) = (x1 - conj(x2) a, x2); phi_a- (y1, y2) = (y1, a conj(y1) + y2)."""
    plus = _b_map(lambda x1, x2: (x1 - x2.conj() * a, x2))
    minus = _b_map(lambda y1, y2: (y1, a * y1.conj() + y2))
    return LinearOpPair("phi_a", "bicayley_pair", plus, minus, {"a": a})


def phi_hat_a(a: Octonion) -> LinearOpPair:
    p = phi_a(a)
    return LinearOpPair("phi_hat_a", "bicayley_pair", p.minus, p.plus, {"a": a})


def c_lambda_mu(lam, mu) -> LinearOpPair:
    lam, mu = _nonzero("lambda", Scalar.of(lam)), _nonzero("mu", Scalar.of(mu))
    plus = _b_map(lambda x1, x2: (x1.scale(lam), x2.scale(mu)))
    minus = _b_map(lambda y1, y2: (y1.scale(lam.inverse()), y2.scale(mu.inverse())))
    return LinearOpPair("c_lambda_mu", "bicayley_pair", plus, minus, {"lambda": lam, "mu": mu})


def c_lambdas(l1, l2, l3) -> LinearOpPair:
    """iota_i(x)+ -> lambda_i iota_i(x)+, E_i+ -> mu_i E_i+ with mu_i = lambda_i^-1 lambda_{i+1} lambda_{i+2}."""
    lams = [_nonzero(f"lambda_{k + 1}", Scalar.of(v)) for k, v in enumerate((l1, l2, l3))]
    mus = [lams[i].inverse() * lams[(i + 1) % 3] * lams[(i + 2) % 3] for i in range(3)]

    def scaled(al, pa):
        return _a_map(lambda x: AlbertElem(tuple(a * s for a, s in zip(x.alphas, al)),
                                           tuple(p.scale(s) for p, s in zip(x.parts, pa))))

    plus = scaled(mus, lams)
    minus = scaled([m.inverse() for m in mus], [v.inverse() for v in lams])
    return LinearOpPair("c_lambdas", "albert_pair", plus, minus, {"lambdas": tuple(lams)})


def tau12_albert() -> LinearOpPair:
    """E1 <-> E2, iota_1(x) <-> iota_2(conj x), iota_3(x) -> iota_3(conj x)."""
    def f(x: AlbertElem) -> AlbertElem:
        a1, a2, a3 = x.alphas
        p1, p2, p3 = x.parts
        return AlbertElem((a2, a1, a3), (p2.conj(), p1.conj(), p3.conj()))
    return LinearOpPair("tau12_albert", ALBERT_ALGEBRA, _a_map(f))


def tau12_bicayley() -> LinearOpPair:
    return LinearOpPair("tau12_bicayley", "bicayley_triple", _b_map(lambda x1, x2: (x2.conj(), x1.conj())))


def phi_a_lambda(a: Octonion, lam) -> LinearOpPair:
    """(x1, x2) -> (lambda x1 - conj(x2) a, a conj(x1) + lambda x2)."""
    lam = Scalar.of(lam)
    _unit_constraint(a, lam)
    m = _b_map(lambda x1, x2: (x1.scale(lam) - x2.conj() * a, a * x1.conj() + x2.scale(lam)))
    return LinearOpPair("phi_a_lambda", "bicayley_triple", m, None, {"a": a, "lambda": lam})


def phi1(a: Octonion, lam) -> LinearOpPair:
    """Automorphism of the Albert algebra fixing E1 and mixing E2, E3 with iota_1(a)."""
    lam = Scalar.of(lam)
    _unit_constraint(a, lam)
    ab, na = a.conj(), a.norm()

    def f(x: AlbertElem) -> AlbertElem:
        a1, a2, a3 = x.alphas
        x1, x2, x3 = x.parts
        t = ab.polar(x1)
        b2 = a2 * lam * lam + a3 * na + 2 * lam * t
        b3 = a2 * na + a3 * lam * lam - 2 * lam * t
        y1 = x1 + ab.scale(HALF * a3 * lam - HALF * a2 * lam - t)
        y2 = x2.scale(lam) - x3.conj() * a
        y3 = x3.scale(lam) + a * x2.conj()
        return AlbertElem((a1, b2, b3), (y1, y2, y3))
    return LinearOpPair("phi1", ALBERT_ALGEBRA, _a_map(f), None, {"a": a, "lambda": lam})


def Phi(x: Octonion) -> LinearOpPair:
    """[[0, r_conj(x)], [l_conj(x), 0]] on B: (y1, y2) -> (conj(y2) x, x conj(y1))."""
    return LinearOpPair("Phi", None, _b_map(lambda y1, y2: (y2.conj() * x, x * y1.conj())), None, {"x": x})


@dataclass(frozen=True)
class WVector:
    """c + alpha e + beta f in W = C + Fe + Ff, with n(e) = n(f) = 0, n(e, f) = 1."""

    c: Octonion
    alpha: Scalar = ZERO
    beta: Scalar = ZERO

    def norm(self) -> Scalar:
        return self.c.norm() + self.alpha * self.beta

    def polar(self, other: WVector) -> Scalar:
        return self.c.polar(other.c) + self.alpha * other.beta + self.beta * other.alpha

    @staticmethod
    def e() -> WVector:
        return WVector(Octonion.zero(), ONE, ZERO)

    @staticmethod
    def f() -> WVector:
        return WVector(Octonion.zero(), ZERO, ONE)

    @staticmethod
    def x() -> WVector:
        return WVector(Octonion.zero(), ONE, ONE)

    @staticmethod
    def y() -> WVector:
        return WVector(Octonion.zero(), I, -I)


def w_basis() -> list[WVector]:
    return [WVector(oc.basis(j)) for j in range(oc.DIM)] + [WVector.e(), WVector.f()]


@lru_cache(maxsize=None)
def _phi_pm_ef() -> dict:
    """Phi+-(e) and Phi+-(f) as 16x16 matrices: diag(1, 0) or diag(0, -1)."""
    z, one = Matrix.zeros(8, 8), Matrix.identity(8)
    upper = _block_diag(one, z)
    lower = _block_diag(z, -one)
    return {("+", "e"): upper, ("-", "e"): lower, ("+", "f"): lower, ("-", "f"): upper}


def phi_pm(sign: str, w: WVector) -> Matrix:
    """Phi+-(c + alpha e + beta f) = Phi(c) + alpha Phi+-(e) + beta Phi+-(f)."""
    ef = _phi_pm_ef()
    return Phi(w.c).plus + ef[(sign, "e")].scale(w.alpha) + ef[(sign, "f")].scale(w.beta)


def Psi(w: WVector) -> LinearOpPair:
    """[[0, Phi+(w)], [Phi-(w), 0]] on B + B."""
    z = Matrix.zeros(16, 16)
    return LinearOpPair("Psi", None, _blocks(z, phi_pm("+", w), phi_pm("-", w), z), None, {"w": w})


def psi_word(scalar, *words: Sequence[WVector]) -> Matrix:
    """Psi of scalar 1 + sum of Clifford monomials w1 . w2 ... (products of W vectors)."""
    out = Matrix.identity(32).scale(scalar)
    for word in words:
        m = Matrix.identity(32)
        for w in word:
            m = m @ Psi(w).plus
        out = out + m
    return out


def related_bicayley(f1: Matrix, f2: Matrix, f3: Matrix | None = None) -> LinearOpPair:
    """(x1, x2) -> (f1 x1, f2 x2)."""
    z = Matrix.zeros(8, 8)
    return LinearOpPair("related_bicayley", "bicayley_triple", _blocks(f1, z, z, f2))


def related_albert(f1: Matrix, f2: Matrix, f3: Matrix) -> LinearOpPair:
    """E_i fixed, iota_i(x) -> iota_i(f_i x)."""
    return LinearOpPair("related_albert", ALBERT_ALGEBRA, _block_diag(Matrix.identity(3), f1, f2, f3))


def as_albert_pair(f: LinearOpPair) -> LinearOpPair:
    """An automorphism of the Albert algebra as the automorphism (f, f) of the Albert pair."""
    return LinearOpPair(f.name, "albert_pair", f.plus, f.plus, f.params)


def equivalence_cd() -> LinearOpPair:
    """c_{i,1,i} after phi1(-(1/sqrt 2) 1, 1/sqrt 2), on the Albert pair."""
    r = SQRT2 * HALF
    p = as_albert_pair(phi1(Octonion.one().scale(-r), r))
    return compose(c_lambdas(I, 1, I), p, name="equivalence_cd")


_BUILD = {
    "phi_a": lambda p: phi_a(_as_octonion(*_need(p, "a"))),
    "phi_hat_a": lambda p: phi_hat_a(_as_octonion(*_need(p, "a"))),
    "c_lambda_mu": lambda p: c_lambda_mu(*_need(p, "lam", "mu")),
    "c_lambdas": lambda p: c_lambdas(*_need(p, "lambdas")[0]),
    "tau12_albert": lambda p: tau12_albert(),
    "tau12_bicayley": lambda p: tau12_bicayley(),
    "phi_a_lambda": lambda p: phi_a_lambda(_as_octonion(_need(p, "a")[0]), _need(p, "lam")[0]),
    "phi1": lambda p: phi1(_as_octonion(_need(p, "a")[0]), _need(p, "lam")[0]),
    "Phi": lambda p: Phi(_as_octonion(*_need(p, "x"))),
    "Psi": lambda p: Psi(*_need(p, "w")),
    "related_bicayley": lambda p: related_bicayley(*_need(p, "f1", "f2")),
    "related_albert": lambda p: related_albert(*_need(p, "f1", "f2", "f3")),
    "equivalence_cd": lambda p: equivalence_cd(),
}
BUILDERS = tuple(_BUILD)


def build(name: str, **params) -> LinearOpPair:
    """Build a named map; constraint violations raise ValueError naming the constraint.

    >>> m = build("tau12_bicayley").plus
    >>> m.rows, m == m.T
    (16, True)
    >>> build("phi_a_lambda", a="e1", lam=2)
    Traceback (most recent call last):
    ...
    ValueError: constraint n(a) + lambda^2 = 1 violated
    """
    try:
        maker = _BUILD[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; expected one of {', '.join(BUILDERS)}") from None
    return maker(params)


# verification

def _system(sys) -> JordanSystem | str:
    if isinstance(sys, JordanSystem) or sys == ALBERT_ALGEBRA:
        return sys
    return jd.get_system(sys)


def automorphism_violations(sys, phi: LinearOpPair, limit: int = 10) -> list[tuple]:
    """Basis triples (sign, a, b, c, d) where phi fails to commute with the triple product."""
    sys = _system(sys)
    if sys == ALBERT_ALGEBRA:
        f = phi.ztensors["+"]
        if f.shape != (alb.DIM, alb.DIM):
            raise ValueError("dimension mismatch")
        m = alb.product_tensor()
        lhs = m.einsum("abx,cx->abc", f)
        rhs = f.einsum("xa,xbc->abc", m).einsum("axc,xb->abc", f)
        return [("*",) + i for i in jd._tensor_mismatches(lhs, rhs, limit)]
    maps = phi.ztensors
    for s in SIGNS:
        if maps[s].shape != (sys.dim(s), sys.dim(s)):
            raise ValueError("dimension mismatch")
    return jd.isomorphism_violations(sys, sys, maps, limit)


def is_automorphism(sys, phi: LinearOpPair) -> bool:
    """True iff phi is invertible and preserves the structure on all basis triples (or pairs, for the algebra)."""
    if automorphism_violations(sys, phi, limit=1):
        return False
    return all(zrank(t) == t.shape[0] for t in {id(m): m for m in phi.ztensors.values()}.values())


@dataclass
class RelatedTripleReport:
    related: bool
    violations: list
    tb_automorphism: bool

    def __bool__(self) -> bool:
        return self.related


@lru_cache(maxsize=None)
def _conj_product() -> ZTensor:
    """P[x, y, :] = conj(x) conj(y) on basis pairs."""
    c = oc.CONJ
    return ZTensor.from_int(np.einsum("za,wb,abc->zwc", c, c, oc.MULT))


def related_triple_check(f1: Matrix, f2: Matrix, f3: Matrix) -> RelatedTripleReport:
    """f1(conj(x) conj(y)) = conj(f2 x) conj(f3 y) on all 64 basis pairs."""
    for f in (f1, f2, f3):
        if (f.rows, f.cols) != (8, 8):
            raise ValueError("expected 8x8 matrices")
    t1, t2, t3 = (f.to_ztensor() for f in (f1, f2, f3))
    lhs = _conj_product().einsum("xyc,dc->xyd", t1)
    c = ZTensor.from_int(oc.CONJ)
    g2, g3 = c @ t2, c @ t3
    mult = ZTensor.from_int(oc.MULT)
    rhs = g2.einsum("ax,abc->xbc", mult).einsum("xbc,by->xyc", g3)
    bad = jd._tensor_mismatches(lhs, rhs, limit=10)
    tb = is_automorphism("bicayley_triple", related_bicayley(f1, f2))
    return RelatedTripleReport(not bad, bad, tb)


def isometry_check(f: Matrix) -> tuple[bool, Scalar]:
    """Whether f preserves q(x1, x2) = n(x1) + n(x2), and the exact determinant of f."""
    if (f.rows, f.cols) != (16, 16):
        raise ValueError("expected a 16x16 matrix")
    g = jd.bicayley_pair().trace
    t = f.to_ztensor()
    preserved = (t.T @ g @ t).equals(g)
    return preserved, f.det()


@dataclass
class CheckReport:
    """Named boolean checks with the first failures recorded."""

    checks: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail=None) -> None:
        self.checks[name] = self.checks.get(name, True) and bool(ok)
        if not ok and detail is not None:
            self.failures.setdefault(name, detail)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def clifford_rep_checks(seed: int = 0, samples: int = 3) -> CheckReport:
    """Clifford relations for Phi on C and Psi on W, and Psi(1 + a.e), Psi(1 + a.f) against phi_a."""
    rep = CheckReport()
    eye16, eye32 = Matrix.identity(16), Matrix.identity(32)
    cb = [oc.basis(j) for j in range(oc.DIM)]
    phis = [Phi(x).plus for x in cb]
    for i, x in enumerate(cb):
        rep.record("Phi(x)^2 = n(x) id", phis[i] @ phis[i] == eye16.scale(x.norm()), oc.LABELS[i])
        for j in range(i + 1, len(cb)):
            ok = phis[i] @ phis[j] + phis[j] @ phis[i] == eye16.scale(x.polar(cb[j]))
            rep.record("Phi polar relation", ok, (oc.LABELS[i], oc.LABELS[j]))
    wb = w_basis()
    psis = [Psi(w).plus for w in wb]
    for i, w in enumerate(wb):
        rep.record("Psi(w)^2 = n(w) id", psis[i] @ psis[i] == eye32.scale(w.norm()), i)
        for j in range(i + 1, len(wb)):
            ok = psis[i] @ psis[j] + psis[j] @ psis[i] == eye32.scale(w.polar(wb[j]))
            rep.record("Psi polar relation", ok, (i, j))
    for name, w in (("x", WVector.x()), ("y", WVector.y())):
        p = Psi(w).plus
        rep.record(f"Psi({name})^2 = id", p @ p == eye32, name)
    rng = np.random.default_rng(seed)
    params = cb + [Octonion.of(rng.integers(-3, 4, oc.DIM).tolist()) for _ in range(samples)]
    for a in params:
        pa = phi_a(a)
        lhs = psi_word(1, (WVector(a), WVector.e()))
        rep.record("Psi(1 + a.e) = phi_a", lhs == _block_diag(pa.plus, pa.minus), a)
        lhs = psi_word(1, (WVector(a), WVector.f()))
        ph = phi_hat_a(a)
        rep.record("Psi(1 + a.f) = phi_hat_a", lhs == _block_diag(ph.plus, ph.minus), a)
    return rep


# induced action on gradings

@dataclass
class InducedAction:
    """Permutation of the support and the induced automorphism of the universal group.

    ``matrix`` acts on row vectors of universal-group coordinates (torsion, then free).
    """

    permutation: dict
    matrix: np.ndarray
    universal: grd.UniversalGroup

    def apply(self, coords: Sequence[int]) -> tuple[int, ...]:
        return self.universal.reduce(np.asarray(coords, dtype=object) @ self.matrix)

    def of_key(self, key) -> tuple[int, ...]:
        return self.apply(self.universal.coordinates(key))

    def is_identity(self) -> bool:
        n = len(self.universal.moduli)
        return all(self.apply(row) == self.universal.reduce(row) for row in np.eye(n, dtype=np.int64))


def _homogeneous_coords(gr: grd.Grading, phi: LinearOpPair, s: str) -> ZTensor:
    """Matrix of phi^s in the homogeneous basis of gr."""
    return gr.inverse_basis(s) @ phi.ztensors[s] @ gr.basis_matrix(s)


def _component_images(src: grd.Grading, dst: grd.Grading, phi: LinearOpPair, exact: bool) -> dict | None:
    """Map each component key of src to the dst component containing its image, or None."""
    out = {}
    csrc, cdst = grd.components(src), grd.components(dst)
    where = {}
    for key, idx in cdst.items():
        s = key[0] if dst.kind == "pair" else "+"
        for k in idx:
            where[(s, k)] = key
    for key, idx in csrc.items():
        for s in ([key[0]] if src.kind == "pair" else ["+"]):
            m = dst.inverse_basis(s) @ phi.ztensors[s] @ src.basis_matrix(s)
            block = m.take(idx, axis=1)
            rows = np.nonzero(block.nonzero_mask().any(axis=1))[0]
            targets = {where[(s, int(r))] for r in rows}
            if len(targets) != 1:
                return None
            target = targets.pop()
            if exact and (len(cdst[target]) != len(idx) or zrank(block) != len(idx)):
                return None
            out[key] = target
    return out


def _key_of(gr: grd.Grading, comp_key) -> tuple:
    """Component key as a universal-group generator key."""
    return comp_key if gr.kind == "pair" else ("", comp_key)


def induced_on_grading(sys, gr: grd.Grading, phi: LinearOpPair) -> InducedAction | None:
    """Induced action of an automorphism on the support and the universal group.

    Returns None when some homogeneous component is not mapped onto a
    homogeneous component.  Raises ValueError when phi is not an automorphism.
    """
    if not is_automorphism(sys, phi):
        raise ValueError(f"{phi.name} is not an automorphism of the system")
    images = _component_images(gr, gr, phi, exact=True)
    if images is None:
        return None
    perm = {_key_of(gr, k): _key_of(gr, v) for k, v in images.items()}
    if len(set(perm.values())) != len(perm):
        return None
    u = grd.universal_group(gr, check=False)
    p = u.presentation
    vinv = flint.fmpz_mat([[int(p.v[i, j]) for j in range(p.n)] for i in range(p.n)]).inv()
    vinv = [[int(x) for x in row] for row in vinv.tolist()]
    keep = [i for i, d in enumerate(p.diag) if d > 1] + [i for i, d in enumerate(p.diag) if d == 0]
    rows = []
    for i in keep:
        lift = vinv[i]  # generator combination representing coordinate i
        image = [0] * p.n
        for j, c in enumerate(lift):
            if c:
                image[u.keys.index(perm[u.keys[j]])] += c
        rows.append(p.coordinates(image))
    return InducedAction(perm, np.array(rows, dtype=object).reshape(len(keep), len(keep)), u)


# Weyl-group evidence

def _tau3_matrix() -> Matrix:
    return _oct_map(oc.tau3)


def weyl_evidence() -> CheckReport:
    """Evidence that the displayed maps induce the asserted Weyl-group elements."""
    rep = CheckReport()

    # (a) the CD grading of the Albert pair refines into the Z x Z2^3 grading
    phi = equivalence_cd()
    rep.record("equivalence map is an automorphism", is_automorphism("albert_pair", phi))
    zz = grd.catalog("zz23_albert")
    el = grd.zz23_albert_elements()
    xs, _ = oc.cayley_dickson_basis()
    r = SQRT2 * HALF
    images = {
        "+": [("E1", AlbertElem.E(1), el["E"]), ("E2", AlbertElem.E(2), el["S+"].scale(HALF)),
              ("E3", AlbertElem.E(3), el["S-"].scale(HALF))],
        "-": [("E1", AlbertElem.E(1), el["E"]), ("E2", AlbertElem.E(2), el["S-"].scale(HALF)),
              ("E3", AlbertElem.E(3), el["S+"].scale(HALF))],
    }
    for s, sign_other in (("+", "-"), ("-", "+")):
        nu_sign = 1 if s == "+" else -1
        for k in range(8):
            images[s].append((f"i2(x{k})", AlbertElem.iota(2, xs[k]), el[f"nu{sign_other}(x{k})"].scale(r)))
            images[s].append((f"i3(conj x{k})", AlbertElem.iota(3, xs[k].conj()), el[f"nu{s}(x{k})"].scale(r)))
            if k:
                images[s].append((f"i1(x{k})", AlbertElem.iota(1, xs[k]), el[f"nu(x{k})"].scale(nu_sign)))
    for s, items in images.items():
        for lab, src, want in items:
            got = phi.side(s).apply(src.vector())
            rep.record("displayed images", got == want.vector(), (s, lab))
    target = grd.as_pair(zz)
    rep.record("CD components land in single components",
               _component_images(grd.catalog("cd_albert_pair"), target, phi, exact=False) is not None)

    # (b) tau12 on the CD grading of V_B swaps a and b
    gr = grd.catalog("cd_bicayley_pair")
    t12 = tau12_bicayley()
    act = induced_on_grading("bicayley_pair", gr, t12)
    u = grd.universal_group(gr, check=False)
    a, b = u.coordinates(("+", (1, 0, 0, 0, 0))), u.coordinates(("+", (0, 1, 0, 0, 0)))
    ai = [u.combine((1, ("+", (1, 0) + e)), (-1, ("+", (1, 0, 0, 0, 0))))
          for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    rep.record("tau12 stabilizes the CD grading", act is not None)
    if act is not None:
        rep.record("tau12: a <-> b", act.apply(a) == b and act.apply(b) == a)
        rep.record("tau12 fixes a_i", all(act.apply(x) == x for x in ai))
        rep.record("tau12 induces an involution", all(act.apply(act.apply(x)) == x for x in [a, b] + ai))

    # (b) c_{1, omega^2, omega} on the Z x Z3^3 grading of V_A
    gz = grd.catalog("z3_albert_pair")
    c = c_lambdas(1, OMEGA * OMEGA, OMEGA)
    act = induced_on_grading("albert_pair", gz, c)
    uz = grd.universal_group(gz, check=False)
    base = ("+", (1, 0, 0, 0))
    za = uz.coordinates(base)
    zai = [uz.combine((1, ("+", (1,) + e)), (-1, base)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    rep.record("c stabilizes the Z x Z3^3 grading", act is not None)
    if act is not None:
        rep.record("c: a -> a + a3", act.apply(za) == uz.reduce(np.add(za, zai[2])))
        rep.record("c fixes a_i", all(act.apply(x) == x for x in zai))

    # (c) tau3 extended to B acts on the Z2^3 block as a1 -> a1, a2 -> a3, a3 -> a1 + a2 + a3
    f = _tau3_matrix()
    rel = related_triple_check(f, f, f)
    rep.record("(tau3, tau3, tau3) is related", rel.related and rel.tb_automorphism)
    ext = related_bicayley(f, f)
    act = induced_on_grading("bicayley_pair", gr, ext)
    rep.record("tau3 stabilizes the CD grading", act is not None)
    if act is not None:
        a1, a2, a3 = ai
        rep.record("tau3: a, b fixed", act.apply(a) == a and act.apply(b) == b)
        rep.record("tau3 on Z2^3", act.apply(a1) == a1 and act.apply(a2) == a3
                   and act.apply(a3) == u.reduce(np.add(np.add(a1, a2), a3)))
    ext_a = as_albert_pair(related_albert(f, f, f))
    act = induced_on_grading("albert_pair", grd.catalog("cd_albert_pair"), ext_a)
    rep.record("tau3 stabilizes the CD grading of the Albert pair", act is not None)
    return rep
