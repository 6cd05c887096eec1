"""Jordan pairs and triple systems given by exact structure tensors.

A system stores, for each sign ``s``, a tensor ``T[s][a, b, c, d]``: the
coefficient of basis vector d of V^s in {a, b, c}^s, where a, c index the basis
of V^s and b the basis of V^-s.  A triple system is a pair whose two tensors are
the same object.  ``trace[a, b]`` pairs V^+ with V^-.

>>> vb = bicayley_pair()
>>> vb.dims, vb.kind
((16, 16), 'pair')
>>> x = vb.vector("+", {"(e1,0)": 1, "(e2,0)": 1})
>>> y = vb.vector("-", {"(u1,0)": 1, "(e1,0)": 2})
>>> vb.quadratic("+", x, y) == vb.vector("+", {"(u1,0)": -1, "(e2,0)": 2})
True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import albert as alb
from . import octonion as oc
from .albert import InternalConsistencyError
from .exactfield import HALF, I, ONE, ZERO, Scalar
from .exactlinalg import Matrix, rref, pivot_columns, solve
from ._ztensor import ZTensor, concatenate

SIGNS = ("+", "-")


def opposite(sigma: str) -> str:
    return "-" if sigma == "+" else "+"


@dataclass(frozen=True)
class PairElem:
    """Element x^sigma of a Jordan pair, with exact coordinates."""

    sigma: str
    coords: tuple

    def __post_init__(self):
        if self.sigma not in SIGNS:
            raise ValueError(f"sign must be '+' or '-', got {self.sigma!r}")


@dataclass(frozen=True, eq=False)
class JordanSystem:
    name: str
    kind: str
    family: str
    dims: tuple[int, int]
    labels: tuple[tuple[str, ...], tuple[str, ...]]
    tensors: dict = field(repr=False)
    trace: ZTensor = field(repr=False)

    def dim(self, sigma: str) -> int:
        return self.dims[SIGNS.index(sigma)]

    def basis_labels(self, sigma: str) -> tuple[str, ...]:
        return self.labels[SIGNS.index(sigma)]

    def tensor(self, sigma: str) -> ZTensor:
        return self.tensors[sigma]

    def vector(self, sigma: str, terms: dict) -> tuple:
        """Coordinate vector from a ``{label: coefficient}`` mapping."""
        labels = self.basis_labels(sigma)
        v = [ZERO] * len(labels)
        for k, c in terms.items():
            v[labels.index(k) if isinstance(k, str) else k] += Scalar.of(c)
        return tuple(v)

    def basis_vector(self, sigma: str, k: int) -> tuple:
        return tuple(ONE if j == k else ZERO for j in range(self.dim(sigma)))

    def elem(self, sigma: str, coords: Sequence) -> PairElem:
        coords = tuple(Scalar.of(c) for c in coords)
        if len(coords) != self.dim(sigma):
            raise ValueError("coordinate length does not match the dimension")
        return PairElem(sigma, coords)

    # products

    def triple(self, sigma: str, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        """{x, y, z}^sigma with x, z in V^sigma and y in V^-sigma."""
        t = self.tensors[sigma]
        r = _vec(x).tensordot(t, axes=([0], [0]))          # [b, c, d]
        r = _vec(y).tensordot(r, axes=([0], [0]))          # [c, d]
        r = _vec(z).tensordot(r, axes=([0], [0]))          # [d]
        return tuple(r.to_scalars())

    def quadratic(self, sigma: str, x: Sequence, y: Sequence) -> tuple:
        """Q^sigma_x(y) = 1/2 {x, y, x}."""
        return tuple(HALF * c for c in self.triple(sigma, x, y, x))

    def trace_form(self, x: Sequence, y: Sequence) -> Scalar:
        """t(x^+, y^-)."""
        r = _vec(x).tensordot(self.trace, axes=([0], [0]))
        r = _vec(y).tensordot(r, axes=([0], [0]))
        return r.item()

    # operator matrices as ZTensors (rows index the output)

    def q_tensor(self, sigma: str, x: Sequence) -> ZTensor:
        t = self.tensors[sigma]
        v = _vec(x)
        r = v.tensordot(t, axes=([0], [0]))                # [b, c, d]
        r = v.tensordot(r, axes=([0], [1]))                # [b, d]
        return r.T.scale(HALF)

    def d_tensor(self, sigma: str, x: Sequence, y: Sequence) -> ZTensor:
        t = self.tensors[sigma]
        r = _vec(x).tensordot(t, axes=([0], [0]))
        r = _vec(y).tensordot(r, axes=([0], [0]))          # [c, d]
        return r.T

    def with_tensors(self, tensors: dict, name: str | None = None) -> JordanSystem:
        return JordanSystem(name or self.name, self.kind, self.family, self.dims, self.labels,
                            tensors, self.trace)


def _vec(x) -> ZTensor:
    if isinstance(x, ZTensor):
        return x
    if isinstance(x, PairElem):
        x = x.coords
    arr = np.empty(len(x), dtype=object)
    arr[:] = [Scalar.of(c) for c in x]
    return ZTensor.from_scalars(arr)


def _matrix(t: ZTensor) -> Matrix:
    return Matrix.from_ztensor(t)


# octonion arithmetic on integer coordinate arrays

def _omul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum("...a,...b,abc->...c", x, y, oc.MULT)


def _oconj(x: np.ndarray) -> np.ndarray:
    return x @ oc.CONJ.T


def _opolar(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum("...a,ab,...b->...", x, oc.NORM_GRAM, y)


def _split16() -> tuple[np.ndarray, np.ndarray]:
    """Components (x1, x2) of the 16 basis vectors of C + C."""
    e = np.eye(16, dtype=np.int64)
    return e[:, :8], e[:, 8:]


def _bicayley_tensor() -> np.ndarray:
    x1, x2 = _split16()
    X1, X2 = x1[:, None, None, :], x2[:, None, None, :]
    Y1, Y2 = x1[None, :, None, :], x2[None, :, None, :]
    Z1, Z2 = x1[None, None, :, :], x2[None, None, :, :]
    cy1, cy2 = _oconj(Y1), _oconj(Y2)
    first = (_omul(X1, _omul(cy1, Z1)) + _omul(Z1, _omul(cy1, X1))
             + _omul(_oconj(X2), _omul(Y2, Z1)) + _omul(_oconj(Z2), _omul(Y2, X1)))
    second = (_omul(_omul(X2, cy2), Z2) + _omul(_omul(Z2, cy2), X2)
              + _omul(_omul(X2, Y1), _oconj(Z1)) + _omul(_omul(Z2, Y1), _oconj(X1)))
    t_alt = np.concatenate([np.broadcast_to(first, (16, 16, 16, 8)),
                            np.broadcast_to(second, (16, 16, 16, 8))], axis=-1)
    # the same product through the trace form
    txy = _opolar(X1, Y1) + _opolar(X2, Y2)
    tzy = _opolar(Z1, Y1) + _opolar(Z2, Y2)
    s = _omul(X2, Z1) + _omul(Z2, X1)
    c1 = _opolar(X1, Z1)[..., None] * Y1 + _omul(cy2, s)
    c2 = _opolar(X2, Z2)[..., None] * Y2 + _omul(s, cy1)
    zz = np.concatenate([np.broadcast_to(Z1, (16, 16, 16, 8)), np.broadcast_to(Z2, (16, 16, 16, 8))], -1)
    xx = np.concatenate([np.broadcast_to(X1, (16, 16, 16, 8)), np.broadcast_to(X2, (16, 16, 16, 8))], -1)
    t_trace = txy[..., None] * zz + tzy[..., None] * xx - np.concatenate(
        [np.broadcast_to(c1, (16, 16, 16, 8)), np.broadcast_to(c2, (16, 16, 16, 8))], -1)
    if not np.array_equal(t_alt, t_trace):
        raise InternalConsistencyError("the two bi-Cayley triple product formulas disagree")
    return np.ascontiguousarray(t_alt)


def _m12_tensors() -> tuple[np.ndarray, np.ndarray]:
    x1, x2 = _split16()
    X1, X2 = x1[:, None, None, :], x2[:, None, None, :]
    Y1, Y2 = x1[None, :, None, :], x2[None, :, None, :]
    Z1, Z2 = x1[None, None, :, :], x2[None, None, :, :]
    shape = (16, 16, 16, 8)
    # linearizations of x(yx) and (yx)y in the variable appearing twice
    p1 = (_omul(_omul(X1, Y1), Z1) + _omul(_omul(Z1, Y1), X1)
          + _omul(X2, _omul(Y2, Z1)) + _omul(Z2, _omul(Y2, X1)))
    p2 = (_omul(X1, _omul(Y1, Z2)) + _omul(Z1, _omul(Y1, X2))
          + _omul(_omul(X2, Y2), Z2) + _omul(_omul(Z2, Y2), X2))
    m1 = (_omul(_omul(X1, Y1), Z1) + _omul(_omul(Z1, Y1), X1)
          + _omul(_omul(X1, Y2), Z2) + _omul(_omul(Z1, Y2), X2))
    m2 = (_omul(_omul(X2, Y1), Z1) + _omul(_omul(Z2, Y1), X1)
          + _omul(_omul(X2, Y2), Z2) + _omul(_omul(Z2, Y2), X2))
    plus = np.concatenate([np.broadcast_to(p1, shape), np.broadcast_to(p2, shape)], -1)
    minus = np.concatenate([np.broadcast_to(m1, shape), np.broadcast_to(m2, shape)], -1)
    return np.ascontiguousarray(plus), np.ascontiguousarray(minus)


def _bicayley_labels() -> tuple[str, ...]:
    return tuple(f"({z},0)" for z in oc.LABELS) + tuple(f"(0,{z})" for z in oc.LABELS)


def _bicayley_trace() -> ZTensor:
    g = np.zeros((16, 16), dtype=np.int64)
    g[:8, :8] = oc.NORM_GRAM
    g[8:, 8:] = oc.NORM_GRAM
    return ZTensor.from_int(g)


@lru_cache(maxsize=None)
def bicayley_pair() -> JordanSystem:
    """The bi-Cayley pair (B, B), B = C + C, with trace t = n + n."""
    t = ZTensor.from_int(_bicayley_tensor())
    labels = _bicayley_labels()
    return JordanSystem("bicayley_pair", "pair", "bicayley", (16, 16), (labels, labels),
                        {"+": t, "-": t}, _bicayley_trace())


@lru_cache(maxsize=None)
def bicayley_triple() -> JordanSystem:
    p = bicayley_pair()
    return JordanSystem("bicayley_triple", "triple", "bicayley", p.dims, p.labels, p.tensors, p.trace)


@lru_cache(maxsize=None)
def albert_pair() -> JordanSystem:
    """(A, A) with Q_x = U_x and trace T(x, y) = T(xy)."""
    t = alb.triple_tensor()
    return JordanSystem("albert_pair", "pair", "albert", (27, 27), (alb.LABELS, alb.LABELS),
                        {"+": t, "-": t}, alb.trace_matrix())


@lru_cache(maxsize=None)
def albert_triple() -> JordanSystem:
    p = albert_pair()
    return JordanSystem("albert_triple", "triple", "albert", p.dims, p.labels, p.tensors, p.trace)


@lru_cache(maxsize=None)
def m12_pair() -> JordanSystem:
    """1x2 matrices over C paired with 1x2 matrices over the opposite algebra."""
    plus, minus = _m12_tensors()
    tr = np.einsum("abc,c->ab", oc.MULT, oc.NORM_GRAM @ oc.UNIT)
    g = np.zeros((16, 16), dtype=np.int64)
    g[:8, :8] = tr
    g[8:, 8:] = tr
    labels = tuple(f"[{z},0]" for z in oc.LABELS) + tuple(f"[0,{z}]" for z in oc.LABELS)
    return JordanSystem("m12_pair", "pair", "m12", (16, 16), (labels, labels),
                        {"+": ZTensor.from_int(plus), "-": ZTensor.from_int(minus)}, ZTensor.from_int(g))


SYSTEMS = {
    "bicayley_pair": bicayley_pair,
    "bicayley_triple": bicayley_triple,
    "albert_pair": albert_pair,
    "albert_triple": albert_triple,
    "m12_pair": m12_pair,
}


def get_system(name: str) -> JordanSystem:
    try:
        return SYSTEMS[name]()
    except KeyError:
        raise ValueError(f"unknown system {name!r}") from None


# tensor transport

def _as_ztensor(m) -> ZTensor:
    if isinstance(m, ZTensor):
        return m
    if isinstance(m, Matrix):
        return m.to_ztensor()
    return ZTensor.from_scalars(np.array(m, dtype=object))


def transport(t: ZTensor, pa, pb, pc, qd) -> ZTensor:
    """``sum P_a[a',a] P_b[b',b] P_c[c',c] t[a',b',c',d'] Q[d,d']``.

    With columns of P the new basis vectors and Q the inverse change of basis,
    this is the structure tensor in the new bases.
    """
    pa, pb, pc, qd = (_as_ztensor(m) for m in (pa, pb, pc, qd))
    r = pa.einsum("xa,xbcd->abcd", t)
    r = r.einsum("axcd,xb->abcd", pb)
    r = r.einsum("abxd,xc->abcd", pc)
    return r.einsum("abcx,dx->abcd", qd)


def _tensor_mismatches(a: ZTensor, b: ZTensor, limit: int = 10) -> list[tuple[int, ...]]:
    diff = (a - b).nonzero_mask()
    return [tuple(int(i) for i in idx) for idx in np.argwhere(diff)[:limit]]


def verify_pair_isomorphism(source: JordanSystem, target: JordanSystem, phi_plus, phi_minus) -> bool:
    """Check phi^s {x, y, z} = {phi^s x, phi^-s y, phi^s z} for all basis triples, both signs."""
    maps = {"+": _as_ztensor(phi_plus), "-": _as_ztensor(phi_minus)}
    for s in SIGNS:
        n, m = source.dim(s), source.dim(opposite(s))
        if maps[s].shape != (target.dim(s), n) or target.dim(opposite(s)) != m:
            raise ValueError("dimension mismatch")
    return not isomorphism_violations(source, target, maps)


def isomorphism_violations(source: JordanSystem, target: JordanSystem, maps: dict,
                           limit: int = 10) -> list[tuple]:
    out = []
    for s in SIGNS:
        f, g = maps[s], maps[opposite(s)]
        lhs = source.tensors[s].einsum("abcx,dx->abcd", f)
        r = f.einsum("xa,xbcd->abcd", target.tensors[s])
        r = r.einsum("axcd,xb->abcd", g)
        rhs = r.einsum("abxd,xc->abcd", f)
        out += [(s,) + idx for idx in _tensor_mismatches(lhs, rhs, limit)]
        if source.kind == "triple" and target.kind == "triple":
            break
    return out[:limit]


# operators

def operators(sys: JordanSystem, sigma: str, x: Sequence, y: Sequence) -> tuple[Matrix, Matrix, Matrix]:
    """Matrices of Q^sigma(x), D^sigma(x, y) and B^sigma(x, y)."""
    q = sys.q_tensor(sigma, x)
    d = sys.d_tensor(sigma, x, y)
    qy = sys.q_tensor(opposite(sigma), y)
    b = ZTensor.identity(sys.dim(sigma)) - d + q @ qy
    return _matrix(q), _matrix(d), _matrix(b)


# axioms

@dataclass
class AxiomReport:
    system: str
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, name: str, count: int, bad: list) -> None:
        self.checks[name] = count
        self.violations += [(name,) + tuple(v) for v in bad]


def _signs_to_check(sys: JordanSystem) -> tuple[str, ...]:
    return ("+",) if sys.kind == "triple" else SIGNS


def verify_linear_axioms(sys: JordanSystem, limit: int = 20) -> AxiomReport:
    """Exhaustive check of {x,y,z} = {z,y,x} and of the commutator identity for D on basis vectors."""
    rep = AxiomReport(sys.name)
    for s in _signs_to_check(sys):
        t = sys.tensors[s]
        bad = _tensor_mismatches(t, t.transpose(2, 1, 0, 3), limit)
        rep.add(f"LJP1{s}", t.shape[0] ** 2 * t.shape[1], [(s,) + b for b in bad])
    for s in _signs_to_check(sys):
        t, u = sys.tensors[s], sys.tensors[opposite(s)]
        n, m = sys.dim(s), sys.dim(opposite(s))
        bad = []
        for x in range(n):
            viol = _ljp2_slice(t, u, x)
            bad += [(s, x) + v for v in viol]
            if len(bad) >= limit:
                break
        rep.add(f"LJP2{s}", n * n * m * m, bad[:limit])
    return rep


def _ljp2_slice(t: ZTensor, u: ZTensor, x: int) -> list[tuple[int, ...]]:
    """Violations of [D(x,y),D(u,v)] = D(D(x,y)u, v) - D(u, D(y,x)v) for fixed basis x.

    Indices of the result are (y, u, v, c, d) with the operator entry [d, c].
    """
    tx = t[x]                                     # [y, c, d]
    ux = u[:, x]                                  # [y, v, w] = {y, x, v}^-
    total = tx.einsum("ymd,uvcm->yuvcd", t)
    total = total - t.einsum("uvmd,ycm->yuvcd", tx)
    total = total - tx.einsum("yuw,wvcd->yuvcd", t)
    total = total + ux.einsum("yvw,uwcd->yuvcd", t)
    return [tuple(int(i) for i in idx) for idx in np.argwhere(total.nonzero_mask())[:5]]


def random_points(rng: np.random.Generator, count: int, n: int, bound: int = 3) -> ZTensor:
    """``count`` pseudorandom vectors with coordinates a + b i, a, b small integers."""
    re = rng.integers(-bound, bound + 1, size=(count, n))
    im = rng.integers(-bound, bound + 1, size=(count, n)) * (rng.random((count, n)) < 0.3)
    return ZTensor((count, n), {k: v for k, v in ((0, re), (6, im)) if np.any(v)}, 1).normalized()


def _q_batch(t: ZTensor, x: ZTensor) -> ZTensor:
    """Q(x_p) for a batch of vectors: result[p, d, b]."""
    p, n = x.shape
    m = t.shape[1]
    w = x.einsum("pa,pc->pac", x).reshape(p, n * n)
    r = w @ t.transpose(0, 2, 3, 1).reshape(n * n, n * m)
    return r.reshape(p, n, m).scale(HALF)


def _d_batch(t: ZTensor, x: ZTensor, y: ZTensor) -> ZTensor:
    """D(x_p, y_p) for paired batches: result[p, d, c]."""
    p, n = x.shape
    m = y.shape[1]
    w = x.einsum("pa,pb->pab", y).reshape(p, n * m)
    r = w @ t.transpose(0, 1, 3, 2).reshape(n * m, n * n)
    return r.reshape(p, n, n)


def _bmm(a: ZTensor, b: ZTensor) -> ZTensor:
    return a.einsum("pij,pjk->pik", b)


def _bvec(a: ZTensor, v: ZTensor) -> ZTensor:
    return a.einsum("pij,pj->pi", v)


def _rows_bad(diff: ZTensor) -> np.ndarray:
    mask = diff.nonzero_mask()
    return np.nonzero(mask.reshape(mask.shape[0], -1).any(axis=1))[0]


def quadratic_axiom_failures(sys: JordanSystem, sigma: str, xs: ZTensor, ys: ZTensor) -> list[tuple]:
    """Check the three quadratic identities at the paired points (xs[p], ys[p])."""
    t, u = sys.tensors[sigma], sys.tensors[opposite(sigma)]
    qx = _q_batch(t, xs)
    qy = _q_batch(u, ys)
    out = []
    # D(x,y) Q(x) = Q(x) D(y,x)
    lhs = _bmm(_d_batch(t, xs, ys), qx)
    rhs = _bmm(qx, _d_batch(u, ys, xs))
    out += [("QJP1", sigma, int(p)) for p in _rows_bad(lhs - rhs)]
    # D(Q(x)y, y) = D(x, Q(y)x)
    qxy = _bvec(qx, ys)
    lhs = _d_batch(t, qxy, ys)
    rhs = _d_batch(t, xs, _bvec(qy, xs))
    out += [("QJP2", sigma, int(p)) for p in _rows_bad(lhs - rhs)]
    # Q(Q(x)y) = Q(x) Q(y) Q(x)
    lhs = _q_batch(t, qxy)
    rhs = _bmm(_bmm(qx, qy), qx)
    out += [("QJP3", sigma, int(p)) for p in _rows_bad(lhs - rhs)]
    return out


def _basis_sums(n: int) -> np.ndarray:
    rows = [np.eye(n, dtype=np.int64)[i] for i in range(n)]
    for i, j in combinations(range(n), 2):
        r = np.zeros(n, dtype=np.int64)
        r[i] = r[j] = 1
        rows.append(r)
    return np.array(rows)


def verify_quadratic_axioms(sys: JordanSystem, seed: int = 0, trials: int = 50,
                            structured: bool = True, chunk: int = 1024) -> AxiomReport:
    """Quadratic axioms at seeded random points plus sums of at most two basis vectors.

    The structured points pair every x that is a sum of at most two basis
    vectors with every basis vector y, and symmetrically.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rep = AxiomReport(sys.name)
    rng = np.random.default_rng(seed)
    for s in _signs_to_check(sys):
        n, m = sys.dim(s), sys.dim(opposite(s))
        xs, ys = random_points(rng, trials, n), random_points(rng, trials, m)
        bad = quadratic_axiom_failures(sys, s, xs, ys)
        rep.add(f"random{s}", trials, [b + ("random",) for b in bad])
        if not structured:
            continue
        batches = []
        sx, by = _basis_sums(n), np.eye(m, dtype=np.int64)
        batches.append((np.repeat(sx, m, axis=0), np.tile(by, (len(sx), 1))))
        bx, sy = np.eye(n, dtype=np.int64), _basis_sums(m)
        batches.append((np.tile(bx, (len(sy), 1)), np.repeat(sy, n, axis=0)))
        total = 0
        fails = []
        for xa, ya in batches:
            for start in range(0, len(xa), chunk):
                xz = ZTensor.from_int(xa[start:start + chunk])
                yz = ZTensor.from_int(ya[start:start + chunk])
                fails += [b + ("structured", start + b[2]) for b in quadratic_axiom_failures(sys, s, xz, yz)]
            total += len(xa)
        rep.add(f"structured{s}", total, fails[:20])
    return rep


# Peirce decomposition and idempotents

def is_idempotent(sys: JordanSystem, e_plus: Sequence, e_minus: Sequence) -> bool:
    e_plus = tuple(Scalar.of(c) for c in e_plus)
    e_minus = tuple(Scalar.of(c) for c in e_minus)
    return sys.quadratic("+", e_plus, e_minus) == e_plus and sys.quadratic("-", e_minus, e_plus) == e_minus


def _column_basis(m: ZTensor) -> ZTensor:
    """Basis (as columns) of the column space, taken from the pivot columns."""
    mat = _matrix(m)
    r, rank = rref(mat)
    piv = pivot_columns(r)
    if not piv:
        return ZTensor.zeros((m.shape[0], 0))
    return m.take(piv, axis=1)


@dataclass
class PeirceDecomposition:
    projections: dict      # sigma -> (E2, E1, E0) as Matrix
    components: dict       # sigma -> (basis of V2, V1, V0), each a list of vectors
    dims: dict             # sigma -> (d2, d1, d0)
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def peirce(sys: JordanSystem, e_plus: Sequence, e_minus: Sequence) -> PeirceDecomposition:
    """Peirce projections E2 = Q(e)Q(e'), E1 = D(e,e') - 2E2, E0 = B(e,e') and their images."""
    if not is_idempotent(sys, e_plus, e_minus):
        raise ValueError("not an idempotent")
    e = {"+": tuple(Scalar.of(c) for c in e_plus), "-": tuple(Scalar.of(c) for c in e_minus)}
    proj, comps, bases, dims = {}, {}, {}, {}
    violations = []
    for s in SIGNS:
        o = opposite(s)
        n = sys.dim(s)
        e2 = sys.q_tensor(s, e[s]) @ sys.q_tensor(o, e[o])
        d = sys.d_tensor(s, e[s], e[o])
        e1 = d - e2.scale(2)
        e0 = ZTensor.identity(n) - d + e2
        ps = (e2, e1, e0)
        ident = ZTensor.identity(n)
        if not (e2 + e1 + e0).equals(ident):
            violations.append(("sum", s))
        for i in range(3):
            for j in range(3):
                want = ps[i] if i == j else ZTensor.zeros((n, n))
                if not (ps[i] @ ps[j]).equals(want):
                    violations.append(("orthogonality", s, i, j))
        cols = [_column_basis(p) for p in ps]
        proj[s] = tuple(_matrix(p) for p in ps)
        comps[s] = tuple([tuple(c) for c in b.T.to_scalars()] for b in cols)
        dims[s] = tuple(b.shape[1] for b in cols)
        bases[s] = (ps, cols)
    # {V_i, V_j, V_k} in V_{i-j+k}
    labels = (2, 1, 0)
    for s in SIGNS:
        o = opposite(s)
        ps, cols = bases[s]
        _, ocols = bases[o]
        t = sys.tensors[s]
        for a, ca in enumerate(cols):
            for b, cb in enumerate(ocols):
                for c, cc in enumerate(cols):
                    if 0 in (ca.shape[1], cb.shape[1], cc.shape[1]):
                        continue
                    r = ca.einsum("xa,xbcd->abcd", t)
                    r = r.einsum("axcd,xb->abcd", cb)
                    r = r.einsum("abxd,xc->abcd", cc)
                    target = labels[a] - labels[b] + labels[c]
                    if target in labels:
                        proj_t = ps[labels.index(target)]
                        r2 = r.einsum("abcx,dx->abcd", proj_t)
                        ok = r2.equals(r)
                    else:
                        ok = r.is_zero()
                    if not ok:
                        violations.append(("containment", s, labels[a], labels[b], labels[c]))
    return PeirceDecomposition(proj, comps, dims, violations)


def complete_idempotent(sys: JordanSystem, sigma: str, x: Sequence) -> tuple[tuple, tuple] | None:
    """Solve Q_x y = x and return the idempotent (e^+, e^-) with e^sigma = x, or None."""
    x = tuple(Scalar.of(c) for c in x)
    if not any(x):
        raise ValueError("cannot complete the zero vector")
    q = _matrix(sys.q_tensor(sigma, x))
    y = solve(q, x)
    if y is None:
        return None
    other = sys.quadratic(opposite(sigma), y, x)
    pair = (x, other) if sigma == "+" else (other, x)
    if not is_idempotent(sys, *pair):
        raise InternalConsistencyError("completed pair is not an idempotent")
    return pair


def _in_span(vectors: ZTensor, x: tuple) -> bool:
    m = _matrix(vectors)
    return solve(m, x) is not None


def rank_element(sys: JordanSystem, sigma: str, x: Sequence) -> int:
    """Rank of an element: 0, 1 when im Q_x = F x, else 2 (bi-Cayley); Albert rank for Albert."""
    x = tuple(Scalar.of(c) for c in x)
    if sys.family == "albert":
        return alb.albert_rank(alb.AlbertElem.from_vector(x))
    if sys.family != "bicayley":
        raise ValueError(f"rank is not supported for {sys.name}")
    if not any(x):
        return 0
    q = sys.q_tensor(sigma, x)
    if _matrix(q).rank() == 1 and _in_span(q, x):
        return 1
    return 2


def _octonion_parts(x: Sequence) -> tuple[oc.Octonion, oc.Octonion]:
    x = [Scalar.of(c) for c in x]
    if len(x) != 16:
        raise ValueError("a bi-Cayley vector has 16 coordinates")
    return oc.Octonion(tuple(x[:8])), oc.Octonion(tuple(x[8:]))


@dataclass(frozen=True)
class OrbitLabel:
    name: str
    value: Scalar | None = None

    def __str__(self) -> str:
        return self.name if self.value is None else f"{self.name}({self.value})"


def orbit_label_triple(x: Sequence) -> OrbitLabel:
    """Orbit of x in the bi-Cayley triple system: O0, O1 or O2(q(x)) with q = n + n."""
    x1, x2 = _octonion_parts(x)
    if x1.is_zero() and x2.is_zero():
        return OrbitLabel("O0")
    if oc.omul(x2, x1).is_zero() and not x1.norm() and not x2.norm():
        return OrbitLabel("O1")
    return OrbitLabel("O2", x1.norm() + x2.norm())


# subsystems

def subsystem(sys: JordanSystem, basis_plus: Sequence[Sequence], basis_minus: Sequence[Sequence],
              name: str | None = None) -> JordanSystem:
    """Restriction to subspaces spanned by the given vectors; raises if they are not a subpair."""
    cols = {"+": _as_ztensor([[Scalar.of(c) for c in v] for v in basis_plus]).T,
            "-": _as_ztensor([[Scalar.of(c) for c in v] for v in basis_minus]).T}
    left = {}
    for s in SIGNS:
        p = cols[s]
        r, _ = rref(_matrix(p.T))
        rows = pivot_columns(r)
        if len(rows) != p.shape[1]:
            raise ValueError("basis vectors are linearly dependent")
        sub = _matrix(p.take(rows, axis=0))
        inv = sub.inverse().to_ztensor()
        sel = np.zeros((len(rows), p.shape[0]), dtype=np.int64)
        for i, rrow in enumerate(rows):
            sel[i, rrow] = 1
        left[s] = inv @ ZTensor.from_int(sel)
    tensors = {}
    for s in SIGNS:
        o = opposite(s)
        t = sys.tensors[s]
        full = transport(t, cols[s], cols[o], cols[s], ZTensor.identity(sys.dim(s)))
        reduced = full.einsum("abcx,dx->abcd", left[s])
        back = reduced.einsum("abcx,dx->abcd", cols[s])
        if not back.equals(full):
            raise ValueError("the subspaces are not closed under the triple product")
        tensors[s] = reduced
    if sys.kind == "triple":
        tensors["-"] = tensors["+"]
    tr = cols["+"].T.einsum("ax,xb->ab", sys.trace).einsum("ax,xb->ab", cols["-"])
    dims = (len(basis_plus), len(basis_minus))
    labels = tuple(tuple(f"w{k}" for k in range(d)) for d in dims)
    return JordanSystem(name or f"{sys.name}_sub", sys.kind, sys.family, dims, labels, tensors, tr)


def albert_peirce_one_is_bicayley() -> bool:
    """The Peirce 1-space of (E3, E3) in the Albert pair, rescaled by 2, is the bi-Cayley pair."""
    va, vb = albert_pair(), bicayley_pair()
    e3 = va.vector("+", {"E3": 1})
    dec = peirce(va, e3, e3)
    if not dec.ok or dec.dims["+"][1] != 16:
        return False
    sub_idx = list(range(3, 19))
    if not _same_span(dec.components["+"][1], sub_idx, 27):
        return False
    basis = [va.basis_vector("+", k) for k in sub_idx]
    sub = subsystem(va, basis, basis)
    two = ZTensor.identity(16).scale(2)
    return verify_pair_isomorphism(sub, vb, two, two)


def _same_span(vectors: list, idx: list[int], n: int) -> bool:
    a = Matrix.from_columns(vectors)
    b = Matrix.from_columns([[ONE if j == k else ZERO for j in range(n)] for k in idx])
    from .exactlinalg import column_space_equal
    return column_space_equal(a, b)


def m12_isomorphism() -> tuple[ZTensor, ZTensor]:
    """Matrices of (x1, x2) -> (conj x2, x1) and (y1, y2) -> (y2, conj y1)."""
    c = oc.CONJ
    z = np.zeros((8, 8), dtype=np.int64)
    e = np.eye(8, dtype=np.int64)
    plus = np.block([[z, c], [e, z]])
    minus = np.block([[z, e], [c, z]])
    return ZTensor.from_int(plus), ZTensor.from_int(minus)


def trace_matches_octonion_norm() -> bool:
    """t(x, y) = n(x1, y1) + n(x2, y2) evaluated through the octonion module."""
    vb = bicayley_pair()
    tr = vb.trace.to_scalars()
    for a in range(16):
        for b in range(16):
            xa, xb = _octonion_parts(vb.basis_vector("+", a)), _octonion_parts(vb.basis_vector("-", b))
            if tr[a, b] != oc.polar(xa[0], xb[0]) + oc.polar(xa[1], xb[1]):
                return False
    return True
