"""The Tits-Kantor-Koecher Lie algebra of a Jordan pair.

``L = L^-1 + L^0 + L^1`` with ``L^1 = V^+``, ``L^-1 = V^-`` and ``L^0`` the span
of the operator pairs ``nu(x, y) = (D(x, y), -D(y, x))``.  Brackets:

* ``[x, y] = nu(x, y)`` for ``x`` in ``V^+`` and ``y`` in ``V^-``,
* ``[X, x] = X^+ x`` and ``[X, y] = X^- y`` for ``X`` in ``L^0``,
* ``[X, Y]`` is the commutator of operator pairs.

Structure constants ``C[i, j, k]`` give the coefficient of basis ``k`` in ``[b_i, b_j]``.
Basis order is ``L^-1``, ``L^0``, ``L^1``.

>>> from .jordan import bicayley_pair
>>> L = tkk(bicayley_pair())
>>> L.dim, L.level_dim(0)
(78, 46)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import IO

import numpy as np

from . import jordan as jd
from .exactfield import ZERO, deserialize, serialize
from .exactlinalg import (Matrix, int_pivot_columns, rank_rational, zinverse, zpivot_columns)
from .gradings import AbelianGroup, Grading, verify_grading
from .jordan import InternalConsistencyError, JordanSystem
from ._ztensor import ZTensor, _as_object, _fits, _scale_int, concatenate


@dataclass(eq=False)
class LieAlgebra:
    """Structure constants plus the data needed to certify them.

    ``l0_plus[k]`` and ``l0_minus[k]`` are the matrices (``[d, c]``, column c
    maps to row d) of the k-th ``L^0`` basis element on ``V^+`` and ``V^-``.
    ``pair_tensors`` are the Jordan pair tensors in the bases used for ``L^1``
    and ``L^-1``.
    """

    name: str
    labels: tuple[str, ...]
    levels: np.ndarray
    constants: ZTensor = field(repr=False)
    l0_plus: ZTensor | None = field(default=None, repr=False)
    l0_minus: ZTensor | None = field(default=None, repr=False)
    pair_tensors: dict | None = field(default=None, repr=False)
    system: JordanSystem | None = field(default=None, repr=False)
    group: AbelianGroup | None = None
    degrees: np.ndarray | None = field(default=None, repr=False)
    grading: Grading | None = field(default=None, repr=False)
    basis_change: dict | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def indices(self, level: int) -> np.ndarray:
        return np.nonzero(self.levels == level)[0]

    def level_dim(self, level: int) -> int:
        return int(np.sum(self.levels == level))

    def bracket(self, u, v) -> tuple:
        """Bracket of two coordinate vectors."""
        a = ZTensor.from_scalars(np.array(list(u), dtype=object).reshape(1, -1))
        b = ZTensor.from_scalars(np.array(list(v), dtype=object).reshape(1, -1))
        r = a.einsum("xi,ijk->xjk", self.constants)
        r = b.einsum("xj,yjk->yk", r)
        return tuple(r.to_scalars()[0])

    def basis_bracket(self, i: int, j: int) -> dict:
        row = self.constants[i, j]
        return {self.labels[k]: row.item(k) for k in np.nonzero(row.nonzero_mask())[0]}


def _assemble(shape: tuple, blocks: list) -> ZTensor:
    """ZTensor of the given shape from ``(index tuple, ZTensor)`` blocks."""
    den = 1
    for _, t in blocks:
        den = den * t.den // gcd(den, t.den)
    keys = sorted({k for _, t in blocks for k in t.planes})
    obj = any(v.dtype == object for _, t in blocks for v in t.planes.values())
    planes = {}
    for k in keys:
        p = np.zeros(shape, dtype=object if obj else np.int64)
        if obj:
            p[...] = 0
        for idx, t in blocks:
            v = _scale_int(t.int_plane(k), den // t.den)
            p[idx] = _as_object(v) if obj else v
        planes[k] = _fits(p) if obj else p
    return ZTensor(shape, planes, den).normalized()


def _ix(*ranges) -> tuple:
    return np.ix_(*[np.asarray(r) for r in ranges])


def _nu_vectors(tp: ZTensor, tm: ZTensor) -> ZTensor:
    """Candidates nu(x_i, y_j) flattened to (n*m, n*n + m*m): D(x,y) then -D(y,x)."""
    n, m = tp.shape[0], tm.shape[0]
    dplus = tp.transpose(0, 1, 3, 2).reshape(n * m, n * n)            # [i,j,d,c]
    dminus = (-tm).transpose(1, 0, 3, 2).reshape(n * m, m * m)        # [j,i,d,c] -> [i,j,...]
    return concatenate([dplus, dminus], axis=1)


def _coords_solver(basis: ZTensor):
    """Coordinates in the row space of ``basis`` (rational), via an invertible column subset."""
    cols = int_pivot_columns(basis.int_plane(0))
    sub = basis.take(cols, axis=1)
    inv = Matrix.from_ztensor(sub).inverse().to_ztensor()

    def coords(v: ZTensor) -> ZTensor:
        return v.take(cols, axis=len(v.shape) - 1) @ inv

    return coords


def tkk(sys: JordanSystem) -> LieAlgebra:
    """TKK algebra of a Jordan pair in its Cartan basis."""
    if sys.kind != "pair":
        raise ValueError("the TKK construction needs a Jordan pair")
    return _tkk_cached(sys.name)


@lru_cache(maxsize=None)
def _tkk_cached(name: str) -> LieAlgebra:
    sys = jd.get_system(name)
    tp, tm = sys.tensors["+"], sys.tensors["-"]
    if not (tp.is_rational() and tm.is_rational()):
        raise ValueError("the Cartan-basis construction expects rational structure tensors")
    n, m = sys.dims
    cand = _nu_vectors(tp, tm)
    chosen = int_pivot_columns(cand.int_plane(0).T)
    n0 = len(chosen)
    basis = cand.take(chosen, axis=0)                                  # (n0, n^2 + m^2)
    coords = _coords_solver(basis)

    nu = coords(cand).reshape(n, m, n0)                                # [x_i^+, y_j^-] in L^0
    xp = basis[:, :n * n].reshape(n0, n, n)
    xm = basis[:, n * n:].reshape(n0, m, m)
    comm_p = xp.einsum("kab,lbc->klac", xp) - xp.einsum("lab,kbc->klac", xp)
    comm_m = xm.einsum("kab,lbc->klac", xm) - xm.einsum("lab,kbc->klac", xm)
    comm = concatenate([comm_p.reshape(n0, n0, n * n), comm_m.reshape(n0, n0, m * m)], axis=2)
    cc = coords(comm)                                                  # (n0, n0, n0)
    if not (cc @ basis).equals(comm):
        raise InternalConsistencyError("L^0 is not closed under commutators")

    lm, l0, lp = range(m), range(m, m + n0), range(m + n0, m + n0 + n)
    d = m + n0 + n
    blocks = [
        (_ix(lp, lm, l0), nu), (_ix(lm, lp, l0), -nu.transpose(1, 0, 2)),
        (_ix(l0, lp, lp), xp.transpose(0, 2, 1)), (_ix(lp, l0, lp), -xp.transpose(2, 0, 1)),
        (_ix(l0, lm, lm), xm.transpose(0, 2, 1)), (_ix(lm, l0, lm), -xm.transpose(2, 0, 1)),
        (_ix(l0, l0, l0), cc),
    ]
    consts = _assemble((d, d, d), blocks)
    plus_labels, minus_labels = sys.labels
    pairs = [(i // m, i % m) for i in chosen]
    labels = (tuple(f"{lab}^-" for lab in minus_labels)
              + tuple(f"nu({plus_labels[i]},{minus_labels[j]})" for i, j in pairs)
              + tuple(f"{lab}^+" for lab in plus_labels))
    levels = np.array([-1] * m + [0] * n0 + [1] * n)
    return LieAlgebra(f"tkk({name})", labels, levels, consts, xp, xm, dict(sys.tensors), sys)


# verification

@dataclass
class LieReport:
    name: str
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, count: int, bad: list) -> None:
        self.checks[check] = count
        self.violations.extend((check,) + tuple(b) for b in bad)


REDUCED_PATTERNS = ((1, 1, -1), (1, -1, -1), (0, 1, -1), (0, -1, 1))


def jacobi_violations(L: LieAlgebra, I, J, K, limit: int = 10) -> tuple[int, list]:
    """Jacobiator [[i,j],k] + [[j,k],i] + [[k,i],j] over the index sets; returns (count, first bad)."""
    C = L.constants
    I, J, K = (np.asarray(s) for s in (I, J, K))
    t1 = C.take(I, 0).take(J, 1).einsum("ijm,mkl->ijkl", C.take(K, 1))
    t2 = C.take(J, 0).take(K, 1).einsum("jkm,mil->ijkl", C.take(I, 1))
    t3 = C.take(K, 0).take(I, 1).einsum("kim,mjl->ijkl", C.take(J, 1))
    jac = t1 + t2 + t3
    bad = np.argwhere(jac.nonzero_mask().any(axis=3))
    out = [(L.labels[I[a]], L.labels[J[b]], L.labels[K[c]]) for a, b, c in bad[:limit]]
    return len(I) * len(J) * len(K), out if len(bad) else []


def _certify_operators(L: LieAlgebra, rep: LieReport) -> None:
    """Stored constants reproduce the operator action, commutators and nu."""
    C = L.constants
    lm, l0, lp = L.indices(-1), L.indices(0), L.indices(1)
    xp, xm = L.l0_plus, L.l0_minus
    bad = []
    if not C.take(l0, 0).take(lp, 1).take(lp, 2).equals(xp.transpose(0, 2, 1)):
        bad.append(("L0 action on L1",))
    if not C.take(l0, 0).take(lm, 1).take(lm, 2).equals(xm.transpose(0, 2, 1)):
        bad.append(("L0 action on L-1",))
    cc = C.take(l0, 0).take(l0, 1).take(l0, 2)
    for ops in (xp, xm):
        comm = ops.einsum("kab,lbc->klac", ops) - ops.einsum("lab,kbc->klac", ops)
        if not cc.einsum("klm,mac->klac", ops).equals(comm):
            bad.append(("L0 commutators",))
    nu = C.take(lp, 0).take(lm, 1).take(l0, 2)
    tp, tm = L.pair_tensors["+"], L.pair_tensors["-"]
    if not nu.einsum("ijk,kdc->ijdc", xp).equals(tp.transpose(0, 1, 3, 2)):
        bad.append(("nu on V+",))
    if not nu.einsum("ijk,kdc->ijdc", xm).equals(-tm.transpose(1, 0, 3, 2)):
        bad.append(("nu on V-",))
    rep.add("operator certification", 5, bad)


def verify_lie(L: LieAlgebra, mode: str = "reduced", limit: int = 10) -> LieReport:
    """Antisymmetry, 3-grading and the Jacobi identity (``reduced`` or ``full``)."""
    if mode not in ("reduced", "full"):
        raise ValueError("mode must be 'reduced' or 'full'")
    rep = LieReport(L.name)
    C = L.constants
    d = L.dim
    anti = C + C.transpose(1, 0, 2)
    rep.add("antisymmetry", d * d, [(L.labels[i], L.labels[j]) for i, j in
                                   np.argwhere(anti.nonzero_mask().any(axis=2))[:limit]])
    idx = np.argwhere(C.nonzero_mask())
    lv = L.levels
    badg = idx[lv[idx[:, 0]] + lv[idx[:, 1]] != lv[idx[:, 2]]]
    rep.add("3-grading", d * d, [(L.labels[i], L.labels[j], L.labels[k]) for i, j, k in badg[:limit]])
    if mode == "reduced":
        if L.l0_plus is not None:
            _certify_operators(L, rep)
        for pat in REDUCED_PATTERNS:
            count, bad = jacobi_violations(L, *(L.indices(p) for p in pat), limit=limit)
            rep.add(f"jacobi{pat}", count, bad)
    else:
        allidx = np.arange(d)
        step = max(1, 2_000_000 // (d * d))
        total, bad = 0, []
        for s in range(0, d, step):
            count, b = jacobi_violations(L, allidx[s:s + step], allidx, allidx, limit=limit)
            total += count
            bad.extend(b[:limit - len(bad)])
        rep.add("jacobi(full)", total, bad)
    return rep


# gradings

def _block_diag(blocks: list[ZTensor]) -> ZTensor:
    n = sum(b.shape[0] for b in blocks)
    parts, off = [], 0
    for b in blocks:
        parts.append((_ix(range(off, off + b.shape[0]), range(off, off + b.shape[1])), b))
        off += b.shape[0]
    return _assemble((n, n), parts)


def extend_grading(L: LieAlgebra, gr: Grading) -> LieAlgebra:
    """Graded TKK algebra: L^1, L^-1 carry the pair grading, deg nu(x, y) = deg x + deg y."""
    if gr.kind != "pair" or gr.system.name != L.system.name:
        raise ValueError("extend_grading needs a grading on the pair the algebra was built from")
    if not verify_grading(gr).ok:
        raise ValueError(f"{gr.name} is not a valid grading")
    g = gr.group
    lm, l0, lp = L.indices(-1), L.indices(0), L.indices(1)
    n, m, n0 = len(lp), len(lm), len(l0)
    pp, pm = gr.basis_matrix("+"), gr.basis_matrix("-")
    nu = L.constants.take(lp, 0).take(lm, 1).take(l0, 2)
    nu_h = pp.einsum("ai,abk->ibk", nu).einsum("ibk,bj->ijk", pm).reshape(n * m, n0)
    dnu = g.reduce(gr.degrees["+"][:, None, :] + gr.degrees["-"][None, :, :]).reshape(n * m, -1)
    classes: dict = {}
    for c, row in enumerate(dnu.tolist()):
        classes.setdefault(tuple(row), []).append(c)
    chosen, degs0 = [], []
    for deg in sorted(classes):
        cand = classes[deg]
        for p in zpivot_columns(nu_h.take(cand, 0).T):
            chosen.append(cand[p])
            degs0.append(deg)
    if len(chosen) != n0:
        raise InternalConsistencyError("homogeneous candidates do not span L^0")
    q0 = nu_h.take(chosen, 0).T                                        # columns: new L^0 basis
    s = _block_diag([pm, q0, pp])
    sinv = _block_diag([gr.inverse_basis("-"), zinverse(q0), gr.inverse_basis("+")])
    C = L.constants
    c2 = s.einsum("ai,abc->ibc", C).einsum("ibc,bj->ijc", s).einsum("ijc,kc->ijk", sinv)
    xp = q0.einsum("lk,ldc->kdc", L.l0_plus)
    xp = gr.inverse_basis("+").einsum("ed,kdc->kec", xp).einsum("kec,cf->kef", pp)
    xm = q0.einsum("lk,ldc->kdc", L.l0_minus)
    xm = gr.inverse_basis("-").einsum("ed,kdc->kec", xm).einsum("kec,cf->kef", pm)
    plus_labels, minus_labels = gr.labels["+"], gr.labels["-"]
    labels = (tuple(f"{lab}^-" for lab in minus_labels)
              + tuple(f"nu({plus_labels[c // m]},{minus_labels[c % m]})" for c in chosen)
              + tuple(f"{lab}^+" for lab in plus_labels))
    degrees = np.concatenate([gr.degrees["-"], np.array(degs0, dtype=np.int64).reshape(n0, -1),
                              gr.degrees["+"]])
    return LieAlgebra(f"{L.name}[{gr.name}]", labels, L.levels.copy(), c2, xp, xm, dict(gr.tensors),
                      L.system, g, degrees, gr, {-1: pm, 0: q0, 1: pp})


def bracket_homogeneity_violations(L: LieAlgebra, limit: int = 10) -> list:
    idx = np.argwhere(L.constants.nonzero_mask())
    d = L.degrees
    diff = L.group.reduce(d[idx[:, 0]] + d[idx[:, 1]] - d[idx[:, 2]])
    bad = idx[diff.any(axis=1)]
    return [(L.labels[i], L.labels[j], L.labels[k]) for i, j, k in bad[:limit]]


def restrict_grading(L: LieAlgebra) -> Grading:
    """Recover the pair grading from the graded L^1 and L^-1."""
    if L.degrees is None or L.grading is None:
        raise ValueError("restrict_grading needs a graded algebra")
    src = L.grading
    bases = {"+": None if src.bases["+"] is None else L.basis_change[1],
             "-": None if src.bases["-"] is None else L.basis_change[-1]}
    degrees = {"+": L.degrees[L.indices(1)], "-": L.degrees[L.indices(-1)]}
    labels = {"+": tuple(s[:-2] for s in np.array(L.labels)[L.indices(1)]),
              "-": tuple(s[:-2] for s in np.array(L.labels)[L.indices(-1)])}
    return Grading(src.name, "pair", L.system, L.group, degrees, labels, bases)


def same_grading(a: Grading, b: Grading) -> bool:
    if a.group != b.group or a.system.name != b.system.name or a.kind != b.kind:
        return False
    for s in ("+", "-"):
        if not np.array_equal(a.degrees[s], b.degrees[s]) or a.labels[s] != b.labels[s]:
            return False
        if not a.basis_matrix(s).equals(b.basis_matrix(s)):
            return False
    return True


def lie_components(L: LieAlgebra) -> dict:
    out: dict = {}
    for k, row in enumerate(L.degrees.tolist()):
        out.setdefault(tuple(row), []).append(k)
    return out


def lie_grading_type(L: LieAlgebra) -> tuple[int, ...]:
    """(n1, n2, ...): n_i components of dimension i, over all degrees."""
    dims = [len(v) for v in lie_components(L).values()]
    return tuple(sum(1 for x in dims if x == i) for i in range(1, max(dims) + 1))


def component_dim(L: LieAlgebra, degree, level: int | None = None) -> int:
    deg = tuple(int(v) for v in L.group.reduce(np.asarray(degree)))
    ks = lie_components(L).get(deg, [])
    return sum(1 for k in ks if level is None or L.levels[k] == level)


# derivations

@dataclass
class Derivations:
    system: str
    dimension: int
    basis: list = field(repr=False)
    lower_bound: int = 0
    upper_bound: int = 0


def _inner_derivations(sys: JordanSystem) -> np.ndarray:
    """Rows (D^+ flattened, D^- flattened) of inner derivations; integer, common scale."""
    tp, tm = sys.tensors["+"], sys.tensors["-"]
    n, m = sys.dims
    if sys.kind == "pair":
        cand = _nu_vectors(tp, tm)
    else:
        # K(x, y) = D(x, y) - D(y, x) acting on the single space
        d = tp.transpose(0, 1, 3, 2)
        cand = (d - d.transpose(1, 0, 2, 3)).reshape(n * n, n * n)
    arr = cand.int_plane(0)
    rows = arr[int_pivot_columns(arr.T)]
    return rows


def _split_ops(sys: JordanSystem, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n, m = sys.dims
    a = rows[:, :n * n].reshape(-1, n, n)
    b = rows[:, n * n:].reshape(-1, m, m) if sys.kind == "pair" else a
    return a, b


def derivation_violations(sys: JordanSystem, rows: np.ndarray) -> int:
    """Number of candidate operator tuples failing the derivation identity on some basis triple."""
    a_all, b_all = _split_ops(sys, np.asarray(rows))
    bad = 0
    for s in (("+", "-") if sys.kind == "pair" else ("+",)):
        t = ZTensor.from_int(sys.tensors[s].int_plane(0))
        for lo in range(0, len(a_all), 4):
            A = ZTensor.from_int(a_all[lo:lo + 4] if s == "+" else b_all[lo:lo + 4])
            B = ZTensor.from_int(b_all[lo:lo + 4] if s == "+" else a_all[lo:lo + 4])
            e = t.einsum("abcd,rpd->rabcp", A)
            e = e - A.einsum("rxa,xbcp->rabcp", t)
            e = e - B.einsum("ryb,aycp->rabcp", t)
            e = e - A.einsum("rxc,abxp->rabcp", t)
            bad += int(e.nonzero_mask().reshape(e.shape[0], -1).any(axis=1).sum())
    return bad


def _equation_rows(sys: JordanSystem, triples: dict) -> np.ndarray:
    """Coefficient rows of the derivation equations for the chosen (a, b, c) per sign."""
    n, m = sys.dims
    pair = sys.kind == "pair"
    nvar = n * n + (m * m if pair else 0)
    out = []
    for s, trip in triples.items():
        t = sys.tensors[s].int_plane(0)
        ns, no = t.shape[0], t.shape[1]
        offs = 0 if s == "+" else n * n
        offo = (n * n if s == "+" else 0) if pair else 0
        for a, b, c in trip:
            rows = np.zeros((ns, nvar), dtype=np.int64)
            for p in range(ns):
                # A[p, d] T[a,b,c,d]
                rows[p, offs + p * ns: offs + (p + 1) * ns] += t[a, b, c, :]
            # -A[x, a] T[x, b, c, p]
            rows[:, offs + np.arange(ns) * ns + a] -= t[:, b, c, :].T
            rows[:, offo + np.arange(no) * no + b] -= t[a, :, c, :].T
            rows[:, offs + np.arange(ns) * ns + c] -= t[a, b, :, :].T
            out.append(rows)
    return np.concatenate(out)


def derivations(sys: JordanSystem, seed: int = 0) -> Derivations:
    """Derivation algebra dimension, squeezed between inner derivations and a subsystem kernel.

    Every inner derivation is checked exhaustively; the upper bound is the
    kernel dimension of the derivation equations on a growing set of basis
    triples.  When the bounds meet the inner derivations span Der exactly.
    """
    if sys.name not in ("bicayley_pair", "bicayley_triple", "albert_pair"):
        raise ValueError(f"derivations are supported for V_B, T_B and V_A, not {sys.name}")
    inner = _inner_derivations(sys)
    if derivation_violations(sys, inner):
        raise InternalConsistencyError("an inner derivation fails the derivation identity")
    lower = len(inner)
    n, m = sys.dims
    nvar = n * n + (m * m if sys.kind == "pair" else 0)
    rng = np.random.default_rng(seed)
    signs = ("+", "-") if sys.kind == "pair" else ("+",)
    count = 8
    while True:
        triples = {s: [tuple(rng.integers(0, sys.dim(s) if k != 1 else sys.dim(jd.opposite(s))) for k in range(3))
                       for _ in range(count)] for s in signs}
        rows = _equation_rows(sys, triples)
        upper = nvar - rank_rational(np.unique(rows, axis=0))
        if upper == lower:
            break
        if upper < lower:
            raise InternalConsistencyError("derivation kernel smaller than the inner derivations")
        if count >= sys.dim("+") ** 3:
            raise InternalConsistencyError("derivations beyond the inner ones: bounds do not meet")
        count *= 2
    a, b = _split_ops(sys, inner)
    basis = [(Matrix.from_ztensor(ZTensor.from_int(x)), Matrix.from_ztensor(ZTensor.from_int(y)))
             for x, y in zip(a, b)] if sys.kind == "pair" else \
        [Matrix.from_ztensor(ZTensor.from_int(x)) for x in a]
    return Derivations(sys.name, lower, basis, lower, upper)


# export / import

SCHEMA = "exjordan.structure-constants/1"


def structure_document(L: LieAlgebra) -> dict:
    group = L.group or AbelianGroup(0)
    basis = []
    for k, lab in enumerate(L.labels):
        entry = {"label": lab, "level": int(L.levels[k])}
        if L.degrees is not None:
            vec = [int(v) for v in L.degrees[k]]
            entry["degree"] = {"free": vec[:group.free_rank], "tors": vec[group.free_rank:]}
        basis.append(entry)
    idx = np.argwhere(L.constants.nonzero_mask())
    idx = idx[idx[:, 0] < idx[:, 1]]
    scal = L.constants.to_scalars() if len(idx) else None
    consts = [[int(i), int(j), int(k), serialize(scal[i, j, k])] for i, j, k in idx]
    return {"schema": SCHEMA, "name": L.name, "dim": L.dim,
            "group": {"free_rank": group.free_rank, "torsion": list(group.torsion)},
            "basis": basis, "constants": consts}


def export_structure_constants(L: LieAlgebra, sink: str | IO) -> None:
    doc = structure_document(L)
    if isinstance(sink, str):
        with open(sink, "w") as fh:
            json.dump(doc, fh)
    else:
        json.dump(doc, sink)


def import_structure_constants(source: str | IO | dict) -> LieAlgebra:
    if isinstance(source, dict):
        doc = source
    elif isinstance(source, str):
        with open(source) as fh:
            doc = json.load(fh)
    else:
        doc = json.load(source)
    d = doc["dim"]
    scal = np.empty((d, d, d), dtype=object)
    scal[...] = ZERO
    for i, j, k, c in doc["constants"]:
        v = deserialize(c)
        scal[i, j, k] = v
        scal[j, i, k] = -v
    group = AbelianGroup(doc["group"]["free_rank"], tuple(doc["group"]["torsion"]))
    basis = doc["basis"]
    degrees = None
    if basis and "degree" in basis[0]:
        degrees = np.array([b["degree"]["free"] + b["degree"]["tors"] for b in basis], dtype=np.int64)
    return LieAlgebra(doc["name"], tuple(b["label"] for b in basis), np.array([b["level"] for b in basis]),
                      ZTensor.from_scalars(scal), group=group, degrees=degrees)


def same_structure(a: LieAlgebra, b: LieAlgebra) -> bool:
    same_deg = (a.degrees is None) == (b.degrees is None) and (
        a.degrees is None or np.array_equal(a.degrees, b.degrees))
    return (a.labels == b.labels and np.array_equal(a.levels, b.levels) and same_deg
            and a.constants.equals(b.constants))


__all__ = [
    "LieAlgebra", "LieReport", "tkk", "verify_lie", "jacobi_violations", "extend_grading", "restrict_grading",
    "lie_grading_type", "component_dim", "bracket_homogeneity_violations", "same_grading", "derivations",
    "Derivations", "export_structure_constants", "import_structure_constants", "structure_document",
    "same_structure",
]
