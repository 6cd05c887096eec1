"""Abelian-group gradings on the bi-Cayley and Albert systems.

A grading is a homogeneous basis for each space (columns in Cartan
coordinates) together with a degree for each basis vector.  Degrees are integer
vectors: free coordinates first, then residues modulo the torsion moduli.

>>> g = catalog("cartan_bicayley_pair")
>>> g.group
AbelianGroup(free_rank=6, torsion=())
>>> g.degree("+", "(u1,0)")
GroupElem(free=(1, 0, 0, 1, 0, 0), tors=())
>>> verify_grading(g).ok
True
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import albert as alb
from . import jordan as jd
from . import octonion as oc
from .exactfield import HALF, I, OMEGA, ONE, ZERO, Scalar, deserialize, serialize
from .exactlinalg import Matrix, Presentation, canonical_invariants, kernel, presentation
from .jordan import SIGNS, JordanSystem, opposite
from ._ztensor import ZTensor


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank x Z_m1 x ... x Z_mk."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if any(m <= 1 for m in self.torsion):
            raise ValueError("torsion moduli must exceed 1")

    @property
    def width(self) -> int:
        return self.free_rank + len(self.torsion)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        arr = np.array(arr, dtype=np.int64)
        if self.torsion:
            arr[..., self.free_rank:] %= np.array(self.torsion, dtype=np.int64)
        return arr

    def element(self, vec: Sequence[int]) -> GroupElem:
        v = self.reduce(np.asarray(vec))
        return GroupElem(tuple(int(x) for x in v[:self.free_rank]), tuple(int(x) for x in v[self.free_rank:]))

    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return canonical_invariants(self.free_rank, self.torsion)

    def isomorphic(self, other: AbelianGroup) -> bool:
        return self.invariants() == other.invariants()

    def __str__(self) -> str:
        parts = ([f"Z^{self.free_rank}"] if self.free_rank > 1 else ["Z"] if self.free_rank else [])
        tors: dict[int, int] = {}
        for m in self.torsion:
            tors[m] = tors.get(m, 0) + 1
        parts += [f"Z{m}^{k}" if k > 1 else f"Z{m}" for m, k in tors.items()]
        return " x ".join(parts) or "0"


@dataclass(frozen=True)
class GroupElem:
    free: tuple[int, ...]
    tors: tuple[int, ...]

    def vector(self) -> tuple[int, ...]:
        return self.free + self.tors


@dataclass(eq=False)
class Grading:
    """A G-grading given by homogeneous bases and their degrees.

    ``kind`` is ``pair``, ``triple`` or ``algebra``.  For triples and algebras
    the two signs share the same basis and degrees.  ``bases[s]`` is None for
    the Cartan basis, otherwise a ZTensor whose columns are the basis vectors.
    """

    name: str
    kind: str
    system: JordanSystem
    group: AbelianGroup
    degrees: dict
    labels: dict
    bases: dict = field(default_factory=lambda: {"+": None, "-": None})

    def __post_init__(self):
        for s in SIGNS:
            self.degrees[s] = self.group.reduce(np.asarray(self.degrees[s]).reshape(-1, self.group.width))

    def degree(self, sigma: str, label: str | int) -> GroupElem:
        k = self.labels[sigma].index(label) if isinstance(label, str) else label
        return self.group.element(self.degrees[sigma][k])

    def basis_matrix(self, sigma: str) -> ZTensor:
        b = self.bases[sigma]
        return ZTensor.identity(self.system.dim(sigma)) if b is None else b

    def basis_vectors(self, sigma: str) -> list[tuple]:
        return [tuple(c) for c in self.basis_matrix(sigma).T.to_scalars()]

    @cached_property
    def inverse_bases(self) -> dict:
        out = {}
        for s in SIGNS:
            b = self.bases[s]
            out[s] = None if b is None else Matrix.from_ztensor(b).inverse().to_ztensor()
        return out

    def inverse_basis(self, sigma: str) -> ZTensor:
        b = self.inverse_bases[sigma]
        return ZTensor.identity(self.system.dim(sigma)) if b is None else b

    @cached_property
    def tensors(self) -> dict:
        """Structure tensors of the system in the homogeneous bases."""
        out = {}
        for s in SIGNS:
            if self.bases[s] is None and self.bases[opposite(s)] is None:
                out[s] = self.system.tensors[s]
            else:
                o = opposite(s)
                out[s] = jd.transport(self.system.tensors[s], self.basis_matrix(s), self.basis_matrix(o),
                                      self.basis_matrix(s), self.inverse_basis(s))
        return out

    @cached_property
    def trace(self) -> ZTensor:
        t = self.system.trace
        if self.bases["+"] is None and self.bases["-"] is None:
            return t
        return self.basis_matrix("+").T.einsum("ax,xb->ab", t).einsum("ax,xb->ab", self.basis_matrix("-"))

    @cached_property
    def algebra_tensor(self) -> ZTensor | None:
        if self.kind != "algebra":
            return None
        m = alb.product_tensor()
        p = self.basis_matrix("+")
        if self.bases["+"] is None:
            return m
        r = p.einsum("xa,xbc->abc", m)
        r = r.einsum("axc,xb->abc", p)
        return r.einsum("abx,cx->abc", self.inverse_basis("+"))

    def with_degrees(self, group: AbelianGroup, degrees: dict, name: str | None = None,
                     kind: str | None = None, system: JordanSystem | None = None) -> Grading:
        return Grading(name or self.name, kind or self.kind, system or self.system, group,
                       {s: np.array(degrees[s]) for s in SIGNS}, dict(self.labels), dict(self.bases))

    # serialization

    def to_document(self) -> dict:
        doc = {"name": self.name, "kind": self.kind, "system": self.system.name,
               "group": {"free_rank": self.group.free_rank, "torsion": list(self.group.torsion)},
               "spaces": {}}
        for s in SIGNS:
            entries = []
            vecs = self.basis_vectors(s) if self.bases[s] is not None else None
            for k, lab in enumerate(self.labels[s]):
                g = self.degree(s, k)
                item = {"label": lab, "degree": {"free": list(g.free), "tors": list(g.tors)}}
                if vecs is not None:
                    item["vector"] = [serialize(c) for c in vecs[k]]
                entries.append(item)
            doc["spaces"][s] = entries
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=1)


def grading_from_document(doc: dict) -> Grading:
    group = AbelianGroup(doc["group"]["free_rank"], tuple(doc["group"]["torsion"]))
    system = jd.get_system(doc["system"])
    degrees, labels, bases = {}, {}, {}
    for s in SIGNS:
        entries = doc["spaces"][s]
        degrees[s] = np.array([e["degree"]["free"] + e["degree"]["tors"] for e in entries], dtype=np.int64)
        labels[s] = tuple(e["label"] for e in entries)
        if entries and "vector" in entries[0]:
            cols = [[deserialize(c) for c in e["vector"]] for e in entries]
            bases[s] = ZTensor.from_scalars(np.array(cols, dtype=object)).T
        else:
            bases[s] = None
    return Grading(doc["name"], doc["kind"], system, group, degrees, labels, bases)


# catalog construction helpers

def _cd_deg() -> np.ndarray:
    _, deg = oc.cayley_dickson_basis()
    return np.array([deg[k] for k in range(8)], dtype=np.int64)


def _cd_cols() -> np.ndarray:
    """8x8 object array; column k is the Cayley-Dickson vector x_k."""
    return np.array(oc.cd_matrix(), dtype=object)


def _zeros_obj(n: int, m: int) -> np.ndarray:
    a = np.empty((n, m), dtype=object)
    a[:] = ZERO
    return a


def _block_diag(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    m = sum(b.shape[1] for b in blocks)
    out = _zeros_obj(n, m)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def _eye_obj(n: int) -> np.ndarray:
    out = _zeros_obj(n, n)
    for k in range(n):
        out[k, k] = ONE
    return out


def _cartan_dual(n_blocks: int, prefix: int = 0) -> list[int]:
    """Index of the trace-dual Cartan basis vector: e1 <-> e2, u_j <-> v_j."""
    dual8 = [1, 0, 5, 6, 7, 2, 3, 4]
    out = list(range(prefix))
    for b in range(n_blocks):
        out += [prefix + 8 * b + d for d in dual8]
    return out


def _cd_pair_labels() -> tuple[str, ...]:
    return tuple(f"(x{k},0)" for k in range(8)) + tuple(f"(0,x{k})" for k in range(8))


def _albert_cd_labels() -> tuple[str, ...]:
    return ("E1", "E2", "E3") + tuple(f"i{j}(x{k})" for j in (1, 2, 3) for k in range(8))


def _cd_bicayley_pair() -> Grading:
    dc = _cd_deg()
    plus = np.array([[1, 0, *dc[k]] for k in range(8)] + [[0, 1, *dc[k]] for k in range(8)])
    minus = plus.copy()
    minus[:, :2] *= -1
    basis = ZTensor.from_scalars(_block_diag(_cd_cols(), _cd_cols()))
    labels = _cd_pair_labels()
    return Grading("cd_bicayley_pair", "pair", jd.bicayley_pair(), AbelianGroup(2, (2, 2, 2)),
                   {"+": plus, "-": minus}, {"+": labels, "-": labels}, {"+": basis, "-": basis})


_Z6 = {  # columns C1+ and C2+ of the Cartan table for the bi-Cayley pair
    "e1": ((0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)),
    "e2": ((0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)),
    "u1": ((1, 0, 0, 1, 0, 0), (1, 0, 0, 0, 1, 0)),
    "u2": ((0, 1, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0)),
    "u3": ((-1, -1, 1, 0, -1, 1), (-1, -1, 1, -1, 0, 1)),
    "v1": ((-1, 0, 1, 0, 0, 0), (-1, 0, 0, 0, 0, 1)),
    "v2": ((0, -1, 1, 0, 0, 0), (0, -1, 0, 0, 0, 1)),
    "v3": ((1, 1, 0, 1, 1, -1), (1, 1, -1, 1, 1, 0)),
}


def _cartan_bicayley_pair() -> Grading:
    plus = np.array([_Z6[z][0] for z in oc.LABELS] + [_Z6[z][1] for z in oc.LABELS])
    dual = _cartan_dual(2)
    minus = -plus[dual]
    sys = jd.bicayley_pair()
    return Grading("cartan_bicayley_pair", "pair", sys, AbelianGroup(6), {"+": plus, "-": minus},
                   {"+": sys.labels[0], "-": sys.labels[1]})


def _albert_cd_basis() -> ZTensor:
    return ZTensor.from_scalars(_block_diag(_eye_obj(3), _cd_cols(), _cd_cols(), _cd_cols()))


def _cd_albert_pair() -> Grading:
    dc = _cd_deg()
    rows = [[-1, 1, 1, 0, 0, 0], [1, -1, 1, 0, 0, 0], [1, 1, -1, 0, 0, 0]]
    for j in range(3):
        for k in range(8):
            e = [0, 0, 0]
            e[j] = 1
            rows.append(e + list(dc[k]))
    plus = np.array(rows)
    minus = plus.copy()
    minus[:, :3] *= -1
    b = _albert_cd_basis()
    labels = _albert_cd_labels()
    return Grading("cd_albert_pair", "pair", jd.albert_pair(), AbelianGroup(3, (2, 2, 2)),
                   {"+": plus, "-": minus}, {"+": labels, "-": labels}, {"+": b, "-": b})


_Z7 = {  # columns iota_1, iota_2, iota_3 of the Cartan table for the Albert pair
    "e1": ((1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 0, 1)),
    "e2": ((0, 1, 0, 0, 0, 0, 0), (-1, -2, 1, 1, 1, 1, 0), (2, 1, -1, -1, -1, 0, 1)),
    "u1": ((0, 0, 1, 0, 0, 0, 0), (0, -1, 1, 0, 0, 1, 0), (1, 1, 0, -1, -1, 0, 1)),
    "u2": ((0, 0, 0, 1, 0, 0, 0), (0, -1, 0, 1, 0, 1, 0), (1, 1, -1, 0, -1, 0, 1)),
    "u3": ((0, 0, 0, 0, 1, 0, 0), (0, -1, 0, 0, 1, 1, 0), (1, 1, -1, -1, 0, 0, 1)),
    "v1": ((1, 1, -1, 0, 0, 0, 0), (-1, -1, 0, 1, 1, 1, 0), (1, 0, -1, 0, 0, 0, 1)),
    "v2": ((1, 1, 0, -1, 0, 0, 0), (-1, -1, 1, 0, 1, 1, 0), (1, 0, 0, -1, 0, 0, 1)),
    "v3": ((1, 1, 0, 0, -1, 0, 0), (-1, -1, 1, 1, 0, 1, 0), (1, 0, 0, 0, -1, 0, 1)),
}
_Z7_E = ((0, -1, 0, 0, 0, 1, 1), (2, 2, -1, -1, -1, -1, 1), (-1, -1, 1, 1, 1, 1, -1))


def _cartan_albert_pair() -> Grading:
    plus = np.array(list(_Z7_E) + [_Z7[z][j] for j in range(3) for z in oc.LABELS])
    minus = -plus[_cartan_dual(3, prefix=3)]
    sys = jd.albert_pair()
    return Grading("cartan_albert_pair", "pair", sys, AbelianGroup(7), {"+": plus, "-": minus},
                   {"+": sys.labels[0], "-": sys.labels[1]})


def _cd_bicayley_triple() -> Grading:
    dc = _cd_deg()
    deg = np.array([[1, 0, *dc[k]] for k in range(8)] + [[0, 1, *dc[k]] for k in range(8)])
    basis = ZTensor.from_scalars(_block_diag(_cd_cols(), _cd_cols()))
    labels = _cd_pair_labels()
    return Grading("cd_bicayley_triple", "triple", jd.bicayley_triple(), AbelianGroup(0, (2,) * 5),
                   {"+": deg, "-": deg}, {"+": labels, "-": labels}, {"+": basis, "-": basis})


def _isotropic_cd_bicayley_triple() -> Grading:
    xs, deg_c = oc.cayley_dickson_basis()
    cols, degs, labels = [], [], []
    for sign, s in ((1, I), (-1, -I)):
        for k, x in enumerate(xs):
            cols.append(list(x.coords) + list(x.conj().scale(s).coords))
            degs.append([sign, *deg_c[k]])
            labels.append(f"(x{k},{'+' if sign > 0 else '-'}i*conj(x{k}))")
    basis = ZTensor.from_scalars(np.array(cols, dtype=object)).T
    labels = tuple(labels)
    return Grading("isotropic_cd_bicayley_triple", "triple", jd.bicayley_triple(), AbelianGroup(1, (2, 2, 2)),
                   {"+": np.array(degs), "-": np.array(degs)}, {"+": labels, "-": labels},
                   {"+": basis, "-": basis})


_Z4_TRIPLE = {
    "e1": ((0, 0, 1, 0), (0, 0, 0, -1)),
    "e2": ((0, 0, -1, 0), (0, 0, 0, 1)),
    "u1": ((1, 0, -1, 0), (1, 0, 0, -1)),
    "u2": ((0, 1, -1, 0), (0, 1, 0, -1)),
    "u3": ((-1, -1, 1, 2), (-1, -1, 2, 1)),
    "v1": ((-1, 0, 1, 0), (-1, 0, 0, 1)),
    "v2": ((0, -1, 1, 0), (0, -1, 0, 1)),
    "v3": ((1, 1, -1, -2), (1, 1, -2, -1)),
}


def _cartan_bicayley_triple() -> Grading:
    deg = np.array([_Z4_TRIPLE[z][0] for z in oc.LABELS] + [_Z4_TRIPLE[z][1] for z in oc.LABELS])
    sys = jd.bicayley_triple()
    return Grading("cartan_bicayley_triple", "triple", sys, AbelianGroup(4), {"+": deg, "-": deg},
                   {"+": sys.labels[0], "-": sys.labels[1]})


# gradings on the Albert algebra

_A = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [-1, -1, 0, 0]])
_G = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, -1, -1]])


def albert_cartan_degrees() -> np.ndarray:
    """Z^4 degrees of the Cartan basis E1, E2, E3, iota_i(z)."""
    rows = [np.zeros(4, dtype=np.int64)] * 3
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        d = {"e1": _A[i], "e2": -_A[i],
             f"u{i + 1}": _G[i], f"v{i + 1}": -_G[i],
             f"u{j + 1}": _A[k] + _G[j], f"v{j + 1}": -(_A[k] + _G[j]),
             f"u{k + 1}": -_A[j] + _G[k], f"v{k + 1}": -(-_A[j] + _G[k])}
        rows += [d[z] for z in oc.LABELS]
    return np.array(rows, dtype=np.int64)


def _albert_algebra(name: str, group: AbelianGroup, deg: np.ndarray, labels, basis) -> Grading:
    labels = tuple(labels)
    return Grading(name, "algebra", jd.albert_triple(), group, {"+": deg, "-": deg},
                   {"+": labels, "-": labels}, {"+": basis, "-": basis})


def _cartan_albert() -> Grading:
    return _albert_algebra("cartan_albert", AbelianGroup(4), albert_cartan_degrees(), alb.LABELS, None)


def _z25_albert() -> Grading:
    dc = _cd_deg()
    rows = [[0] * 5] * 3
    for pre in ((1, 0), (0, 1), (1, 1)):
        rows += [[*pre, *dc[k]] for k in range(8)]
    return _albert_algebra("z25_albert", AbelianGroup(0, (2,) * 5), np.array(rows), _albert_cd_labels(),
                           _albert_cd_basis())


def zz23_albert_elements() -> dict[str, alb.AlbertElem]:
    """E, E~, S+, S-, nu(x_k) (k >= 1), nu+(x_k), nu-(x_k) built from a Cayley-Dickson basis."""
    xs, _ = oc.cayley_dickson_basis()
    one = oc.Octonion.one()
    E = alb.AlbertElem.E(1)
    out = {"E": E, "E~": alb.AlbertElem.E(2) + alb.AlbertElem.E(3)}
    half_i_one = alb.AlbertElem.iota(1, one).scale(HALF * I)
    out["S+"] = alb.AlbertElem.E(3) - alb.AlbertElem.E(2) + half_i_one
    out["S-"] = alb.AlbertElem.E(3) - alb.AlbertElem.E(2) - half_i_one
    for k in range(1, 8):
        out[f"nu(x{k})"] = alb.AlbertElem.iota(1, xs[k]).scale(I)
    for sign, s in (("+", I), ("-", -I)):
        for k in range(8):
            out[f"nu{sign}(x{k})"] = alb.AlbertElem.iota(2, xs[k]) + alb.AlbertElem.iota(3, xs[k].conj()).scale(s)
    return out


def _zz23_albert() -> Grading:
    _, deg_c = oc.cayley_dickson_basis()
    elems = zz23_albert_elements()
    degs = []
    for lab in elems:
        if lab in ("E", "E~"):
            degs.append([0, 0, 0, 0])
        elif lab in ("S+", "S-"):
            degs.append([2 if lab == "S+" else -2, 0, 0, 0])
        elif lab.startswith("nu("):
            degs.append([0, *deg_c[int(lab[4])]])
        else:
            degs.append([1 if lab[2] == "+" else -1, *deg_c[int(lab[5])]])
    cols = [list(e.vector()) for e in elems.values()]
    basis = ZTensor.from_scalars(np.array(cols, dtype=object)).T
    return _albert_algebra("zz23_albert", AbelianGroup(1, (2, 2, 2)), np.array(degs), elems.keys(), basis)


def z33_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three commuting order-three operators defining the Z3^3 grading.

    Returned as (exponents of omega on the Cartan basis for the first two,
    which are diagonal, and the 27x27 integer matrix of the third).
    """
    d = albert_cartan_degrees()
    psi1 = (d[:, 0] + d[:, 1] + 2 * d[:, 2] + 2 * d[:, 3]) % 3
    psi2 = (d[:, 2] + d[:, 3]) % 3
    psi3 = np.zeros((27, 27), dtype=np.int64)
    for i in range(3):
        psi3[(i + 1) % 3, i] = 1
        for z in range(8):
            tz = int(np.nonzero(oc.TAU[:, z])[0][0])
            psi3[alb.iota_index((i + 1) % 3 + 1, tz), alb.iota_index(i + 1, z)] = 1
    return psi1, psi2, psi3


def z33_generators() -> tuple[alb.AlbertElem, alb.AlbertElem, alb.AlbertElem]:
    """X1 = sum iota_i(tau^i e1), X2 = sum iota_i(tau^i u1), X3 = sum omega^-i E_i."""
    e1, u1 = oc.basis("e1"), oc.basis("u1")

    def tau_pow(x, k):
        for _ in range(k % 3):
            x = oc.tau3(x)
        return x

    x1 = alb.AlbertElem.zero()
    x2 = alb.AlbertElem.zero()
    x3 = alb.AlbertElem.zero()
    for i in (1, 2, 3):
        x1 = x1 + alb.AlbertElem.iota(i, tau_pow(e1, i))
        x2 = x2 + alb.AlbertElem.iota(i, tau_pow(u1, i))
        x3 = x3 + alb.AlbertElem.E(i).scale(OMEGA ** (-i))
    return x1, x2, x3


def _z33_albert() -> Grading:
    psi1, psi2, psi3 = z33_operators()
    cols, degs = [], []
    omega_pows = [OMEGA ** k for k in range(3)]
    for k1 in range(3):
        for k2 in range(3):
            idx = [j for j in range(27) if psi1[j] == k1 and psi2[j] == k2]
            if not idx:
                continue
            sub = psi3[np.ix_(idx, idx)]
            others = [j for j in range(27) if j not in idx]
            if psi3[np.ix_(others, idx)].any():
                raise jd.InternalConsistencyError("grading operators do not commute")
            for k3 in range(3):
                m = Matrix.from_rows([[Scalar.of(int(sub[r, c])) - (omega_pows[k3] if r == c else ZERO)
                                       for c in range(len(idx))] for r in range(len(idx))])
                for v in kernel(m):
                    lead = next(c for c in v if c)
                    v = [c / lead for c in v]
                    full = [ZERO] * 27
                    for j, c in zip(idx, v):
                        full[j] = c
                    cols.append(full)
                    degs.append([k1, k2, k3])
    if len(cols) != 27:
        raise jd.InternalConsistencyError("eigenspace decomposition does not span the algebra")
    order = sorted(range(27), key=lambda j: (tuple(degs[j]), [not c for c in cols[j]]))
    cols = [cols[j] for j in order]
    degs = [degs[j] for j in order]
    basis = ZTensor.from_scalars(np.array(cols, dtype=object)).T
    labels = [f"X[{a}{b}{c}]" for a, b, c in degs]
    return _albert_algebra("z33_albert", AbelianGroup(0, (3, 3, 3)), np.array(degs), labels, basis)


def _albert_triple_from(alg: Grading, name: str) -> Grading:
    """(deg, 1) in G x Z2 on the Albert triple system."""
    g = alg.group
    deg = np.concatenate([alg.degrees["+"], np.ones((27, 1), dtype=np.int64)], axis=1)
    group = AbelianGroup(g.free_rank, g.torsion + (2,))
    return Grading(name, "triple", jd.albert_triple(), group, {"+": deg, "-": deg},
                   dict(alg.labels), dict(alg.bases))


def _z3_albert_pair() -> Grading:
    base = _z33_albert()
    group = AbelianGroup(1, (3, 3, 3))
    plus = np.concatenate([np.ones((27, 1), dtype=np.int64), base.degrees["+"]], axis=1)
    minus = np.concatenate([-np.ones((27, 1), dtype=np.int64), base.degrees["+"]], axis=1)
    return Grading("z3_albert_pair", "pair", jd.albert_pair(), group, {"+": plus, "-": minus},
                   dict(base.labels), dict(base.bases))


_BUILDERS = {
    "cd_bicayley_pair": _cd_bicayley_pair,
    "cartan_bicayley_pair": _cartan_bicayley_pair,
    "cd_albert_pair": _cd_albert_pair,
    "z3_albert_pair": _z3_albert_pair,
    "cartan_albert_pair": _cartan_albert_pair,
    "cd_bicayley_triple": _cd_bicayley_triple,
    "isotropic_cd_bicayley_triple": _isotropic_cd_bicayley_triple,
    "cartan_bicayley_triple": _cartan_bicayley_triple,
    "cartan_albert": _cartan_albert,
    "z25_albert": _z25_albert,
    "zz23_albert": _zz23_albert,
    "z33_albert": _z33_albert,
    "cartan_albert_triple": lambda: _albert_triple_from(_cartan_albert(), "cartan_albert_triple"),
    "z25_albert_triple": lambda: _albert_triple_from(_z25_albert(), "z25_albert_triple"),
    "zz23_albert_triple": lambda: _albert_triple_from(_zz23_albert(), "zz23_albert_triple"),
    "z33_albert_triple": lambda: _albert_triple_from(_z33_albert(), "z33_albert_triple"),
}

CATALOG = tuple(_BUILDERS)
PAIR_GRADINGS = CATALOG[:5]
BICAYLEY_TRIPLE_GRADINGS = CATALOG[5:8]
ALBERT_ALGEBRA_GRADINGS = CATALOG[8:12]
ALBERT_TRIPLE_GRADINGS = CATALOG[12:]
FINE_PAIR_TRIPLE_GRADINGS = PAIR_GRADINGS + BICAYLEY_TRIPLE_GRADINGS

EXPECTED_GROUPS = {
    "cd_bicayley_pair": AbelianGroup(2, (2, 2, 2)),
    "cartan_bicayley_pair": AbelianGroup(6),
    "cd_albert_pair": AbelianGroup(3, (2, 2, 2)),
    "z3_albert_pair": AbelianGroup(1, (3, 3, 3)),
    "cartan_albert_pair": AbelianGroup(7),
    "cd_bicayley_triple": AbelianGroup(0, (2,) * 5),
    "isotropic_cd_bicayley_triple": AbelianGroup(1, (2, 2, 2)),
    "cartan_bicayley_triple": AbelianGroup(4),
    "cartan_albert": AbelianGroup(4),
    "z25_albert": AbelianGroup(0, (2,) * 5),
    "zz23_albert": AbelianGroup(1, (2, 2, 2)),
    "z33_albert": AbelianGroup(0, (3, 3, 3)),
    "cartan_albert_triple": AbelianGroup(4, (2,)),
    "z25_albert_triple": AbelianGroup(0, (2,) * 6),
    "zz23_albert_triple": AbelianGroup(1, (2,) * 4),
    "z33_albert_triple": AbelianGroup(0, (3, 3, 3, 2)),
}

_CACHE: dict[str, Grading] = {}


def catalog(name: str) -> Grading:
    """The named catalog grading (cached)."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown grading {name!r}; known: {', '.join(CATALOG)}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


# verification

@dataclass
class GradingReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _degree_violations(deg_out: np.ndarray, expected: np.ndarray, group: AbelianGroup) -> np.ndarray:
    diff = group.reduce(deg_out - expected)
    return np.nonzero(diff.any(axis=1))[0]


def verify_grading(gr: Grading, limit: int = 10) -> GradingReport:
    """Every nonzero {a, b, c} coefficient at d satisfies deg d = deg a + deg b + deg c.

    Algebra gradings also check deg(ab) = deg a + deg b for the Jordan product.
    """
    rep = GradingReport(gr.name)
    for s in SIGNS:
        o = opposite(s)
        mask = gr.tensors[s].nonzero_mask()
        idx = np.argwhere(mask)
        rep.checked += int(np.prod(mask.shape[:3]))
        ds, do = gr.degrees[s], gr.degrees[o]
        lhs = ds[idx[:, 0]] + do[idx[:, 1]] + ds[idx[:, 2]]
        bad = _degree_violations(lhs, ds[idx[:, 3]], gr.group)
        for k in bad[:limit]:
            a, b, c, d = (int(v) for v in idx[k])
            rep.violations.append(("triple", s, gr.labels[s][a], gr.labels[o][b], gr.labels[s][c],
                                   gr.labels[s][d]))
        if gr.kind != "pair":
            break
    if gr.kind == "algebra":
        m = gr.algebra_tensor
        idx = np.argwhere(m.nonzero_mask())
        d = gr.degrees["+"]
        bad = _degree_violations(d[idx[:, 0]] + d[idx[:, 1]], d[idx[:, 2]], gr.group)
        rep.checked += 27 * 27
        for k in bad[:limit]:
            a, b, c = (int(v) for v in idx[k])
            rep.violations.append(("product", gr.labels["+"][a], gr.labels["+"][b], gr.labels["+"][c]))
    return rep


def components(gr: Grading) -> dict:
    """Map (sign, degree) for pairs, or degree otherwise, to the list of basis indices."""
    out: dict = {}
    for s in (SIGNS if gr.kind == "pair" else ("+",)):
        for k, row in enumerate(gr.degrees[s]):
            key = (s, tuple(int(v) for v in row)) if gr.kind == "pair" else tuple(int(v) for v in row)
            out.setdefault(key, []).append(k)
    return out


def grading_type(gr: Grading) -> tuple[int, ...]:
    """(n1, n2, ...): n_i is the number of homogeneous components of dimension i."""
    dims = [len(v) for v in components(gr).values()]
    return tuple(sum(1 for d in dims if d == i) for i in range(1, max(dims) + 1))


def shift(gr: Grading, g: Sequence[int]) -> Grading:
    g = np.asarray(g, dtype=np.int64)
    if gr.kind == "pair":
        degrees = {"+": gr.degrees["+"] + g, "-": gr.degrees["-"] - g}
    else:
        if gr.group.reduce(2 * g).any():
            raise ValueError("a triple system can only be shifted by an element of order at most 2")
        degrees = {"+": gr.degrees["+"] + g, "-": gr.degrees["-"] + g}
    return gr.with_degrees(gr.group, degrees, name=f"{gr.name}[shift]")


def embed(gr: Grading, group: AbelianGroup, matrix: Sequence[Sequence[int]]) -> Grading:
    """Push degrees forward along the homomorphism given by an integer matrix (row vectors)."""
    m = np.asarray(matrix, dtype=np.int64)
    return gr.with_degrees(group, {s: gr.degrees[s] @ m for s in SIGNS}, name=f"{gr.name}[embedded]")


def as_pair(gr: Grading) -> Grading:
    """The grading (Gamma, Gamma) on the associated Jordan pair."""
    sysname = {"albert": jd.albert_pair, "bicayley": jd.bicayley_pair}[gr.system.family]
    return gr.with_degrees(gr.group, gr.degrees, name=f"{gr.name}[pair]", kind="pair", system=sysname())


def support_checks(gr: Grading) -> dict:
    """(a) disjoint supports, (b) 1-dimensional components, (c) homogeneous trace."""
    out = {}
    if gr.kind == "pair":
        sp = {tuple(r) for r in gr.degrees["+"].tolist()}
        sm = {tuple(r) for r in gr.degrees["-"].tolist()}
        out["disjoint_supports"] = not (sp & sm)
    out["one_dimensional"] = all(len(v) == 1 for v in components(gr).values())
    idx = np.argwhere(gr.trace.nonzero_mask())
    tot = gr.degrees["+"][idx[:, 0]] + gr.degrees["-"][idx[:, 1]]
    out["trace_homogeneous"] = not gr.group.reduce(tot).any()
    return out


# universal groups

@dataclass
class UniversalGroup:
    group: AbelianGroup
    keys: list
    presentation: Presentation
    relations: int

    def coordinates(self, key) -> tuple[int, ...]:
        """Class of a support generator, in invariant-factor coordinates (torsion, then free)."""
        vec = [0] * len(self.keys)
        vec[self.keys.index(key)] = 1
        return self.presentation.coordinates(vec)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self.presentation.torsion) + (0,) * self.presentation.free_rank

    def reduce(self, vec) -> tuple[int, ...]:
        return tuple(int(v) % m if m else int(v) for v, m in zip(vec, self.moduli))

    def combine(self, *terms) -> tuple[int, ...]:
        """Sum of ``(coefficient, key)`` terms."""
        total = [0] * len(self.moduli)
        for c, key in terms:
            total = [t + c * x for t, x in zip(total, self.coordinates(key))]
        return self.reduce(total)


def _generator_keys(gr: Grading) -> tuple[list, dict]:
    keys: list = []
    index: dict = {}
    gens = {}
    for s in SIGNS:
        col = []
        for row in gr.degrees[s]:
            key = (s if gr.kind == "pair" else "", tuple(int(v) for v in row))
            if key not in index:
                index[key] = len(keys)
                keys.append(key)
            col.append(index[key])
        gens[s] = np.array(col, dtype=np.int64)
    return keys, gens


def universal_group(gr: Grading, check: bool = True) -> UniversalGroup:
    """Universal group: generators are the support, one relation per nonzero basis-level product."""
    if check and not verify_grading(gr).ok:
        raise ValueError(f"{gr.name} is not a valid grading")
    keys, gens = _generator_keys(gr)
    n = len(keys)
    rows = []
    if gr.kind == "algebra":
        idx = np.argwhere(gr.algebra_tensor.nonzero_mask())
        g = gens["+"]
        r = np.zeros((len(idx), n), dtype=np.int64)
        np.add.at(r, (np.arange(len(idx)), g[idx[:, 0]]), 1)
        np.add.at(r, (np.arange(len(idx)), g[idx[:, 1]]), 1)
        np.add.at(r, (np.arange(len(idx)), g[idx[:, 2]]), -1)
        rows.append(r)
    else:
        for s in (SIGNS if gr.kind == "pair" else ("+",)):
            o = opposite(s)
            idx = np.argwhere(gr.tensors[s].nonzero_mask())
            r = np.zeros((len(idx), n), dtype=np.int64)
            ar = np.arange(len(idx))
            np.add.at(r, (ar, gens[s][idx[:, 0]]), 1)
            np.add.at(r, (ar, gens[o][idx[:, 1]]), 1)
            np.add.at(r, (ar, gens[s][idx[:, 2]]), 1)
            np.add.at(r, (ar, gens[s][idx[:, 3]]), -1)
            rows.append(r)
    rel = np.unique(np.concatenate(rows), axis=0)
    rel = rel[rel.any(axis=1)]
    p = presentation(rel.tolist(), n)
    return UniversalGroup(AbelianGroup(p.free_rank, tuple(p.torsion)), keys, p, len(rel))
