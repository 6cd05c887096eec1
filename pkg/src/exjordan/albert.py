"""The Albert algebra H3(C) with its Jordan product and cubic forms.

Coordinates are taken in the Cartan basis E1, E2, E3, iota_1(z), iota_2(z),
iota_3(z) with z running over the Cartan basis of C, 27 in total.

>>> E1, E2 = AlbertElem.E(1), AlbertElem.E(2)
>>> amul(E1, E1) == E1, amul(E1, E2).is_zero()
(True, True)
>>> cubic_forms(AlbertElem.one())
(Scalar(3), Scalar(3), Scalar(1))
>>> sharp(E1 + E2) == AlbertElem.E(3)
True
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import octonion as oc
from .exactfield import HALF, ONE, ZERO, Scalar
from .octonion import Octonion
from ._ztensor import ZTensor

DIM = 27
LABELS = ("E1", "E2", "E3") + tuple(f"i{k}({z})" for k in (1, 2, 3) for z in oc.LABELS)
INDEX = {name: k for k, name in enumerate(LABELS)}


def iota_index(i: int, z: int | str) -> int:
    """Coordinate index of iota_i(basis z), i in 1..3."""
    z = oc.INDEX[z] if isinstance(z, str) else z
    return 3 + 8 * (i - 1) + z


class InternalConsistencyError(AssertionError):
    """Two independent evaluations of the same quantity disagreed."""


@dataclass(frozen=True)
class AlbertElem:
    """X = sum alpha_i E_i + iota_i(a_i)."""

    alphas: tuple
    parts: tuple

    @staticmethod
    def of(alphas: Sequence, parts: Sequence[Octonion]) -> AlbertElem:
        return AlbertElem(tuple(Scalar.of(a) for a in alphas), tuple(parts))

    @staticmethod
    def zero() -> AlbertElem:
        return AlbertElem((ZERO,) * 3, (Octonion.zero(),) * 3)

    @staticmethod
    def one() -> AlbertElem:
        return AlbertElem((ONE,) * 3, (Octonion.zero(),) * 3)

    @staticmethod
    def E(i: int) -> AlbertElem:
        return AlbertElem(tuple(ONE if k == i - 1 else ZERO for k in range(3)), (Octonion.zero(),) * 3)

    @staticmethod
    def iota(i: int, a: Octonion) -> AlbertElem:
        return AlbertElem((ZERO,) * 3, tuple(a if k == i - 1 else Octonion.zero() for k in range(3)))

    @staticmethod
    def from_vector(v: Sequence) -> AlbertElem:
        v = [Scalar.of(x) for x in v]
        if len(v) != DIM:
            raise ValueError("an Albert element has 27 coordinates")
        return AlbertElem(tuple(v[:3]), tuple(Octonion(tuple(v[3 + 8 * k: 11 + 8 * k])) for k in range(3)))

    @staticmethod
    def basis(k: int | str) -> AlbertElem:
        k = INDEX[k] if isinstance(k, str) else k
        return AlbertElem.from_vector([ONE if j == k else ZERO for j in range(DIM)])

    def vector(self) -> tuple:
        return tuple(self.alphas) + tuple(c for p in self.parts for c in p.coords)

    def __add__(self, other: AlbertElem) -> AlbertElem:
        return AlbertElem(tuple(a + b for a, b in zip(self.alphas, other.alphas)),
                          tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: AlbertElem) -> AlbertElem:
        return self + (-other)

    def __neg__(self) -> AlbertElem:
        return AlbertElem(tuple(-a for a in self.alphas), tuple(-p for p in self.parts))

    def scale(self, s) -> AlbertElem:
        s = Scalar.of(s)
        return AlbertElem(tuple(s * a for a in self.alphas), tuple(p.scale(s) for p in self.parts))

    def __rmul__(self, s) -> AlbertElem:
        return self.scale(s)

    def __mul__(self, other):
        if isinstance(other, AlbertElem):
            return amul(self, other)
        return self.scale(other)

    def is_zero(self) -> bool:
        return not any(self.vector())

    def __repr__(self) -> str:
        terms = [f"({c})*{LABELS[k]}" for k, c in enumerate(self.vector()) if c]
        return "AlbertElem(" + (" + ".join(terms) if terms else "0") + ")"


def amul(x: AlbertElem, y: AlbertElem) -> AlbertElem:
    """Commutative Jordan product from the componentwise rules."""
    al, be = x.alphas, y.alphas
    a, b = x.parts, y.parts
    alphas = [al[i] * be[i] for i in range(3)]
    parts = [Octonion.zero()] * 3
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        # E_{i+1} iota_i = E_{i+2} iota_i = 1/2 iota_i
        parts[i] = parts[i] + b[i].scale(HALF * (al[j] + al[k])) + a[i].scale(HALF * (be[j] + be[k]))
        # iota_i(a) iota_i(b) = 2 n(a, b) (E_{i+1} + E_{i+2})
        c = 2 * oc.polar(a[i], b[i])
        alphas[j] = alphas[j] + c
        alphas[k] = alphas[k] + c
        # iota_i(a) iota_{i+1}(b) = iota_{i+2}(conj(a) conj(b)), both orders
        parts[k] = parts[k] + oc.omul(a[i].conj(), b[j].conj()) + oc.omul(b[i].conj(), a[j].conj())
    return AlbertElem(tuple(alphas), tuple(parts))


def trace(x: AlbertElem) -> Scalar:
    return x.alphas[0] + x.alphas[1] + x.alphas[2]


def cubic_forms(x: AlbertElem) -> tuple[Scalar, Scalar, Scalar]:
    """Return ``(T(x), S(x), N(x))`` from the explicit coordinate formulas."""
    al, a = x.alphas, x.parts
    t = trace(x)
    s = sum((al[(i + 1) % 3] * al[(i + 2) % 3] - 4 * a[i].norm() for i in range(3)), ZERO)
    n = al[0] * al[1] * al[2] + 8 * oc.polar(a[0], oc.omul(a[1].conj(), a[2].conj())) \
        - 4 * sum((al[i] * a[i].norm() for i in range(3)), ZERO)
    return t, s, n


def bilinear_trace(x: AlbertElem, y: AlbertElem) -> Scalar:
    """T(x, y) := T(x y)."""
    return trace(amul(x, y))


def sharp(x: AlbertElem) -> AlbertElem:
    t, s, _ = cubic_forms(x)
    return amul(x, x) - x.scale(t) + AlbertElem.one().scale(s)


def cross(x: AlbertElem, y: AlbertElem) -> AlbertElem:
    return sharp(x + y) - sharp(x) - sharp(y)


def u_op(x: AlbertElem, y: AlbertElem) -> AlbertElem:
    """U_x(y), evaluated as T(x, y) x - x# x y and as 2 L_x^2 y - L_{x^2} y."""
    first = x.scale(bilinear_trace(x, y)) - cross(sharp(x), y)
    second = amul(x, amul(x, y)).scale(2) - amul(amul(x, x), y)
    if first != second:
        raise InternalConsistencyError("U-operator formulas disagree")
    return first


def albert_rank(x: AlbertElem) -> int:
    if x.is_zero():
        return 0
    if sharp(x).is_zero():
        return 1
    if cubic_forms(x)[2]:
        return 3
    return 2


# structure tensors in the Cartan basis

@lru_cache(maxsize=None)
def product_tensor() -> ZTensor:
    """``M[a, b, c]``: coefficient of basis c in the product of basis a and basis b."""
    half = np.zeros((DIM, DIM, DIM), dtype=np.int64)  # twice the product
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        half[i, i, i] = 2
        for z in range(8):
            p = iota_index(i + 1, z)
            for e in (j, k):
                half[e, p, p] = half[p, e, p] = 1
        for z in range(8):
            for w in range(8):
                c = 2 * oc.NORM_GRAM[z, w]
                if c:
                    p, q = iota_index(i + 1, z), iota_index(i + 1, w)
                    half[p, q, j] += 2 * c
                    half[p, q, k] += 2 * c
    conj = oc.CONJ
    prod = np.einsum("za,wb,abc->zwc", conj, conj, oc.MULT)  # conj(z) conj(w)
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        for z in range(8):
            for w in range(8):
                for c in np.nonzero(prod[z, w])[0]:
                    p, q, r = iota_index(i + 1, z), iota_index(j + 1, w), iota_index(k + 1, c)
                    half[p, q, r] += 2 * prod[z, w, c]
                    half[q, p, r] += 2 * prod[z, w, c]
    return ZTensor.from_int(half, den=2)


@lru_cache(maxsize=None)
def triple_tensor() -> ZTensor:
    """``U[a, b, c, d]``: coefficient of basis d in {a, b, c} = U_{a,c}(b) = 2(a(cb) + c(ab) - (ac)b)."""
    m = product_tensor()
    # a(cb): sum_m M[c,b,m] M[a,m,d]
    r = m.tensordot(m, axes=([2], [1]))             # r[p,q,s,d] = s(pq)
    t1 = r.transpose(2, 1, 0, 3)                    # a(cb)
    t2 = r                                          # c(ab)
    t3 = m.tensordot(m, axes=([2], [0]))            # [a,c,b,d] = (ac)b
    t3 = t3.transpose(0, 2, 1, 3)
    return (t1 + t2 - t3).scale(2)


@lru_cache(maxsize=None)
def trace_matrix() -> ZTensor:
    """Gram matrix of T(x, y) = T(xy)."""
    m = product_tensor()
    return m[:, :, 0] + m[:, :, 1] + m[:, :, 2]


def hermitian_matrix(x: AlbertElem) -> list[list]:
    """3x3 hermitian octonion matrix model of x; entries are (scalar or Octonion)."""
    one = Octonion.one()
    a1, a2, a3 = (p.scale(2) for p in x.parts)
    al = x.alphas
    return [[one.scale(al[0]), a3.conj(), a2],
            [a3, one.scale(al[1]), a1.conj()],
            [a2.conj(), a1, one.scale(al[2])]]


def from_hermitian_matrix(m: list[list]) -> AlbertElem:
    alphas = [m[i][i].coords[0] for i in range(3)]
    parts = [m[2][1].scale(HALF), m[0][2].scale(HALF), m[1][0].scale(HALF)]
    return AlbertElem.of(alphas, parts)


def matrix_model_product(x: AlbertElem, y: AlbertElem) -> AlbertElem:
    """Oracle: (X.Y + Y.X)/2 computed with octonion matrix multiplication."""
    X, Y = hermitian_matrix(x), hermitian_matrix(y)

    def mm(A, B):
        return [[sum((A[i][k] * B[k][j] for k in range(3)), Octonion.zero()) for j in range(3)]
                for i in range(3)]

    P, R = mm(X, Y), mm(Y, X)
    S = [[(P[i][j] + R[i][j]).scale(HALF) for j in range(3)] for i in range(3)]
    return from_hermitian_matrix(S)
