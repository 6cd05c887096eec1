"""The split Cayley algebra C in its Cartan basis (e1, e2, u1, u2, u3, v1, v2, v3).

>>> u1, u2, v1 = basis("u1"), basis("u2"), basis("v1")
>>> u1 * u2 == basis("v3")
True
>>> u1 * v1 == -basis("e1")
True
>>> basis("e1").norm(), basis("e1").polar(basis("e2"))
(Scalar(0), Scalar(1))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exactfield import I, ONE, ZERO, Scalar

LABELS = ("e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3")
INDEX = {name: k for k, name in enumerate(LABELS)}
DIM = 8


def _build_table() -> np.ndarray:
    e1, e2, u, v = 0, 1, (2, 3, 4), (5, 6, 7)
    t = np.zeros((DIM, DIM, DIM), dtype=np.int64)

    def put(a, b, c, s=1):
        t[a, b, c] = s

    put(e1, e1, e1)
    put(e2, e2, e2)
    for j in range(3):
        put(e1, u[j], u[j])
        put(u[j], e2, u[j])
        put(e2, v[j], v[j])
        put(v[j], e1, v[j])
        put(u[j], v[j], e1, -1)
        put(v[j], u[j], e2, -1)
    # u_i u_{i+1} = v_{i+2}, v_i v_{i+1} = u_{i+2}, antisymmetric among themselves
    for j in range(3):
        k, l = (j + 1) % 3, (j + 2) % 3
        put(u[j], u[k], v[l])
        put(u[k], u[j], v[l], -1)
        put(v[j], v[k], u[l])
        put(v[k], v[j], u[l], -1)
    return t


MULT = _build_table()
"""``MULT[a, b, c]``: coefficient of basis c in the product of basis a and basis b."""

NORM_GRAM = np.zeros((DIM, DIM), dtype=np.int64)
"""Gram matrix of the polar form n(x, y) = n(x + y) - n(x) - n(y)."""
for _a, _b in ((0, 1), (2, 5), (3, 6), (4, 7)):
    NORM_GRAM[_a, _b] = NORM_GRAM[_b, _a] = 1

UNIT = np.array([1, 1, 0, 0, 0, 0, 0, 0], dtype=np.int64)

CONJ = np.zeros((DIM, DIM), dtype=np.int64)
"""Matrix of the standard involution acting on coordinate columns."""
CONJ[1, 0] = CONJ[0, 1] = 1
for _k in range(2, 8):
    CONJ[_k, _k] = -1

TAU = np.zeros((DIM, DIM), dtype=np.int64)
"""Order-three automorphism fixing e1, e2 and cycling u1->u2->u3, v1->v2->v3."""
TAU[0, 0] = TAU[1, 1] = 1
for _j in range(3):
    TAU[2 + (_j + 1) % 3, 2 + _j] = 1
    TAU[5 + (_j + 1) % 3, 5 + _j] = 1

_NONZERO = [(a, b, c, int(MULT[a, b, c])) for a, b, c in zip(*np.nonzero(MULT))]


@dataclass(frozen=True)
class Octonion:
    """Element of C with exact coordinates in the Cartan basis."""

    coords: tuple

    @staticmethod
    def of(coords: Sequence) -> Octonion:
        if len(coords) != DIM:
            raise ValueError("an octonion has 8 coordinates")
        return Octonion(tuple(Scalar.of(c) for c in coords))

    @staticmethod
    def zero() -> Octonion:
        return Octonion((ZERO,) * DIM)

    @staticmethod
    def one() -> Octonion:
        return Octonion.of(UNIT.tolist())

    def __add__(self, other: Octonion) -> Octonion:
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Octonion) -> Octonion:
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Octonion:
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, s) -> Octonion:
        s = Scalar.of(s)
        return Octonion(tuple(s * a for a in self.coords))

    def __rmul__(self, s) -> Octonion:
        return self.scale(s)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return omul(self, other)
        return self.scale(other)

    def conj(self) -> Octonion:
        return conj(self)

    def norm(self) -> Scalar:
        return norm(self)

    def polar(self, other: Octonion) -> Scalar:
        return polar(self, other)

    def trace(self) -> Scalar:
        return trace(self)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        terms = [f"({c})*{LABELS[k]}" for k, c in enumerate(self.coords) if c]
        return "Octonion(" + (" + ".join(terms) if terms else "0") + ")"


def basis(name: str | int) -> Octonion:
    k = INDEX[name] if isinstance(name, str) else name
    return Octonion(tuple(ONE if j == k else ZERO for j in range(DIM)))


def omul(x: Octonion, y: Octonion) -> Octonion:
    """Bilinear extension of the Cartan multiplication table."""
    out = [ZERO] * DIM
    xs, ys = x.coords, y.coords
    for a, b, c, s in _NONZERO:
        if xs[a] and ys[b]:
            p = xs[a] * ys[b]
            out[c] = out[c] + p if s == 1 else out[c] - p
    return Octonion(tuple(out))


def polar(x: Octonion, y: Octonion) -> Scalar:
    xs, ys = x.coords, y.coords
    return xs[0] * ys[1] + xs[1] * ys[0] + sum(
        (xs[2 + j] * ys[5 + j] + xs[5 + j] * ys[2 + j] for j in range(3)), ZERO)


def norm(x: Octonion) -> Scalar:
    xs = x.coords
    return xs[0] * xs[1] + sum((xs[2 + j] * xs[5 + j] for j in range(3)), ZERO)


def trace(x: Octonion) -> Scalar:
    return x.coords[0] + x.coords[1]


def conj(x: Octonion) -> Octonion:
    xs = x.coords
    return Octonion((xs[1], xs[0]) + tuple(-c for c in xs[2:]))


def forms(x: Octonion, y: Octonion) -> tuple[Scalar, Scalar, Scalar, Octonion]:
    """Return ``(n(x), n(x, y), tr(x), conj(x))``."""
    return norm(x), polar(x, y), trace(x), conj(x)


def tau3(x: Octonion) -> Octonion:
    """Order-three automorphism: e_i fixed, u_j -> u_{j+1}, v_j -> v_{j+1}."""
    xs = x.coords
    return Octonion((xs[0], xs[1], xs[4], xs[2], xs[3], xs[7], xs[5], xs[6]))


def cayley_dickson_basis() -> tuple[list[Octonion], dict[int, tuple[int, int, int]]]:
    """Orthonormal homogeneous basis x0..x7 for the Z2^3 grading.

    Built by doubling from a = i(e1 - e2), b = i(u1 - v1), c = i(u2 - v2):
    x1 = a, x2 = b, x3 = ab, x4 = c, x5 = ac, x6 = bc, x7 = (ab)c, and the
    degree of x_k is the binary expansion of k.

    >>> xs, deg = cayley_dickson_basis()
    >>> xs[1] * xs[1] == -Octonion.one(), deg[5]
    (True, (1, 0, 1))
    """
    one = Octonion.one()
    a = (basis("e1") - basis("e2")).scale(I)
    b = (basis("u1") - basis("v1")).scale(I)
    c = (basis("u2") - basis("v2")).scale(I)
    ab = a * b
    xs = [one, a, b, ab, c, a * c, b * c, ab * c]
    deg = {k: (k & 1, (k >> 1) & 1, (k >> 2) & 1) for k in range(DIM)}
    return xs, deg


def cd_matrix() -> list[list[Scalar]]:
    """Columns are the Cayley-Dickson basis vectors in Cartan coordinates."""
    xs, _ = cayley_dickson_basis()
    return [[xs[j].coords[i] for j in range(DIM)] for i in range(DIM)]


def left_matrix(a: Octonion) -> list[list[Scalar]]:
    """Matrix of y -> a y."""
    return [[omul(a, basis(j)).coords[i] for j in range(DIM)] for i in range(DIM)]


def right_matrix(a: Octonion) -> list[list[Scalar]]:
    """Matrix of y -> y a."""
    return [[omul(basis(j), a).coords[i] for j in range(DIM)] for i in range(DIM)]
