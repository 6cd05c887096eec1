"""Exact dense linear algebra over Q(zeta_24) and integer normal forms.

Matrices whose entries are all rational are handed to FLINT (``fmpq_mat``);
the general case runs a plain Gaussian elimination on :class:`Scalar` entries
with the first nonzero entry of each column as pivot.  Smith normal form with
transforms is implemented here, since FLINT only returns the diagonal.

>>> M = Matrix.from_rows([[1, 1], [1, 1]])
>>> M.rank()
1
>>> [v for v in kernel(M)]
[(Scalar(-1), Scalar(1))]
>>> abelian_invariants([[2, 0], [0, 3]], 2)
(0, [6])
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint
import numpy as np

from .exactfield import DEGREE, ONE, ZERO, Scalar, zeta_power
from ._ztensor import ZTensor, _fits

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    """Rectangular matrix of :class:`Scalar`, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return Matrix(len(rows), ncols, tuple(Scalar.of(v) for r in rows for v in r))

    @staticmethod
    def zeros(rows: int, cols: int) -> Matrix:
        return Matrix(rows, cols, (ZERO,) * (rows * cols))

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> Matrix:
        return Matrix.from_rows(list(zip(*cols))) if cols else Matrix(0, 0, ())

    @staticmethod
    def from_ztensor(t: ZTensor) -> Matrix:
        if len(t.shape) != 2:
            raise ValueError("expected a 2-dimensional tensor")
        return Matrix(t.shape[0], t.shape[1], tuple(t.to_scalars().reshape(-1)))

    def to_ztensor(self) -> ZTensor:
        return ZTensor.from_scalars(np.array(self.entries, dtype=object).reshape(self.rows, self.cols))

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def is_rational(self) -> bool:
        return all(e.is_rational() for e in self.entries)

    def __add__(self, other: Matrix) -> Matrix:
        _same_shape(self, other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        _same_shape(self, other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s) -> Matrix:
        s = Scalar.of(s)
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Matrix.from_ztensor(self.to_ztensor() @ other.to_ztensor()) if self.rows and other.cols \
            else Matrix.zeros(self.rows, other.cols)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        v = [Scalar.of(x) for x in v]
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, x in zip(self.row(i), v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows and self.cols == other.cols \
            and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def rank(self) -> int:
        return rref(self)[1]

    def det(self) -> Scalar:
        return det(self)

    def inverse(self) -> Matrix:
        return inverse(self)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _same_shape(a: Matrix, b: Matrix) -> None:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch")


# rational fast path

def _to_fmpq(m: Matrix) -> flint.fmpq_mat:
    out = flint.fmpq_mat(m.rows, m.cols)
    for i in range(m.rows):
        for j in range(m.cols):
            e = m[i, j]
            if e:
                out[i, j] = flint.fmpq(e.num[0], e.den)
    return out


def _from_fmpq(f: flint.fmpq_mat) -> Matrix:
    rows, cols = f.nrows(), f.ncols()
    vals = []
    for i in range(rows):
        for j in range(cols):
            q = f[i, j]
            vals.append(Scalar.of(Fraction(int(q.p), int(q.q))))
    return Matrix(rows, cols, tuple(vals))


def _rref_python(m: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank.

    >>> rref(Matrix.identity(3))[1]
    3
    >>> rref(Matrix.zeros(2, 2))[1]
    0
    """
    if m.rows == 0 or m.cols == 0:
        return m, 0
    if m.is_rational():
        r, rank = _to_fmpq(m).rref()
        return _from_fmpq(r), int(rank)
    a, pivots = _rref_python(m)
    return Matrix.from_rows(a), len(pivots)


def pivot_columns(r: Matrix) -> list[int]:
    """Pivot columns of a matrix already in reduced row echelon form."""
    piv = []
    for i in range(r.rows):
        j = next((j for j in range(r.cols) if r[i, j]), None)
        if j is None:
            break
        piv.append(j)
    return piv


def kernel(m: Matrix) -> list[tuple]:
    """Basis of the right null space, one vector per free column.

    >>> len(kernel(Matrix.identity(2))), len(kernel(Matrix.zeros(2, 2)))
    (0, 2)
    """
    r, rank = rref(m)
    piv = pivot_columns(r)
    free = [j for j in range(m.cols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(piv):
            v[p] = -r[i, f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` (free variables set to zero), or None.

    >>> solve(Matrix.from_rows([[1, 1]]), [2])
    (Scalar(2), Scalar(0))
    >>> solve(Matrix.from_rows([[1], [1]]), [1, 2]) is None
    True
    """
    if len(b) != m.rows:
        raise ValueError("dimension mismatch")
    aug = Matrix(m.rows, m.cols + 1,
                 tuple(x for i in range(m.rows) for x in m.row(i) + (Scalar.of(b[i]),)))
    r, _ = rref(aug)
    piv = pivot_columns(r)
    if m.cols in piv:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(piv):
        x[p] = r[i, m.cols]
    return tuple(x)


def det(m: Matrix) -> Scalar:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if m.is_rational():
        d = _to_fmpq(m).det()
        return Scalar.of(Fraction(int(d.p), int(d.q)))
    a = m.to_rows()
    n = m.rows
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        piv = a[c][c]
        result = result * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[c])]
    return result


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    if m.is_rational():
        f = _to_fmpq(m)
        if f.rank() < n:
            raise ZeroDivisionError("matrix is singular")
        return _from_fmpq(f.inv())
    aug = Matrix(n, 2 * n, tuple(x for i in range(n)
                                 for x in m.row(i) + tuple(ONE if j == i else ZERO for j in range(n))))
    r, _ = rref(aug)
    if any(r[i, i] != 1 for i in range(n)) or any(r[i, j] for i in range(n) for j in range(n) if i != j):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, tuple(r[i, n + j] for i in range(n) for j in range(n)))


def column_space_equal(a: Matrix, b: Matrix) -> bool:
    """Exact equality of the column spaces of two matrices with equal row count."""
    if a.rows != b.rows:
        return False
    ra = a.rank()
    rb = b.rank()
    if ra != rb:
        return False
    both = Matrix(a.rows, a.cols + b.cols,
                  tuple(x for i in range(a.rows) for x in a.row(i) + b.row(i)))
    return both.rank() == ra


def rank_rational(rows: Sequence[Sequence[int]] | np.ndarray) -> int:
    """Rank over Q of an integer matrix given as nested lists or an int array."""
    arr = np.asarray(rows)
    if arr.size == 0:
        return 0
    return int(flint.fmpz_mat(arr.astype(object).tolist()).rank())


def _fmpz(arr: np.ndarray) -> flint.fmpz_mat:
    return flint.fmpz_mat(np.asarray(arr).astype(object).tolist())


def int_pivot_columns(arr: np.ndarray) -> list[int]:
    """Pivot columns of an integer matrix: a first-come maximal independent set of columns."""
    arr = np.asarray(arr)
    if arr.size == 0:
        return []
    r, _, rank = _fmpz(arr).rref()
    rows = r.tolist()
    piv = []
    for i in range(int(rank)):
        piv.append(next(j for j, x in enumerate(rows[i]) if x))
    return piv


def int_nullspace(arr: np.ndarray) -> np.ndarray:
    """Integer basis of the right null space, one row per basis vector (object dtype)."""
    arr = np.asarray(arr)
    ns, nullity = _fmpz(arr).nullspace()
    cols = np.array([[int(x) for x in row] for row in ns.tolist()], dtype=object).reshape(arr.shape[1], -1)
    return cols[:, :int(nullity)].T.copy()


@lru_cache(maxsize=None)
def _zeta_blocks() -> tuple[np.ndarray, ...]:
    """M_k: the matrix of multiplication by zeta^k on the power basis."""
    out = []
    for k in range(DEGREE):
        m = np.zeros((DEGREE, DEGREE), dtype=np.int64)
        for l in range(DEGREE):
            m[:, l] = zeta_power(k + l).num
        out.append(m)
    return tuple(out)


def realify(t: ZTensor) -> np.ndarray:
    """Rational 8m x 8n matrix of a matrix over Q(zeta_24), scaled by its denominator.

    Rank over Q(zeta_24) is the rational rank of this matrix divided by 8.
    """
    m, n = t.shape
    blocks = _zeta_blocks()
    obj = any(v.dtype == object for v in t.planes.values())
    out = np.zeros((DEGREE * m, DEGREE * n), dtype=object if obj else np.int64)
    for k, v in t.planes.items():
        out = out + np.kron(v, blocks[k])
    return out


def zrank(t: ZTensor) -> int:
    """Rank over Q(zeta_24) of a 2-dimensional ZTensor."""
    if 0 in t.shape or t.is_zero():
        return 0
    if t.is_rational():
        return rank_rational(t.int_plane(0))
    return rank_rational(realify(t)) // DEGREE


def zpivot_columns(t: ZTensor) -> list[int]:
    """First-come maximal set of columns of a ZTensor independent over Q(zeta_24)."""
    if 0 in t.shape or t.is_zero():
        return []
    if t.is_rational():
        return int_pivot_columns(t.int_plane(0))
    return [p // DEGREE for p in int_pivot_columns(realify(t)) if p % DEGREE == 0]


def zinverse(t: ZTensor) -> ZTensor:
    """Inverse of a square ZTensor, computed through its rational realification."""
    n = t.shape[0]
    if t.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r = realify(t)
    f = flint.fmpq_mat(_fmpz(r))
    if f.rank() < DEGREE * n:
        raise ZeroDivisionError("matrix is singular")
    num, den = f.inv().numer_denom()
    inv = np.array([[int(x) * t.den for x in row] for row in num.tolist()], dtype=object)
    # entry (i, j) of the inverse is block (i, j) applied to 1, i.e. column 8j of that block
    cols = inv[:, ::DEGREE].reshape(n, DEGREE, n)
    planes = {k: _fits(np.ascontiguousarray(cols[:, k, :])) for k in range(DEGREE)}
    return ZTensor((n, n), {k: v for k, v in planes.items() if np.any(v)}, int(den)).normalized()


# integer normal forms

@dataclass(frozen=True)
class IntMatrix:
    """Rectangular integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(map(int, r)) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return IntMatrix(len(rows), ncols, tuple(v for r in rows for v in r))

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        a, b = self.to_rows(), other.to_rows()
        return IntMatrix.from_rows([[sum(a[i][k] * b[k][j] for k in range(self.cols))
                                     for j in range(other.cols)] for i in range(self.rows)], other.cols)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(flint.fmpz_mat(self.to_rows()).det())


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``S = U a V`` diagonal, ``d1 | d2 | ...``, U and V unimodular.

    The pivot at each stage is an entry of least absolute value in the
    remaining block.

    >>> S, U, V = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    >>> S.to_rows()
    [[1, 0], [0, 6]]
    """
    m, n = a.rows, a.cols
    s = a.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        s[dst] = [x + k * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):  # col dst += k * col src
        for row in s:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def neg_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        cands = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
        if not cands:
            break
        _, pi, pj = min(cands)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            p = s[t][t]
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // p))
                    if s[i][t]:
                        done = False
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // p))
                    if s[t][j]:
                        done = False
            if done:
                # divisibility against the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if s[i][j] % p), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
                continue
            cands = [(abs(s[i][t]), i, t) for i in range(t, m) if s[i][t]]
            cands += [(abs(s[t][j]), t, j) for j in range(t, n) if s[t][j]]
            _, pi, pj = min(cands)
            swap_rows(t, pi)
            swap_cols(t, pj)
        if s[t][t] < 0:
            neg_row(t)
        t += 1
    return (IntMatrix.from_rows(s, n), IntMatrix.from_rows(u, m), IntMatrix.from_rows(v, n))


def _hnf_rows(rows: list[list[int]], n: int) -> list[list[int]]:
    """Nonzero rows of the Hermite normal form (same row lattice)."""
    if not rows:
        return []
    h = flint.fmpz_mat(rows).hnf()
    out = []
    for i in range(h.nrows()):
        r = [int(h[i, j]) for j in range(n)]
        if any(r):
            out.append(r)
    return out


@dataclass(frozen=True)
class Presentation:
    """Invariant-factor form of Z^n modulo a relation lattice.

    ``diag`` lists the diagonal of the Smith form padded with zeros to ``n``;
    ``v`` is the column transform, so generator j maps to row j of ``v``
    read modulo ``diag``.
    """

    n: int
    diag: tuple[int, ...]
    v: IntMatrix

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.diag if d == 0)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.diag if d > 1]

    def coordinates(self, x: Sequence[int]) -> tuple[int, ...]:
        """Image of an integer combination of generators, in the order torsion then free."""
        y = [sum(x[j] * self.v[j, i] for j in range(self.n)) for i in range(self.n)]
        tors = [y[i] % d for i, d in enumerate(self.diag) if d > 1]
        free = [y[i] for i, d in enumerate(self.diag) if d == 0]
        return tuple(tors + free)


def presentation(relations: Sequence[Sequence[int]], n: int) -> Presentation:
    rows = sorted({tuple(int(x) for x in r) for r in relations if any(r)})
    h = _hnf_rows([list(r) for r in rows], n)
    if not h:
        return Presentation(n, (0,) * n, IntMatrix.identity(n))
    s, _, v = smith_normal_form(IntMatrix.from_rows(h, n))
    diag = [s[i, i] for i in range(min(s.rows, s.cols))] + [0] * max(0, n - s.rows)
    return Presentation(n, tuple(diag[:n]), v)


def abelian_invariants(relations: Sequence[Sequence[int]] | IntMatrix, n: int | None = None) -> tuple[int, list[int]]:
    """Invariant factors of Z^n modulo the row lattice of ``relations``.

    >>> abelian_invariants([], 3)
    (3, [])
    >>> abelian_invariants([[2]], 1)
    (0, [2])
    """
    if isinstance(relations, IntMatrix):
        n = relations.cols if n is None else n
        relations = relations.to_rows()
    if n is None:
        raise ValueError("number of generators required")
    p = presentation(relations, n)
    return p.free_rank, p.torsion


def canonical_invariants(free_rank: int, torsion: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Normalize a description Z^r x prod Z_m to invariant factors m1 | m2 | ..."""
    t = [int(x) for x in torsion if int(x) != 1]
    if not t:
        return free_rank, ()
    p = presentation([[m if i == j else 0 for j in range(len(t))] for i, m in enumerate(t)], len(t))
    return free_rank, tuple(p.torsion)
