from __future__ import annotations

import numpy as np
from hypothesis import given, strategies as st

from exjordan.exactfield import I, ONE, Scalar
from exjordan.exactlinalg import (IntMatrix, Matrix, abelian_invariants, kernel, rref, smith_normal_form,
                                  solve, zinverse, zrank)
from exjordan.gradings import catalog, universal_group


def test_rref_examples():
    assert rref(Matrix.identity(3)) == (Matrix.identity(3), 3)
    assert rref(Matrix.zeros(2, 3))[1] == 0
    assert rref(Matrix.from_rows([[1, 1], [1, 1]]))[1] == 1


def test_kernel_examples():
    assert kernel(Matrix.identity(3)) == []
    assert len(kernel(Matrix.zeros(2, 2))) == 2
    (k,) = kernel(Matrix.from_rows([[1, 1]]))
    assert k[0] == -k[1] and k[0]


def test_solve_examples():
    b = (Scalar.of(3), Scalar.of(-1))
    assert solve(Matrix.identity(2), b) == b
    x = solve(Matrix.from_rows([[1, 1]]), [2])
    assert x[0] + x[1] == Scalar.of(2)
    assert solve(Matrix.from_rows([[1], [1]]), [1, 2]) is None


def test_complex_inverse():
    m = Matrix.from_rows([[1, I], [I, 2]])
    assert m @ m.inverse() == Matrix.identity(2)
    assert Matrix.from_ztensor(zinverse(m.to_ztensor())) == m.inverse()
    assert zrank(m.to_ztensor()) == 2
    singular = Matrix.from_rows([[1, I], [I, -1]])
    assert zrank(singular.to_ztensor()) == 1 and singular.rank() == 1


def test_smith_examples():
    s, u, v = smith_normal_form(IntMatrix.identity(3))
    assert s.to_rows() == IntMatrix.identity(3).to_rows()
    s, _, _ = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert s.to_rows() == [[1, 0], [0, 6]]
    s, _, _ = smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]]))
    assert s.to_rows() == [[0, 0], [0, 0]]


def test_abelian_invariants_examples():
    assert abelian_invariants([], 3) == (3, [])
    assert abelian_invariants([[2]], 1) == (0, [2])
    u = universal_group(catalog("cartan_bicayley_pair"))
    assert (u.group.free_rank, u.group.torsion) == (6, ())


int_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(int_matrices)
def test_smith_properties(rows):
    a = IntMatrix.from_rows(rows)
    s, u, v = smith_normal_form(a)
    assert (u @ a @ v).to_rows() == s.to_rows()
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    diag = [s[i, i] for i in range(min(s.rows, s.cols))]
    assert all(s[i, j] == 0 for i in range(s.rows) for j in range(s.cols) if i != j)
    assert all(d >= 0 for d in diag)
    for d, e in zip(diag, diag[1:]):
        assert (e == 0) or (d != 0 and e % d == 0)


@given(int_matrices)
def test_kernel_rank_consistency(rows):
    m = Matrix.from_rows(rows)
    ks = kernel(m)
    assert len(ks) + m.rank() == m.cols
    for k in ks:
        assert not any(m.apply(k))
    assert m.rank() == np.linalg.matrix_rank(np.array(rows, dtype=float))
