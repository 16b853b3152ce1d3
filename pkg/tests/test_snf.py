"""Smith normal form against sympy as an independent oracle."""

import random

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from vsgroups.snf import cokernel_invariants, determinant, is_unimodular, matmul, parse_matrix, smith_normal_form

matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


def sympy_diagonal(A):
    D = sympy_snf(Matrix(A), domain=ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


@given(matrices)
def test_transform_identity(A):
    r = smith_normal_form(A)
    assert matmul(matmul(r.U, A), r.V) == r.D
    assert is_unimodular(r.U) and is_unimodular(r.V)


@given(matrices)
def test_divisibility_chain(A):
    d = smith_normal_form(A).nonzero
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))


@given(matrices)
def test_matches_sympy(A):
    assert sorted(smith_normal_form(A).nonzero) == sympy_diagonal(A)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_matches_sympy(A):
    assert determinant(A) == Matrix(A).det()


def test_known_cokernels():
    assert cokernel_invariants([[2, 0], [0, 3]], 2) == (0, [6])
    assert cokernel_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3) == (0, [2, 6, 12])
    assert cokernel_invariants([], 3) == (3, [])
    assert parse_matrix("1 2\n3 4\n") == [[1, 2], [3, 4]]
