from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoqh import linalg

small = st.integers(min_value=-5, max_value=5)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=60, deadline=None)
def test_rank_and_determinant_match_numpy(rows):
    m = linalg.frac_matrix(rows)
    assert linalg.rank(m) == np.linalg.matrix_rank(np.array(rows, dtype=float))
    assert float(linalg.det(m)) == pytest.approx(np.linalg.det(np.array(rows, dtype=float)), abs=1e-6)


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=60, deadline=None)
def test_nullspace_vectors_are_killed(rows):
    m = linalg.frac_matrix(rows)
    basis = linalg.nullspace(m, len(rows))
    assert len(basis) == len(rows) - linalg.rank(m)
    for v in basis:
        assert not any(linalg.matvec(m, v))


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=60, deadline=None)
def test_inverse_roundtrip(rows):
    m = linalg.frac_matrix(rows)
    if linalg.det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m)
        return
    assert linalg.matmul(m, linalg.inverse(m)) == linalg.identity(len(rows))


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=100, deadline=None)
def test_sylvester_and_ldl_agree(rows):
    g = linalg.frac_matrix(rows)
    for m in (linalg.matadd(g, linalg.transpose(g)), linalg.matmul(linalg.transpose(g), g)):
        assert linalg.sylvester_positive_definite(m)[0] == linalg.ldl_positive_definite(m)


def test_positive_definite_witness_minor():
    ok, bad = linalg.sylvester_positive_definite(linalg.frac_matrix([[2, 3], [3, 2]]))
    assert not ok and bad == 2
    assert linalg.sylvester_positive_definite(linalg.frac_matrix([[2, 1], [1, 2]])) == (True, None)


def test_subspace_intersection():
    u = [[Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(1), Fraction(0)]]
    w = [[Fraction(0), Fraction(1), Fraction(1)], [Fraction(0), Fraction(0), Fraction(1)]]
    meet = linalg.subspace_intersection(u, w, 3)
    assert linalg.same_subspace(meet, [[0, 1, 0]])


def test_solve_inconsistent_returns_none():
    assert linalg.solve(linalg.frac_matrix([[1, 1], [1, 1]]), [1, 2]) is None
