from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from acis.linalg import bareiss_det, nullspace, rank, rref, solve
from acis.quadform import (
    NotSymmetricError,
    charpoly,
    congruent,
    signature,
    signature_charpoly_check,
    signature_exact,
)

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def symmetric(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A[i][j] = A[j][i] = draw(entries)
    return A


@st.composite
def square(draw, n):
    return [[draw(st.integers(-3, 3)) for _ in range(n)] for _ in range(n)]


@given(symmetric())
@settings(max_examples=80, deadline=None)
def test_elimination_agrees_with_descartes(A):
    p, m, z = signature_exact(A)
    assert p + m + z == len(A)
    assert p - m == signature_charpoly_check(A)
    assert p + m == rank(A)


@given(symmetric(max_n=4), st.data())
@settings(max_examples=60, deadline=None)
def test_congruence_invariance(A, data):
    S = data.draw(square(len(A)))
    assume(bareiss_det(S) != 0)
    assert signature_exact(congruent(A, S)) == signature_exact(A)


@given(symmetric(max_n=5))
@settings(max_examples=40, deadline=None)
def test_against_floating_eigenvalues(A):
    ev = np.linalg.eigvalsh(np.array([[float(v) for v in row] for row in A]))
    p, m, z = signature_exact(A)
    if all(abs(e) > 1e-9 for e in ev):
        assert (p, m) == (sum(ev > 0), sum(ev < 0))


def test_examples():
    assert signature_exact([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[Fraction(-1, 2)]]) == -1
    assert signature_exact([[0, 0], [0, 0]]) == (0, 0, 2)
    assert signature_exact([]) == (0, 0, 0)
    assert charpoly([[2, 0], [0, 3]]) == [6, -5, 1]
    with pytest.raises(NotSymmetricError):
        signature_exact([[0, 1], [2, 0]])


def test_linear_algebra_helpers():
    A = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    R, piv = rref(A)
    assert piv == [0, 1] and rank(A) == 2
    for v in nullspace(A):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in A)
    assert bareiss_det([[2, 1], [1, 2]]) == 3
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
