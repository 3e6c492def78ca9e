"""Inertia of symmetric rational matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


class NotSymmetricError(ValueError):
    pass


def _check(A: Sequence[Sequence]) -> List[List[Fraction]]:
    M = [[Fraction(v) for v in row] for row in A]
    n = len(M)
    for row in M:
        if len(row) != n:
            raise NotSymmetricError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if M[i][j] != M[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")
    return M


def signature_exact(A: Sequence[Sequence]) -> Tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) by symmetric Gaussian elimination.

    A nonzero diagonal pivot is eliminated from its row and column.  If the
    remaining diagonal vanishes but some a_ij does not, the basis change
    e_i -> e_i + e_j creates the diagonal entry 2 a_ij (the hyperbolic
    block [[0,a],[a,0]] becomes congruent to diag(2a, -a/2)).
    """
    M = _check(A)
    n = len(M)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and M[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row/column operation e_i <- e_i + e_j
            for k in range(n):
                M[i][k] += M[j][k]
            for k in range(n):
                M[k][i] += M[k][j]
            piv = i
        p = M[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        row = M[piv]
        for i in active:
            f = M[i][piv] / p
            if f:
                Mi = M[i]
                for k in active:
                    Mi[k] -= f * row[k]
        for i in active:
            M[i][piv] = M[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg


def signature(A: Sequence[Sequence]) -> int:
    p, m, _ = signature_exact(A)
    return p - m


def charpoly(A: Sequence[Sequence]) -> List[Fraction]:
    """Coefficients c_0..c_n of det(t I - A), by the Faddeev-LeVerrier recursion."""
    M = [[Fraction(v) for v in row] for row in A]
    n = len(M)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk <- A (Mk_prev + c_{n-k+1} I)
        prev = [row[:] for row in Mk]
        for i in range(n):
            prev[i][i] += coeffs[n - k + 1]
        Mk = [[sum(M[i][l] * prev[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(Mk[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def _variations(seq: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in seq if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature_charpoly_check(A: Sequence[Sequence]) -> int:
    """Signature from sign variations of the characteristic polynomial.

    Every root is real, so Descartes' rule counts positive roots exactly;
    negative roots come from p(-t).
    """
    M = _check(A)
    c = charpoly(M)
    z = next((k for k, v in enumerate(c) if v), len(c))
    c = c[z:]
    plus = _variations(c)
    minus = _variations([v if k % 2 == 0 else -v for k, v in enumerate(c)])
    return plus - minus


def congruent(A: Sequence[Sequence], S: Sequence[Sequence]) -> List[List[Fraction]]:
    """S^T A S."""
    n = len(A)
    m = len(S[0]) if S else 0
    AS = [[sum(Fraction(A[i][k]) * S[k][j] for k in range(n)) for j in range(m)] for i in range(n)]
    return [[sum(Fraction(S[k][i]) * AS[k][j] for k in range(n)) for j in range(m)] for i in range(m)]
