"""Dense exact linear algebra over the rationals.

Matrices are lists of rows.  Entries may be ints or Fractions; results are
Fractions (or ints for the fraction-free routines).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    A = to_fraction_matrix(rows)
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        if piv != 1:
            inv = 1 / piv
            A[r] = [v * inv for v in A[r]]
        row_r = A[r]
        nz = [j for j in range(c, n) if row_r[j]]
        for i in range(m):
            if i != r:
                f = A[i][c]
                if f:
                    row_i = A[i]
                    for j in nz:
                        row_i[j] -= f * row_r[j]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(bareiss_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {v : A v = 0} as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(rows)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def row_space_basis(rows: Sequence[Sequence]) -> Matrix:
    return rref(rows)[0] if rows else []


def bareiss_echelon(rows: Sequence[Sequence]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free (Bareiss) row echelon form of a rational matrix.

    Rows are first cleared of denominators, so all arithmetic is on integers
    and every division is exact.
    """
    A: List[List[int]] = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // _gcd(den, v.denominator)
        A.append([int(v * den) for v in fr])
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots: List[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        row_r = A[r]
        for i in range(r + 1, m):
            row_i = A[i]
            a = row_i[c]
            for j in range(c + 1, n):
                row_i[j] = (piv * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        # entries left of c in rows below are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // _gcd(den, v.denominator)
        out.append([int(v * den) for v in fr])
    return out


def bareiss_rref(rows: Sequence[Sequence]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free Gauss-Jordan form.

    Returns integer rows in reduced echelon shape: pivot columns are zero
    outside their own row and every pivot entry equals the same integer.
    Rows whose entry in the pivot column vanishes only change by the scalar
    piv/prev; that factor is kept pending and applied when the row is next
    touched, which keeps sparse inputs cheap while every division stays exact.
    """
    A = _integer_rows(rows)
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    num = [1] * m
    den = [1] * m
    pivots: List[int] = []
    prev = 1
    r = 0

    def settle(i):
        if num[i] != den[i]:
            nu, de = num[i], den[i]
            A[i] = [x * nu // de for x in A[i]]
        num[i] = den[i] = 1

    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        num[r], num[p] = num[p], num[r]
        den[r], den[p] = den[p], den[r]
        settle(r)
        row_r = A[r]
        piv = row_r[c]
        nz = [j for j in range(n) if row_r[j] and j != c]
        for i in range(m):
            if i == r:
                continue
            if A[i][c] == 0:
                g = _gcd(num[i] * piv, den[i] * prev)
                num[i] = num[i] * piv // g
                den[i] = den[i] * prev // g
                continue
            settle(i)
            row_i = A[i]
            a = row_i[c]
            for j in range(n):
                row_i[j] *= piv
            for j in nz:
                row_i[j] -= a * row_r[j]
            row_i[c] = 0
            if prev != 1:
                for j in range(n):
                    row_i[j] //= prev
        prev = piv
        pivots.append(c)
        r += 1
    for i in range(r):
        settle(i)
    return A[:r], pivots


def bareiss_nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[int]]:
    """Integer basis of the kernel, via :func:`bareiss_rref`."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    R, pivots = bareiss_rref(rows)
    pset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [0] * ncols
        if R:
            piv = R[0][pivots[0]]
            v[f] = piv
            for row, pc in zip(R, pivots):
                v[pc] = -row[f]
        else:
            v[f] = 1
        g = 0
        for x in v:
            g = _gcd(g, x)
        out.append([x // g for x in v] if g > 1 else v)
    return out


def bareiss_det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant via fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    fr = [[Fraction(v) for v in row] for row in rows]
    scale = 1
    A = []
    for row in fr:
        den = 1
        for v in row:
            den = den * v.denominator // _gcd(den, v.denominator)
        scale *= den
        A.append([int(v * den) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return Fraction(0)
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1], scale)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def solve(rows: Sequence[Sequence], rhs: Sequence) -> List[Fraction] | None:
    """One solution of A x = b, or None when inconsistent."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [
        [sum((Fraction(A[i][k]) * B[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for i in range(len(A))
    ]


def transpose(A: Sequence[Sequence]) -> Matrix:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
