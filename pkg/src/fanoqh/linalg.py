"""
Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Everything here is
dense and meant for the small sizes met in this package (dimension well below
a hundred); the associativity solver has its own sparse eliminator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = list
Matrix = list


def frac_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> Vector:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def matpow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if not a:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def column_space(a: Matrix) -> list[Vector]:
    """Basis of the column span, taken from the pivot columns of ``a``."""
    if not a:
        return []
    _, pivots = rref(a)
    at = transpose(a)
    return [list(at[p]) for p in pivots]


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """One solution of ``a x = b`` with free variables set to zero, or None."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(r, pivots):
        x[p] = row[n]
    return x


def inverse(a: Matrix) -> Matrix:
    """Inverse of a square matrix; raises ZeroDivisionError if singular."""
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in r[:n]]


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return rank([list(v) for v in vectors])


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if not any(v):
        return True
    return span_rank(list(basis) + [v]) == span_rank(basis)


def same_subspace(u: Sequence[Sequence], w: Sequence[Sequence]) -> bool:
    """Double inclusion by rank."""
    ru, rw = span_rank(u), span_rank(w)
    if ru != rw:
        return False
    return span_rank(list(u) + list(w)) == ru


def subspace_intersection(u: Sequence[Sequence], w: Sequence[Sequence], dim: int) -> list[Vector]:
    """Basis of span(u) ∩ span(w) inside Q^dim."""
    if not u or not w:
        return []
    # x·U = y·W  <=>  [U; -W]^T (x, y) = 0
    cols = [list(x) for x in u] + [[-c for c in y] for y in w]
    a = transpose(cols)
    out = []
    for sol in nullspace(a, len(cols)):
        vec = [Fraction(0)] * dim
        for coeff, x in zip(sol[: len(u)], u):
            if coeff:
                vec = [vi + coeff * xi for vi, xi in zip(vec, x)]
        out.append(vec)
    if not out:
        return []
    return [list(row) for row in rref(out)[0] if any(row)]


def det(a: Matrix) -> Fraction:
    m = [list(row) for row in a]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def leading_minors(a: Matrix) -> list[Fraction]:
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def sylvester_positive_definite(a: Matrix) -> tuple[bool, int | None]:
    """Sylvester's criterion; returns (verdict, first failing minor size or None)."""
    for k, m in enumerate(leading_minors(a), start=1):
        if m <= 0:
            return False, k
    return True, None


def ldl_positive_definite(a: Matrix) -> bool:
    """Independent check: symmetric LDL^T without pivoting, all pivots > 0."""
    n = len(a)
    m = [list(row) for row in a]
    for k in range(n):
        d = m[k][k]
        if d <= 0:
            return False
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] / d
                for j in range(k + 1, n):
                    m[i][j] -= f * m[k][j]
    return True


def is_symmetric(a: Matrix) -> bool:
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))
