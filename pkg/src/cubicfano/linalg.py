"""Exact dense linear algebra over any field whose elements support + - * / ==.

Matrices are lists of rows.  Nothing here rounds; entries are Fractions or
CycloElems (ints are promoted to Fractions on entry).
"""

from __future__ import annotations

from fractions import Fraction


def _promote(x):
    return Fraction(x) if isinstance(x, int) else x


def as_field_matrix(rows) -> list[list]:
    return [[_promote(x) for x in row] for row in rows]


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A, B) -> list[list]:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        if len(row) != inner:
            raise ValueError("dimension mismatch in matrix product")
        acc = [0] * cols
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append([_promote(x) for x in acc])
    return out


def matvec(A, v) -> list:
    out = []
    for row in A:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(_promote(acc))
    return out


def transpose(A) -> list[list]:
    return [list(col) for col in zip(*A)]


def trace(A):
    acc = 0
    for i, row in enumerate(A):
        acc = acc + row[i]
    return _promote(acc)


def rref(rows) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    M = [list(r) for r in as_field_matrix(rows)]
    if not M:
        return M, []
    nrows, ncols = len(M), len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv if x else x for x in M[r]]
        pivot_row = M[r]
        nz = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                row = M[i]
                for j in nz:
                    row[j] = row[j] - f * pivot_row[j]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list]:
    """Basis of {v : A v = 0}, one vector per free column, in RREF-canonical form."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, pivots = rref(rows) if rows else ([], [])
    zero, one = Fraction(0), Fraction(1)
    if R:
        sample = R[0][pivots[0]]
        zero, one = sample - sample, sample / sample
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(R, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(A, b) -> list:
    """A particular solution of A x = b; raises ValueError if inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def det(A):
    """Determinant by Gaussian elimination over the field."""
    M = [list(r) for r in as_field_matrix(A)]
    n = len(M)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            result = -result
        piv = M[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / piv
                for j in range(c, n):
                    M[i][j] = M[i][j] - f * M[c][j]
    return result


def inverse(A) -> list[list]:
    n = len(A)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(as_field_matrix(A))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r, prev = 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        prow = M[r]
        for i in range(r + 1, nrows):
            row = M[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - a * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r
