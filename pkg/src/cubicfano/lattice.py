"""Integral quadratic forms given by Gram matrices.

All arithmetic is on Python integers (or Fractions for the congruence
diagonalisation), so discriminants like 2^24 * 3^6 come out exact.  A Gram
matrix may be degenerate; invariants are always those of the induced form on
Z^N modulo its saturated radical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import linalg

__all__ = [
    "SNFResult",
    "LatticeInvariants",
    "LatticeError",
    "snf",
    "rank_and_signature",
    "radical_quotient",
    "discriminant",
    "lattice_invariants",
    "adjoin_class",
    "sublattice_index",
    "evaluate_form",
    "half_scale",
    "factor_integer",
    "is_symmetric",
]

Matrix = list[list[int]]


class LatticeError(ValueError):
    pass


@dataclass
class SNFResult:
    factors: list[int]
    rank: int
    U: Matrix
    V: Matrix
    D: Matrix


@dataclass
class LatticeInvariants:
    rank: int
    signature: tuple[int, int, int]
    discriminant: int

    def as_json(self) -> dict:
        return {
            "rank": self.rank,
            "signature": list(self.signature),
            "discriminant": str(self.discriminant),
            "discriminant_factored": {str(p): e for p, e in factor_integer(abs(self.discriminant)).items()},
        }


def is_symmetric(G: Sequence[Sequence[int]]) -> bool:
    return all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(i))


def _ident(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf(M: Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form U M V = diag(d_1, ..., d_r, 0, ...) with d_i | d_(i+1)."""
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = _ident(m), _ident(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        if q:
            A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        if q:
            for row in A:
                row[dst] -= q * row[src]
            for row in V:
                row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // p)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // p)
                    if A[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad[0], -1)
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cands)
            if i != t:
                swap_rows(t, i)
            elif j != t:
                swap_cols(t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = [A[i][i] for i in range(t)]
    return SNFResult(factors, t, U, V, A)


def rank_and_signature(G: Sequence[Sequence[int]]) -> tuple[int, tuple[int, int, int]]:
    """Rank and (positive, negative, zero) counts by symmetric congruence diagonalisation."""
    if not is_symmetric(G):
        raise LatticeError("Gram matrix is not symmetric")
    A = [[Fraction(x) for x in row] for row in G]
    N = len(A)
    diag: list[Fraction] = []
    k = 0
    while k < N:
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, N) if A[k][j] != 0), None)
            if j is None:
                # row k is zero in the remaining block
                diag.append(Fraction(0))
                k += 1
                continue
            if A[j][j] != 0:
                # swap j into position k
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                # add row/col j into k: new diagonal 2*A[k][j] != 0
                A[k] = [a + b for a, b in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        p = A[k][k]
        pr = A[k]
        for i in range(k + 1, N):
            if A[i][k]:
                f = A[i][k] / p
                A[i] = [a - f * b for a, b in zip(A[i], pr)]
        for i in range(k + 1, N):
            A[i][k] = Fraction(0)
            A[k][i] = Fraction(0)
        diag.append(p)
        k += 1
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos + neg, (pos, neg, N - pos - neg)


def radical_quotient(G: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Basis B of Z^N modulo the integer kernel of G, and the induced Gram B G B^T."""
    if not is_symmetric(G):
        raise LatticeError("Gram matrix is not symmetric")
    N = len(G)
    if N == 0:
        return [], []
    res = snf(G)
    # U G V = D: the last N - r columns of V span the (saturated) kernel
    B = [[res.V[i][j] for i in range(N)] for j in range(res.rank)]
    GB = [[sum(G[i][k] * b[k] for k in range(N)) for i in range(N)] for b in B]
    Gq = [[sum(x * y for x, y in zip(B[a], GB[b])) for b in range(len(B))] for a in range(len(B))]
    return B, Gq


def _det_int(M: Matrix) -> int:
    if not M:
        return 1
    return int(linalg.det(M))


def discriminant(G: Sequence[Sequence[int]]) -> int:
    """Signed determinant of the form induced on Z^N / radical."""
    _, Gq = radical_quotient(G)
    return _det_int(Gq)


def lattice_invariants(G: Sequence[Sequence[int]]) -> LatticeInvariants:
    rank, sig = rank_and_signature(G)
    disc = discriminant(G)
    if rank and (disc > 0) != (sig[1] % 2 == 0):
        raise LatticeError("discriminant sign disagrees with the signature")
    return LatticeInvariants(rank, sig, disc)


def adjoin_class(G: Sequence[Sequence[int]], v: Sequence[int], w: int) -> Matrix:
    """Gram matrix with one extra generator pairing to the old ones by v, with square w."""
    N = len(G)
    if len(v) != N:
        raise LatticeError(f"pairing vector has length {len(v)}, expected {N}")
    out = [list(row) + [int(v[i])] for i, row in enumerate(G)]
    out.append([int(x) for x in v] + [int(w)])
    return out


def sublattice_index(G_small: Sequence[Sequence[int]], G_big: Sequence[Sequence[int]]) -> int:
    """Index of a finite-index sublattice, from the ratio of discriminants."""
    r_small, _ = rank_and_signature(G_small)
    r_big, _ = rank_and_signature(G_big)
    if r_small != r_big:
        raise LatticeError(f"ranks differ ({r_small} vs {r_big})")
    ds, db = abs(discriminant(G_small)), abs(discriminant(G_big))
    if ds % db:
        raise LatticeError("discriminant ratio is not an integer")
    q = ds // db
    s = isqrt(q)
    if s * s != q:
        raise LatticeError("discriminant ratio is not a perfect square")
    return s


def evaluate_form(G: Sequence[Sequence[int]], c: Sequence[int]) -> int:
    if len(c) != len(G):
        raise LatticeError("vector length does not match the Gram matrix")
    return sum(c[i] * G[i][j] * c[j] for i in range(len(c)) for j in range(len(c)) if c[i] and c[j])


def half_scale(G: Sequence[Sequence[int]]) -> Matrix:
    if any(x % 2 for row in G for x in row):
        raise LatticeError("Gram matrix has odd entries and cannot be halved")
    return [[x // 2 for x in row] for row in G]


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (fine for the smooth numbers seen here)."""
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
