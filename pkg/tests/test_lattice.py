import random

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from cubicfano import linalg
from cubicfano.lattice import (
    LatticeError,
    adjoin_class,
    discriminant,
    evaluate_form,
    factor_integer,
    half_scale,
    lattice_invariants,
    radical_quotient,
    rank_and_signature,
    snf,
    sublattice_index,
)


def mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def T(A):
    return [list(r) for r in zip(*A)]


matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@st.composite
def symmetric(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.integers(-4, 4), min_size=n * n, max_size=n * n))
    return [[vals[min(i, j) * n + max(i, j)] for j in range(n)] for i in range(n)]


@st.composite
def unimodular(draw, n):
    """Product of random elementary integer operations and sign flips."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, 3 * n))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i == j:
            U[i] = [-x for x in U[i]]
        else:
            q = draw(st.integers(-2, 2))
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
    return U


@given(matrices)
def test_snf_transform(M):
    res = snf(M)
    assert mul(mul(res.U, M), res.V) == res.D
    assert abs(linalg.det(res.U)) == 1 and abs(linalg.det(res.V)) == 1
    d = res.factors
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    off = [res.D[i][j] for i in range(len(M)) for j in range(len(M[0])) if i != j or i >= res.rank]
    assert not any(off)


@given(matrices)
def test_snf_matches_sympy(M):
    D = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
    theirs = sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)
    assert sorted(snf(M).factors) == theirs


@given(symmetric())
def test_signature_matches_numpy(G):
    rank, (p, n, z) = rank_and_signature(G)
    ev = np.linalg.eigvalsh(np.array(G, dtype=float))
    assert p == int((ev > 1e-9).sum())
    assert n == int((ev < -1e-9).sum())
    assert rank == int(sympy.Matrix(G).rank())


@given(symmetric().flatmap(lambda G: st.tuples(st.just(G), unimodular(len(G)))))
def test_unimodular_invariance(args):
    G, P = args
    H = mul(mul(T(P), G), P)
    assert rank_and_signature(H) == rank_and_signature(G)
    assert discriminant(H) == discriminant(G)


@given(symmetric())
def test_radical_quotient_is_nondegenerate(G):
    B, Gq = radical_quotient(G)
    rank, _ = rank_and_signature(G)
    assert len(B) == rank
    if rank:
        assert linalg.det(Gq) != 0


def test_known_discriminants():
    assert discriminant([[2, 1], [1, 2]]) == 3
    e8_like = [[2, -1], [-1, 2]]
    assert lattice_invariants(e8_like).signature == (2, 0, 0)
    hyperbolic = [[0, 1], [1, 0]]
    inv = lattice_invariants(hyperbolic)
    assert inv.signature == (1, 1, 0) and inv.discriminant == -1


def test_degenerate_discriminant_uses_quotient():
    # all-ones 3x3: rank 1, quotient generated by e1 with square 1
    G = [[1, 1, 1]] * 3
    inv = lattice_invariants(G)
    assert inv.rank == 1 and inv.signature == (1, 0, 2) and inv.discriminant == 1


def test_sublattice_index():
    G = [[2, 0], [0, 2]]
    # adjoining (e1 + e2)/2 with square 1
    big = adjoin_class(G, [1, 1], 1)
    assert sublattice_index(G, big) == 2
    with pytest.raises(LatticeError):
        sublattice_index([[2]], [[1, 0], [0, 1]])
    with pytest.raises(LatticeError):
        sublattice_index([[2]], [[1]])


def test_helpers():
    assert evaluate_form([[-4, 2], [2, -4]], [1, 1]) == -4
    assert half_scale([[2, 4], [4, -2]]) == [[1, 2], [2, -1]]
    with pytest.raises(LatticeError):
        half_scale([[1]])
    with pytest.raises(LatticeError):
        rank_and_signature([[0, 1], [2, 0]])
    assert factor_integer(103749698404) == {2: 2, 11: 10}
    assert factor_integer(2**24 * 3**6) == {2: 24, 3: 6}


def test_bareiss_rank_agrees_with_rref():
    rng = random.Random(3)
    for _ in range(50):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        r = rng.randint(1, min(m, n))
        A = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(m)]
        B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
        M = mul(A, B)
        assert linalg.bareiss_rank(M) == linalg.rank(M) == int(sympy.Matrix(M).rank())
