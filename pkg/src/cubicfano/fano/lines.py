"""Cubic threefolds in normal form along a line, and the plane quintic of that line.

With the line L = {x1 = x2 = x3 = 0} on F and suitable coordinates,

    F = C + 2 x4 Q1 + 2 x5 Q2 + x4^2 x1 + 2 x4 x5 ell + x5^2 x3

where C, Q1, Q2, ell are forms of degree 3, 2, 2, 1 in x1, x2, x3.  The
harmonic inversion (x1:x2:x3:-x4:-x5) preserves F exactly when Q1 = Q2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .. import linalg
from ..mpoly import MPoly, monomials, substitute_linear

__all__ = [
    "LineError",
    "LineNormalForm",
    "line_normal_form",
    "reconstruct_cubic",
    "normalize_line_coords",
    "gamma_quintic",
    "conic_matrix",
    "harmonic_inversion_test",
    "genus2_classification",
    "HARMONIC_INVERSION",
    "random_normal_form",
]


class LineError(ValueError):
    pass


HARMONIC_INVERSION = [[Fraction(int(i == j) * (1 if i < 3 else -1)) for j in range(5)] for i in range(5)]


@dataclass(frozen=True)
class LineNormalForm:
    C: MPoly
    Q1: MPoly
    Q2: MPoly
    ell: MPoly

    def cubic(self) -> MPoly:
        return reconstruct_cubic(self)


def _lift(p: MPoly) -> MPoly:
    """Form in x1..x3 seen as a form in x1..x5."""
    return p.embed(5, [0, 1, 2])


def reconstruct_cubic(nf: LineNormalForm) -> MPoly:
    x1, x2, x3, x4, x5 = MPoly.gens(5)
    C, Q1, Q2, ell = (_lift(p) for p in (nf.C, nf.Q1, nf.Q2, nf.ell))
    return C + x4 * Q1 * 2 + x5 * Q2 * 2 + x4**2 * x1 + x4 * x5 * ell * 2 + x5**2 * x3


def _split_by_tail(F: MPoly) -> dict[tuple[int, int], MPoly]:
    """Group terms by their (x4, x5) exponents; values are forms in x1..x3."""
    parts: dict[tuple[int, int], dict] = {}
    for e, c in F.terms.items():
        parts.setdefault((e[3], e[4]), {})[e[:3]] = c
    return {k: MPoly(3, v) for k, v in parts.items()}


def _on_standard_line(parts: dict) -> bool:
    return not any(a + b == 3 for a, b in parts)


def line_normal_form(F: MPoly) -> LineNormalForm:
    """Read off (C, Q1, Q2, ell) from a cubic already in normal position."""
    if F.nvars != 5 or not F.is_homogeneous(3):
        raise LineError("expected a homogeneous cubic in x1..x5")
    parts = _split_by_tail(F)
    if not _on_standard_line(parts):
        raise LineError("line not on cubic")
    zero = MPoly.zero(3)
    y1, _, y3 = MPoly.gens(3)
    if parts.get((2, 0), zero) != y1 or parts.get((0, 2), zero) != y3:
        raise LineError("cubic not in normal position: the x4^2 and x5^2 coefficients must be x1 and x3")
    half = Fraction(1, 2)
    return LineNormalForm(
        parts.get((0, 0), zero),
        parts.get((1, 0), zero).scale(half),
        parts.get((0, 1), zero).scale(half),
        parts.get((1, 1), zero).scale(half),
    )


def _line_basis(L, one, zero) -> list[list]:
    """Two spanning vectors from a 2x5 matrix or from the three vanishing coordinates (1-based)."""
    L = list(L)
    if len(L) == 3 and all(isinstance(i, int) for i in L):
        if sorted(set(L)) != sorted(L) or not all(1 <= i <= 5 for i in L):
            raise LineError(f"bad vanishing coordinates {L}")
        free = [i for i in range(5) if i + 1 not in L]
        return [[one if j == i else zero for j in range(5)] for i in free]
    if len(L) != 2 or any(len(r) != 5 for r in L):
        raise LineError("a line is three vanishing coordinates or a 2x5 spanning matrix")
    rows = [[zero + x for x in r] for r in L]
    if linalg.rank(rows) != 2:
        raise LineError("spanning vectors are dependent")
    return rows


def normalize_line_coords(F: MPoly, L) -> MPoly:
    """Change coordinates so that L = {x1 = x2 = x3 = 0} and F is in normal position.

    x2 is completed by the first standard coordinate of the plane independent
    of the new x1 and x3.
    """
    if F.nvars != 5 or not F.is_homogeneous(3):
        raise LineError("expected a homogeneous cubic in x1..x5")
    sample = next(iter(F.terms.values()))
    zero = sample - sample
    one = zero + 1
    p, q = _line_basis(L, one, zero)

    # columns: three standard vectors completing the line, then p and q
    cols: list[list] = []
    for i in range(5):
        e = [one if j == i else zero for j in range(5)]
        if linalg.rank(cols + [e] + [p, q]) == len(cols) + 3:
            cols.append(e)
        if len(cols) == 3:
            break
    cols += [p, q]
    M = linalg.transpose(cols)
    G = substitute_linear(F, M)
    parts = _split_by_tail(G)
    if not _on_standard_line(parts):
        raise LineError("line not on cubic")

    P = parts.get((2, 0), MPoly.zero(3))
    S = parts.get((0, 2), MPoly.zero(3))

    def linear_row(f: MPoly) -> list:
        row = [zero] * 3
        for e, c in f.terms.items():
            row[e.index(1)] = zero + c
        return row

    rp, rs = linear_row(P), linear_row(S)
    if linalg.rank([rp, rs]) != 2:
        raise LineError("degenerate line: the x4^2 and x5^2 coefficient forms are dependent")
    mid = next(
        [one if j == i else zero for j in range(3)]
        for i in range(3)
        if linalg.rank([rp, [one if j == i else zero for j in range(3)], rs]) == 3
    )
    A = [rp, mid, rs]
    Ainv = linalg.inverse(A)
    T = [[zero] * 5 for _ in range(5)]
    for i in range(3):
        for j in range(3):
            T[i][j] = Ainv[i][j]
    T[3][3] = one
    T[4][4] = one
    H = substitute_linear(G, T)
    return H.rationalize() if H.is_rational() else H


def gamma_quintic(nf: LineNormalForm) -> MPoly:
    """(x1 x3 - ell^2) C - Q1^2 x3 + 2 Q1 Q2 ell - Q2^2 x1 on the plane of x1, x2, x3."""
    x1, _, x3 = MPoly.gens(3)
    C, Q1, Q2, ell = nf.C, nf.Q1, nf.Q2, nf.ell
    return (x1 * x3 - ell * ell) * C - Q1 * Q1 * x3 + Q1 * Q2 * ell * 2 - Q2 * Q2 * x1


def conic_matrix(ell: MPoly) -> list[list]:
    """Symmetric matrix of the conic x1 x3 - ell^2."""
    lin = [Fraction(0)] * 3
    for e, c in ell.terms.items():
        if sum(e) != 1:
            raise LineError("ell must be a linear form")
        lin[e.index(1)] = c
    zero = lin[0] - lin[0]
    M = [[zero - lin[i] * lin[j] for j in range(3)] for i in range(3)]
    M[0][2] = M[0][2] + Fraction(1, 2)
    M[2][0] = M[2][0] + Fraction(1, 2)
    return M


def harmonic_inversion_test(nf: LineNormalForm) -> bool:
    """Whether (x1:x2:x3:-x4:-x5) acts on the cubic, i.e. Q1 = Q2 = 0."""
    fixed = not nf.Q1 and not nf.Q2
    F = reconstruct_cubic(nf)
    if fixed != (substitute_linear(F, HARMONIC_INVERSION) == F):
        raise ArithmeticError("harmonic inversion test disagrees with direct substitution")
    return fixed


def genus2_classification(nf: LineNormalForm) -> str:
    if not harmonic_inversion_test(nf):
        raise LineError("the harmonic inversion does not act on this cubic")
    return "smooth_genus_2" if linalg.rank(conic_matrix(nf.ell)) == 3 else "sum_of_two_elliptic"


def random_normal_form(rng, coeff_range: int = 3) -> LineNormalForm:
    """Normal form with random small integer coefficients, for round-trip checks."""

    def form(deg):
        return MPoly(3, {e: Fraction(rng.randint(-coeff_range, coeff_range)) for e in monomials(3, deg)})

    return LineNormalForm(form(3), form(2), form(2), form(1))

