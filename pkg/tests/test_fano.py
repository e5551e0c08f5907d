import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
import sympy

from cubicfano import fano, linalg
from cubicfano.fano import configs
from cubicfano.fano.families import _in_span
from cubicfano.groebner import smooth_cubic
from cubicfano.groups import dihedral, enumerate_group, involutions
from cubicfano.mpoly import MPoly, format_poly, parse_poly, substitute_linear
from cubicfano.reps import eigenspace_cubics

PSL = enumerate_group("psl2_11")
XS3 = ["x1", "x2", "x3"]


def p3(text):
    return parse_poly(text, XS3)


# gram matrices and lattices ------------------------------------------------------


def test_gram_small_groups():
    assert fano.gram_from_group(dihedral(2)) == [[-4, 0, 0], [0, -4, 0], [0, 0, -4]]
    assert fano.gram_from_group(dihedral(3)) == [[-4, 2, 2], [2, -4, 2], [2, 2, -4]]


def test_gram_missing_order():
    with pytest.raises(fano.MissingOrder):
        fano.gram_from_group(dihedral(4))


def test_psl_gram_entries():
    M = fano.gram_from_group(PSL)
    assert len(M) == 55
    off = {M[i][j] for i in range(55) for j in range(55) if i != j}
    assert off == {0, 1, 2}
    # each curve meets the others in the same pattern
    assert len({tuple(sorted(r)) for r in M}) == 1


def test_gram_invariant_under_conjugation():
    M = fano.gram_from_group(PSL)
    invs = involutions(PSL)
    pos = {g: i for i, g in enumerate(invs)}
    rng = random.Random(0)
    for _ in range(5):
        h = rng.choice(PSL.elements)
        perm = [pos[PSL.mul(PSL.mul(h, g), PSL.inverse(h))] for g in invs]
        assert all(M[perm[i]][perm[j]] == M[i][j] for i in range(55) for j in range(55))


def test_klein_report():
    r = fano.klein_report()
    assert r["rank"] == 25
    assert r["signature"][:2] == [1, 24]
    assert abs(r["disc_lambda"]) == 2**2 * 11**10
    assert abs(r["disc_ns"]) == 11**10
    assert r["index"] == 2
    assert abs(r["disc_lambda"]) // abs(r["disc_ns"]) == r["index"] ** 2
    assert r["incidence_in_lambda"] is False


def test_survey():
    records = fano.lambda_survey()
    assert len(records) == 81
    ranks = {tuple(r["xyzw"]): r["rank"] for r in records}
    assert ranks[(0, 2, 1, 0)] == 25
    assert ranks[(0, 0, 0, 2)] == 21
    assert fano.survey_low_rank(records) == [(0, 0, 0, 2), (0, 2, 1, 0)]
    # the other subscript order is not a low-rank lattice
    assert ranks[(0, 1, 2, 0)] > 25


def test_scaled_lattices():
    r = fano.scaled_lattice_report()
    half = r["half_0002"]
    assert half["full"]["rank"] == 21 and half["full"]["signature"][:2] == [1, 20]
    assert abs(half["full"]["discriminant"]) == 11 * 2**22
    assert abs(half["half"]["discriminant"]) == 22
    assert r["half_0020"]["full"]["rank"] == 35


@pytest.mark.parametrize(
    "name, rank, sig, disc",
    [("d2", 3, [0, 3], 64), ("d3", 2, [0, 2], 12), ("d5", 4, [0, 4], 125), ("d6", 5, [0, 5], 576), ("a5", 15, [1, 14], 2**24 * 3**6)],
)
def test_group_lattices(name, rank, sig, disc):
    r = fano.group_lattice_report(name)
    assert r["rank"] == rank and r["signature"][:2] == sig and abs(r["discriminant"]) == disc


def test_isotropy():
    assert fano.group_lattice_report("d3")["all_ones_square"] == 0
    assert fano.group_lattice_report("d5")["all_ones_square"] == 0
    r = fano.group_lattice_report("d6")
    assert r["F1_square"] == 0 and r["F2_square"] == 0
    assert r["F1_F2"] == 0 and r["central_F1"] == 0 and r["central_F2"] == 0
    assert len(r["fibre_classes"]) == 2 and all(len(c) == 3 for c in r["fibre_classes"])
    with pytest.raises(KeyError):
        fano.group_lattice_report("psl2_11")


def test_numeric_identities():
    r = fano.numeric_identities()
    assert (r.CD, r.D2, r.R2, r.CR, r.genusR) == (2, -4, -3, 3, 4)
    assert r.D2 + r.R2 + 2 * 6 == 5
    assert r.R2 + 3 * r.CR == 2 * r.genusR - 2
    assert r.D2 + 3 * r.CD == 2
    assert r.CD + r.CR == 5


# line normal form -------------------------------------------------------------


def test_f2_shape():
    F = parse_poly("x1^3 + x2^3 + x3^3 + x1*x4^2 + 2*x1*x4*x5 + x3*x5^2")
    nf = fano.line_normal_form(F)
    assert not nf.Q1 and not nf.Q2
    assert nf.ell == p3("x1")
    assert nf.C == p3("x1^3 + x2^3 + x3^3")


def test_full_shape_round_trip():
    nf = fano.LineNormalForm(p3("x1^3 - x2*x3^2"), p3("x2^2"), p3("x1*x3"), p3("x1 + x2"))
    assert fano.line_normal_form(fano.reconstruct_cubic(nf)) == nf


@pytest.mark.parametrize("seed", range(20))
def test_seeded_round_trip(seed):
    nf = fano.random_normal_form(random.Random(seed))
    assert fano.line_normal_form(nf.cubic()) == nf


def test_line_not_on_cubic():
    with pytest.raises(fano.LineError, match="line not on cubic"):
        fano.line_normal_form(parse_poly("x1^3 + x2^3 + x3^3 + x4^3 + x5^3"))


def test_not_normal_position():
    with pytest.raises(fano.LineError, match="normal position"):
        fano.line_normal_form(parse_poly("x1^3 + x2*x4^2 + x3*x5^2"))


def test_normalize_identity():
    F = parse_poly("x1^3 + x2^3 + x3^3 + x1*x4^2 + 2*x2*x4*x5 + x3*x5^2")
    assert fano.normalize_line_coords(F, [1, 2, 3]) == F


def test_normalize_klein_line():
    K = parse_poly(fano.KLEIN_CUBIC)
    # the coordinate line x2 = x4 = x5 = 0 lies on the Klein cubic
    H = fano.normalize_line_coords(K, [2, 4, 5])
    nf = fano.line_normal_form(H)
    assert fano.reconstruct_cubic(nf) == H


def test_normalize_moved_line():
    rng = random.Random(5)
    F = parse_poly("x1^3 + x2^3 + x3^3 + x1*x4^2 + 2*x2*x4*x5 + x3*x5^2")
    while True:
        M = [[Fraction(rng.randint(-2, 2)) for _ in range(5)] for _ in range(5)]
        if linalg.det(M):
            break
    G = substitute_linear(F, linalg.inverse(M))
    span = [[M[i][3] for i in range(5)], [M[i][4] for i in range(5)]]
    assert not G.evaluate(span[0]) and not G.evaluate(span[1])
    H = fano.normalize_line_coords(G, span)
    nf = fano.line_normal_form(H)
    assert nf.cubic() == H


def test_normalize_errors():
    with pytest.raises(fano.LineError, match="degenerate"):
        fano.normalize_line_coords(parse_poly("x1^3 + x2^3 + x1*x4^2 + x1*x5^2"), [1, 2, 3])
    with pytest.raises(fano.LineError, match="not on cubic"):
        fano.normalize_line_coords(parse_poly("x1^3 + x4^3 + x5^3 + x2^3 + x3^3"), [1, 2, 3])
    with pytest.raises(fano.LineError):
        fano.normalize_line_coords(parse_poly("x1^3"), [[1, 0, 0, 0, 0], [2, 0, 0, 0, 0]])


def sympy_gamma(nf):
    s = {k: sympy.sympify(format_poly(getattr(nf, k), XS3).replace("^", "**")) for k in ("C", "Q1", "Q2", "ell")}
    x1, x3 = sympy.symbols("x1 x3")
    expr = (x1 * x3 - s["ell"] ** 2) * s["C"] - s["Q1"] ** 2 * x3 + 2 * s["Q1"] * s["Q2"] * s["ell"] - s["Q2"] ** 2 * x1
    return sympy.expand(expr)


@pytest.mark.parametrize("seed", range(10))
def test_gamma_against_sympy(seed):
    nf = fano.random_normal_form(random.Random(100 + seed))
    q = fano.gamma_quintic(nf)
    assert q.is_homogeneous(5) or not q
    ours = sympy.expand(sympy.sympify(format_poly(q, XS3).replace("^", "**")))
    assert sympy.expand(ours - sympy_gamma(nf)) == 0


def test_gamma_special_cases():
    C, ell, Q1 = p3("x1^3 + x2^2*x3"), p3("x2"), p3("x1*x2 + x3^2")
    zero = MPoly.zero(3)
    nf = fano.LineNormalForm(C, zero, zero, ell)
    assert fano.gamma_quintic(nf) == (p3("x1*x3") - ell * ell) * C
    nf = fano.LineNormalForm(zero, Q1, zero, ell)
    assert fano.gamma_quintic(nf) == (Q1 * Q1 * p3("x3")).scale(-1)


def test_harmonic_and_classification():
    C = p3("x1^3 + x2^3 + x3^3")
    zero = MPoly.zero(3)
    nf = fano.LineNormalForm(C, zero, zero, p3("x2"))
    assert fano.harmonic_inversion_test(nf)
    assert substitute_linear(nf.cubic(), fano.HARMONIC_INVERSION) == nf.cubic()
    assert fano.genus2_classification(nf) == "smooth_genus_2"
    assert fano.genus2_classification(fano.LineNormalForm(C, zero, zero, zero)) == "sum_of_two_elliptic"
    assert fano.genus2_classification(fano.LineNormalForm(C, zero, zero, p3("x1"))) == "sum_of_two_elliptic"
    nf = fano.LineNormalForm(C, p3("x2^2"), zero, p3("x2"))
    assert not fano.harmonic_inversion_test(nf)
    with pytest.raises(fano.LineError):
        fano.genus2_classification(nf)


@pytest.mark.parametrize("seed", range(20))
def test_classification_tracks_conic_rank(seed):
    rng = random.Random(seed)
    ell = MPoly(3, {e: Fraction(rng.randint(-1, 1)) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]})
    nf = fano.LineNormalForm(p3("x1^3"), MPoly.zero(3), MPoly.zero(3), ell)
    rank = linalg.rank(fano.conic_matrix(ell))
    expected = "smooth_genus_2" if rank == 3 else "sum_of_two_elliptic"
    assert fano.genus2_classification(nf) == expected
    # ell = l1 x1 + l2 x2 + l3 x3 gives a singular conic exactly when l2 = 0
    assert (rank <= 2) == (ell.coeff((0, 1, 0)) == 0)


# families ---------------------------------------------------------------------


@pytest.mark.parametrize("name, dim", [("d2", 11), ("d3", 8), ("d5", 5), ("d6", 5), ("a5", 2)])
def test_membership(name, dim):
    r = fano.family_membership_check(name)
    assert r["dimension"] == dim
    assert r["all_listed_polynomials_member"]


def test_membership_detects_non_member():
    # the displayed D3 e-term with its literal x1 x1 x4 term is not invariant
    basis = eigenspace_cubics(fano.family_representation("d3"))
    assert not _in_span(basis, parse_poly("x1^2*x3 - x2^2*x3 - 2*x1^2*x4"))


@pytest.mark.parametrize("name", ["klein", "a5", "d2", "d3", "d5", "d6", "z2"])
def test_smoothness_scan(name):
    r = fano.smoothness_scan(name, seed=1)
    assert r["generic_member_smooth"]


def test_d4_decompositions():
    decs = fano.d4_decompositions()
    assert {(d["trace_a"], d["trace_a2"]) for d in decs} == {(-1, 1), (3, 1), (1, -3)}


def test_d4_scan():
    r = fano.d4_nonexistence_scan(seed=0, samples=12)
    assert r["no_smooth_cubic"]
    assert all(set(c["characters_tried"]) == {"T", "L", "L1", "L2"} for c in r["cases"])
    assert r["control_d5"]["smooth_found"]
    assert r["containment"] == {str(o): True for o in (16, 24, 32, 40, 48)}
    assert all(c["certified"] for c in r["cases"])
    assert all(rec["sampled"] == 0 for c in r["cases"] for rec in c["characters"].values())


def test_subspace_certificate_finds_line():
    # on x2 = x3 = x5 = 0 only the x3-partial survives, one form on a line
    basis = [parse_poly(t) for t in ("x1^2*x3 + x2^2*x3", "x3^3", "x3*x4^2", "x1*x2*x5", "x3*x5^2")]
    assert fano.subspace_certificate(basis) == [1, 4]


def test_subspace_certificate_rejects_fermat():
    basis = [parse_poly(f"x{i}^3") for i in range(1, 6)]
    assert fano.subspace_certificate(basis) is None


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_subspace_certificate_members_singular(coeffs):
    basis = [parse_poly(t) for t in ("x1^2*x4 + x2^2*x4", "x1^2*x3 - x2^2*x3", "x3^2*x4", "x4^3", "x4*x5^2")]
    W = fano.subspace_certificate(basis)
    assert W is not None
    F = sum((b.scale(c) for b, c in zip(basis, coeffs)), MPoly.zero(5))
    if F:
        assert smooth_cubic(F) != "smooth"


def test_containment_negative():
    assert not fano.dihedral_contains_d4(20)
    assert fano.dihedral_contains_d4(8)


def test_configs_cache_reuse():
    assert configs._order_table("psl2_11") is configs._order_table("psl2_11")
