import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cubicfano import linalg
from cubicfano.groebner import (
    NotACubic,
    groebner,
    is_groebner,
    normal_form,
    projective_empty,
    s_polynomial,
    smooth_cubic,
)
from cubicfano.mpoly import MPoly, format_poly, from_vector, monomials, parse_poly, partials

KLEIN = "x1^2*x2 + x2^2*x4 + x3*x4^2 + x3^2*x5 + x1*x5^2"


def sympy_basis(polys, nvars):
    xs = sympy.symbols(f"x1:{nvars + 1}")
    exprs = [sympy.sympify(format_poly(p).replace("^", "**")) for p in polys]
    G = sympy.groebner(exprs, *xs, order="grevlex")
    out = set()
    for g in G.exprs:
        P = sympy.Poly(g, *xs)
        lc = P.LC(order="grevlex")
        terms = {tuple(m): Fraction(int(sympy.numer(c / lc)), int(sympy.denom(c / lc))) for m, c in P.terms()}
        out.add(MPoly(nvars, terms))
    return out


IDEALS = [
    (2, ["x1^2 - x2", "x1*x2"]),
    (3, ["x1^2 + x2*x3", "x1*x2 - x3^2", "x2^3"]),
    (3, ["x1*x2 - x3", "x2*x3 - x1", "x1*x3 - x2"]),
    (4, ["x1^2 - x2*x4", "x2^2 - x1*x3", "x3^2 - x4^2"]),
    (3, ["x1^3 - 2*x1*x2", "x1^2*x2 - 2*x2^2 + x1"]),
]


@pytest.mark.parametrize("nvars, texts", IDEALS)
def test_matches_sympy(nvars, texts):
    names = [f"x{i + 1}" for i in range(nvars)]
    polys = [parse_poly(t, names) for t in texts]
    gb = groebner(polys)
    assert set(gb) == sympy_basis(polys, nvars)
    assert is_groebner(gb)


def test_small_example_exact():
    polys = [parse_poly(t, ["x1", "x2"]) for t in ("x1^2 - x2", "x1*x2")]
    assert [format_poly(g) for g in groebner(polys)] == ["x2^2", "x1*x2", "x1^2 - x2"]


def test_lex_order_elimination():
    names = ["x1", "x2"]
    polys = [parse_poly("x1^2 + x2^2 - 1", names), parse_poly("x1 - x2", names)]
    gb = groebner(polys, order="lex")
    # the last element only involves x2
    assert any(all(e[0] == 0 for e in g.terms) for g in gb)


def test_normal_form_membership():
    names = ["x1", "x2", "x3"]
    polys = [parse_poly(t, names) for t in ("x1^2 + x2*x3", "x1*x2 - x3^2")]
    gb = groebner(polys)
    member = polys[0] * parse_poly("x3 + 2*x1", names) - polys[1] * parse_poly("x2", names)
    assert not normal_form(member, gb)
    assert normal_form(parse_poly("x1", names), gb)


def test_smoothness_examples():
    assert smooth_cubic(parse_poly("x1^3 + x2^3 + x3^3 + x4^3 + x5^3")) == "smooth"
    assert smooth_cubic(parse_poly(KLEIN)) == "smooth"
    assert smooth_cubic(parse_poly("x1^3")) == "singular"
    # nodal: x1 x2 x3 + x4^3 + x5^3 is singular at (0:0:1:0:0)
    assert smooth_cubic(parse_poly("x1*x2*x3 + x4^3 + x5^3")) == "singular"


def test_smooth_cubic_rejects_non_cubics():
    with pytest.raises(NotACubic):
        smooth_cubic(parse_poly("x1^2"))
    with pytest.raises(NotACubic):
        smooth_cubic(MPoly.zero(5))


def test_projective_empty_basics():
    gens = MPoly.gens(3)
    assert projective_empty(gens)
    assert not projective_empty(gens[:2])
    assert not projective_empty([])
    with pytest.raises(ValueError):
        projective_empty([parse_poly("x1^2 + x2", ["x1", "x2"])])


FIXERS = ["x1^3", "x2^3", "x3^3", "x4^3", "x5^3", "x1*x2*x3", "x3*x4*x5"]


def _planted_cubic(rng, point):
    """Random cubic corrected so that it and its gradient vanish at an integer point."""
    fixers = [parse_poly(t) for t in FIXERS]
    cols = [[f.evaluate(point)] + [d.evaluate(point) for d in partials(f)] for f in fixers]
    A = [[col[i] for col in cols] for i in range(6)]
    while True:
        F = from_vector([Fraction(rng.randint(-3, 3)) for _ in monomials(5, 3)], 5, 3)
        values = [F.evaluate(point)] + [d.evaluate(point) for d in partials(F)]
        try:
            sol = linalg.solve(A, [-v for v in values])
        except ValueError:
            continue
        for c, f in zip(sol, fixers):
            F = F + f.scale(c)
        return F


@pytest.mark.parametrize("seed", range(5))
def test_planted_singular_point_is_found(seed):
    rng = random.Random(seed)
    point = [rng.randint(1, 3) for _ in range(5)]
    F = _planted_cubic(rng, point)
    assert F.evaluate(point) == 0
    assert all(d.evaluate(point) == 0 for d in partials(F))
    assert not projective_empty(partials(F))
    assert smooth_cubic(F) == "singular"


@st.composite
def small_ideals(draw):
    n = draw(st.integers(min_value=2, max_value=3))
    k = draw(st.integers(min_value=2, max_value=3))
    gens = []
    for _ in range(k):
        terms = draw(
            st.dictionaries(
                st.tuples(*[st.integers(min_value=0, max_value=2)] * n),
                st.integers(min_value=-3, max_value=3).filter(bool),
                min_size=1,
                max_size=3,
            )
        )
        gens.append(MPoly(n, {e: Fraction(c) for e, c in terms.items()}))
    return gens


@given(small_ideals())
def test_s_polynomials_reduce_to_zero(gens):
    gb = groebner(gens)
    for a in range(len(gb)):
        for b in range(a + 1, len(gb)):
            assert not normal_form(s_polynomial(gb[a], gb[b]), gb)
    for g in gens:
        assert not normal_form(g, gb)
