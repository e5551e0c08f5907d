"""Normal form of a cubic along a line, the plane quintic, and the harmonic inversion."""

import random

from cubicfano import fano
from cubicfano.mpoly import parse_poly

F = parse_poly("x1^3 + x2^3 + x3^3 + x1*x4^2 + 2*x2*x4*x5 + x3*x5^2")
nf = fano.line_normal_form(F)
print("C  =", nf.C)
print("Q1 =", nf.Q1, " Q2 =", nf.Q2, " ell =", nf.ell)
print("quintic:", fano.gamma_quintic(nf))
print("harmonic inversion acts:", fano.harmonic_inversion_test(nf))
print("genus-2 curve:", fano.genus2_classification(nf))

# a line on the Klein cubic: x2 = x4 = x5 = 0
K = parse_poly(fano.KLEIN_CUBIC)
H = fano.normalize_line_coords(K, [2, 4, 5])
nf = fano.line_normal_form(H)
print("Klein cubic in normal form:", H)
print("  quintic:", fano.gamma_quintic(nf))
print("  harmonic inversion acts:", fano.harmonic_inversion_test(nf))

# the conic x1 x3 - ell^2 decides between a smooth curve and two elliptic curves
zero = nf.Q1 * 0
for text in ("x2", "x1", "0", "x1 + x2 + x3"):
    ell = parse_poly(text, ["x1", "x2", "x3"])
    kind = fano.genus2_classification(fano.LineNormalForm(nf.C, zero, zero, ell))
    print(f"ell = {text:12s} {kind}")

# round trip on random normal forms
rng = random.Random(0)
ok = all(fano.line_normal_form(n.cubic()) == n for n in (fano.random_normal_form(rng) for _ in range(20)))
print("20 random round trips:", ok)
