"""Exact scalars, polynomials and the smoothness test."""

from cubicfano.exactmath import CycloElem, cyclotomic_coeffs, zeta
from cubicfano.groebner import groebner, smooth_cubic
from cubicfano.mpoly import format_poly, parse_poly, partials

# Q(zeta_11): the sum over the squares mod 11 is a root of t^2 + t + 3
t = sum((zeta(11, k) for k in (1, 3, 4, 5, 9)), CycloElem.from_rational(11, 0))
print("t =", t)
print("t^2 + t + 3 =", t * t + t + 3)
print("Phi_12 coefficients:", cyclotomic_coeffs(12))

# polynomials read and print in the same text form
F = parse_poly("x1^2*x2 + x2^2*x4 + x3*x4^2 + x3^2*x5 + x1*x5^2")
print("Klein cubic:", format_poly(F))
for i, d in enumerate(partials(F), 1):
    print(f"  dF/dx{i} =", d)

# a small reduced basis, degrevlex
names = ["x1", "x2"]
print("basis:", [str(g) for g in groebner([parse_poly("x1^2 - x2", names), parse_poly("x1*x2", names)])])

# the Jacobian criterion
for text in ("x1^3 + x2^3 + x3^3 + x4^3 + x5^3", "x1^2*x2 + x2^2*x4 + x3*x4^2 + x3^2*x5 + x1*x5^2", "x1^3", "x1*x2*x3 + x4^3 + x5^3"):
    print(f"{text:55s} {smooth_cubic(parse_poly(text))}")
