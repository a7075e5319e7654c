#!/usr/bin/env python3
"""Independent oracle for the polynomial layer.

Computes, with sympy, the reference values frozen into
tests/test_polynomials.cpp: a symbolic determinant, Sylvester resultants,
Smith invariant factors of a quadric pencil, and root data used by the
root-extraction cascade.
"""
import sympy as sp

x1, x2, x3, t, lam = sp.symbols("x1 x2 x3 t lam")

print("== poly_det of [[0,x3,x2],[x3,0,x1],[x2,x1,0]] ==")
m = sp.Matrix([[0, x3, x2], [x3, 0, x1], [x2, x1, 0]])
print(sp.expand(m.det()))

print("== sylvester resultants ==")
f = x1**2 + x2**2 - 1
g = x1 * x2 - 1
print("res_{x2}(x1^2+x2^2-1, x1*x2-1) =", sp.expand(sp.resultant(f, g, x2)))
f2 = 2 * x1**2 - 2
g2 = x1**2 + x2**2 + x3**2 - 4
print("res_{x3}(2x1^2-2, x1^2+x2^2+x3^2-4) =",
      sp.factor(sp.resultant(f2, g2, x3)))

print("== smith invariant factors of lam*G' + G ==")
# Pencil of the quadrics 2*u3^2 and u2*u3 - u1^2 (doubled Gram matrices).
# The lambda coefficient must be a nonsingular member: det(G) = 0 here, so
# the pencil is lam*G' + G.
G = sp.Matrix([[0, 0, 0], [0, 0, 0], [0, 0, 2]])
Gp = sp.Matrix([[-2, 0, 0], [0, 0, 1], [0, 1, 0]])
P = lam * Gp + G
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import QQ
snf = smith_normal_form(P, domain=QQ[lam])
print(snf)
print("det =", sp.factor(P.det()))

print("== roots ==")
for p in [t**4 - 5 * t**2 + 6, (t**2 - 2) ** 2 * (t - 1), t**4 - 10 * t**2 + 1,
          t**3 - 2, 6 * t**3 - 11 * t**2 - 4 * t + 4]:
    r = sp.roots(p)
    print(sp.expand(p), "->", {sp.nsimplify(k): v for k, v in r.items()})
