"""
The majorant family and how far the bound reaches
==================================================

F*(z, t) = exp(-t(1+z)/(1-z)). Its z-coefficient has modulus 2t e^{-t};
after dividing by it the coefficients are rational in t.
"""

from fractions import Fraction

from krzyz import bound_horizon, fstar_coeffs, normalized_coeffs

t = Fraction(1, 2)
M = fstar_coeffs(t, 5)
print("rational part U:", M.rational_part)
print("F* coefficients (float):", [round(c.real, 6) for c in M.float_coeffs()])

F = normalized_coeffs(t, 5)
print("normalized:", [str(c) for c in F.coeffs[1:]])

# N(t) = floor(2/t + 1): the smaller t, the more coefficients are covered
for t in (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), 1, 2, 3):
    h = bound_horizon(t)
    print(f"t = {str(t):>4}  N = {h.N:2d}  bound = {h.bound:.6f}  boundary = {h.boundary}")
