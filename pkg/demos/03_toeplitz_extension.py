"""
Which polynomial segments extend to convex maps
===============================================

A segment of the normalized majorant goes through z f''/f' to a list of
Caratheodory coefficients. The Hermitian Toeplitz minors built from them
decide whether an extension exists and whether it is unique.
"""

from fractions import Fraction

from krzyz import majorant_segment, segment_minors, theorem1_check

t = Fraction(1, 2)
print("h segment:", [str(c) for c in majorant_segment(t, 5).coeffs])

for n in (4, 5, 6):
    rep = segment_minors(t, n)
    verdict = theorem1_check(t, n)
    print(f"n = {n}: minors {[str(m) for m in rep.minors]}  -> {rep.classification}"
          f"  extendable={verdict.extendable} unique={verdict.unique}")

# the switch happens at t = 2/(n-1)
n = 6
for t in (Fraction(2, n - 1) - Fraction(1, 1000), Fraction(2, n - 1), Fraction(2, n - 1) + Fraction(1, 1000)):
    print(f"t = {t}: {segment_minors(t, n).classification}")
