"""
From a Caratheodory segment to a rational inner function
========================================================

Cayley maps h to a Schur function omega. Its Schur parameters hit the unit
circle after finitely many steps exactly when omega is a finite Blaschke
product, which can then be read back as a rational function.
"""

from fractions import Fraction

from krzyz import (
    cayley,
    majorant_segment,
    rational_inverse_cayley,
    reconstruct_inner,
    schur_parameters,
    schur_synthesis,
)
from krzyz.polynomial import format_poly

h = majorant_segment(Fraction(1, 2), 5).series()
omega = cayley(h, "c_to_omega")
print("omega =", omega)

params = schur_parameters(omega)
print("Schur parameters:", [str(g) for g in params.gammas], "degenerate at", params.degeneracy)

inner = reconstruct_inner(omega, 4)
print("omega(z) =", inner)

# once degenerate, the parameters fix every later coefficient
print("extended:", schur_synthesis(params, 9))
print("matches the rational form:", schur_synthesis(params, 9) == inner.series(9))

p, q = rational_inverse_cayley(inner)
print(f"h(z) = ({format_poly(p)})/({format_poly(q)})")
