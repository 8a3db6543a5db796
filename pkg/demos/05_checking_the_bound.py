"""
Checking the sharp coefficient bound on sampled subordinates
============================================================

For f = F*(omega(z), t) and n <= N(t) the normalized squared modulus of
{f}_n stays at most 1. Rotated monomials omega = lambda z^n hit it exactly.
Past N(t) nothing is proved, so the probe only reports numbers.
"""

from fractions import Fraction

from krzyz import bound_sweep, extremal_equality, probe_beyond, reproduce_worked_example
from krzyz.schur import blaschke_series, sample_omega

t = Fraction(1, 2)
results = bound_sweep(t, samples=200, max_degree=6, seed=0)
margins = [r.margin for res in results for r in res.rows]
print(f"{len(results)} samples, all pass: {all(res.passed for res in results)}, min margin {min(margins)}")

res = extremal_equality(t, 3, "pi/2")
print("extremal n=3, lambda=i:", [str(r.normalized_sq_modulus) for r in res.rows], "sharp:", res.sharp)

omega = blaschke_series(sample_omega(3, 4), 10)
probe = probe_beyond(t, omega, 6, 10)
print(f"probe ({probe.label}):")
for row in probe.rows:
    print(f"  n = {row.n:2d}  {float(row.normalized_sq_modulus):.6f}  vs {row.conjectural_sq_bound:.6f}")

example = reproduce_worked_example()
for stage in example.stages:
    print(f"stage {stage.key}: {'ok' if stage.passed else 'FAILED'}  {stage.name}")
