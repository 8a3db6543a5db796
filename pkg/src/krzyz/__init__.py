"""Exact verification of sharp Taylor-coefficient bounds for bounded nonvanishing functions.

Modules
-------
series        truncated power series over exact Gaussian rationals or complex floats
majorant      coefficients of ``F*(z,t) = exp(-t(1+z)/(1-z))`` and the horizon ``N(t)``
caratheodory  convex maps <-> Carathéodory functions, exact Toeplitz minors
schur         Cayley transform, Schur recursion, Blaschke products, inner reconstruction
bounds        bound verification, extremal equality, probes and the t = 1/2 walkthrough
cli           the ``krzyz`` command
"""
from .bounds import (
    bound_sweep,
    extremal_equality,
    probe_beyond,
    reproduce_worked_example,
    subordination_coeffs,
    verify_bound,
)
from .caratheodory import (
    CaratheodorySegment,
    caratheodory_to_convex,
    convex_to_caratheodory,
    h_closed_form,
    lemma2_value,
    majorant_segment,
    segment_minors,
    theorem1_check,
    toeplitz_minors,
)
from .majorant import bound_horizon, extremal_coeffs, fstar_coeffs, halfplane_coeffs, normalized_coeffs
from .scalar import GaussianRational
from .schur import (
    BlaschkeProduct,
    blaschke_series,
    cayley,
    rational_inverse_cayley,
    reconstruct_inner,
    sample_omega,
    schur_parameters,
    schur_synthesis,
)
from .series import TruncatedSeries, arith, compose, exp, exp_log, log, power_coefficients

__version__ = "0.1.0"
