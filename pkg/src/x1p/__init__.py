"""Exact verification of the Eisenstein-series equations of the modular curve X_1(p)."""

from .cyclotomic import CyclotomicNumber, Level, cyclo_power, galois_apply, to_complex
from .series import TruncatedSeries
from .eisenstein import NumericContext, eis_s, eis_t, s_series_all, span_rank, t_series_all
from .polys import ModuliPoint, SparsePoly, eval_poly, s_var, t_var, r_var
from .ideal import (
    all_generators,
    canonical_triples,
    determine_kappa,
    distinct_generators,
    eliminate_t,
    eliminated_quadric,
    quad_generator,
)
from .actions import diamond_apply, fricke_involution_check, fricke_membership, fricke_point, fricke_poly
from .cusps import cusp_orbit, principal_cusp, tangent_nullity, wp_point_equal
from .ode import TorsionPoint, build_r_generators, solve_standard, theta_compare, u_identity_check, verify_rhat_relations
from .hilbert import graded_component_dimension, graded_monomials, hilbert_table, quotient_dimension
from .export import RunConfig, VerificationReport, export_equations, parse_export

__version__ = "0.1.0"
