"""Action layer - Ga^3 action candidates in Cox coordinates and their verifiers."""

from ga3_bundles.action.candidate import (
    STANDARD_BOUNDARY,
    ActionCandidate,
    BasePoint,
    chart_coordinates,
    conjugate_action,
    default_base_point,
    identity_action,
    standard_action,
)
from ga3_bundles.action.mutants import MUTANTS, Mutant, build_mutant
from ga3_bundles.action.verifier import (
    ht_coefficients,
    is_pointwise_fixed,
    orbit_rank,
    verify_all,
    verify_boundary_stability,
    verify_equivariance,
    verify_group_law,
    verify_identity,
    verify_irrelevant_locus,
)

__all__ = [
    "ActionCandidate",
    "BasePoint",
    "MUTANTS",
    "Mutant",
    "STANDARD_BOUNDARY",
    "build_mutant",
    "chart_coordinates",
    "conjugate_action",
    "default_base_point",
    "ht_coefficients",
    "identity_action",
    "is_pointwise_fixed",
    "orbit_rank",
    "standard_action",
    "verify_all",
    "verify_boundary_stability",
    "verify_equivariance",
    "verify_group_law",
    "verify_identity",
    "verify_irrelevant_locus",
]
