"""Exact arithmetic for bounded complements on the projective line.

The package decides membership in hyperstandard multiplicity sets and
their derived sets, constructs and enumerates n-complements of boundaries
on the projective line, evaluates adjunction coefficients (differents,
fibre-germ thresholds, the elliptic discriminant table and canonical
bundle formula), and performs the exact simultaneous Diophantine
approximation used alongside them.  All values are ``fractions.Fraction``.
"""

from .adjunction import (
    DiffInput,
    DiffMembership,
    EllipticAdjunction,
    EllipticFibration,
    FiberGerm,
    KodairaType,
    LcThreshold,
    PairDiscrepancy,
    diff_in_hyperstandard,
    diff_multiplicity,
    divisorial_shift,
    elliptic_formula,
    germ_from_blowups,
    kodaira_dP,
    kodaira_resolution_germ,
    lct_over_divisor,
    moduli_degree_ruled,
    pair_discr_bound,
)
from .approximation import (
    ApproximationError,
    ApproxResult,
    equiv_radius,
    quality_bound_holds,
    simultaneous_approx,
    verify_floor_claim,
)
from .hyperstandard import (
    ClosureElement,
    PhiWitness,
    closure,
    closure_elements,
    closure_is_idempotent,
    phi_contains,
    phi_enumerate,
    phi_eps_contains,
    pn_contains,
    pn_lemma_check,
    r_n_set,
    r_prime,
)
from .p1 import (
    ComplementCertificate,
    ComplementVariant,
    EnumerationCapError,
    N1Report,
    certificate_is_valid,
    complement_exists,
    enumerate_N1,
    enumerate_N1_sweep,
    epsilon_from_N,
    min_complement_index,
    openness_radius,
    point_requirement,
    scale_certificate,
    scan_minimal_indices,
)
from .rationals import (
    BoundaryP1,
    DomainError,
    MultSet,
    PreconditionError,
    Rational,
    format_rational,
    lcm_denominators,
    parse_rational,
)

__all__ = [
    "ApproximationError",
    "ApproxResult",
    "BoundaryP1",
    "ClosureElement",
    "ComplementCertificate",
    "ComplementVariant",
    "DiffInput",
    "DiffMembership",
    "DomainError",
    "EllipticAdjunction",
    "EllipticFibration",
    "EnumerationCapError",
    "FiberGerm",
    "KodairaType",
    "LcThreshold",
    "MultSet",
    "N1Report",
    "PairDiscrepancy",
    "PhiWitness",
    "PreconditionError",
    "Rational",
    "certificate_is_valid",
    "closure",
    "closure_elements",
    "closure_is_idempotent",
    "complement_exists",
    "diff_in_hyperstandard",
    "diff_multiplicity",
    "divisorial_shift",
    "elliptic_formula",
    "enumerate_N1",
    "enumerate_N1_sweep",
    "epsilon_from_N",
    "equiv_radius",
    "format_rational",
    "germ_from_blowups",
    "kodaira_dP",
    "kodaira_resolution_germ",
    "lcm_denominators",
    "lct_over_divisor",
    "min_complement_index",
    "moduli_degree_ruled",
    "openness_radius",
    "pair_discr_bound",
    "parse_rational",
    "phi_contains",
    "phi_enumerate",
    "phi_eps_contains",
    "pn_contains",
    "pn_lemma_check",
    "point_requirement",
    "quality_bound_holds",
    "r_n_set",
    "r_prime",
    "scale_certificate",
    "scan_minimal_indices",
    "simultaneous_approx",
    "verify_floor_claim",
]
