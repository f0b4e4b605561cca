"""Exact certification of the degree-5 angle conditions."""

from .simplex import LinearProgram, LPError, LPResult, LPStatus, solve_lp, solve_lp_many
from .intervals import (
    IntervalError,
    RationalInterval,
    pi_enclosure,
    product,
    sin_enclosure,
    sin_over,
    sin_product,
)
from .reduced_system import (
    Box,
    CertificationError,
    Constraint,
    EmptyClosureError,
    Feasible,
    Infeasible,
    InvalidPermutationError,
    ReducedSystem,
    VariableBound,
    angle_values,
    bounding_box,
    build_reduced_system,
    closure_bounding_box,
    strict_feasible,
    variable_index,
    variable_name,
)
from .omega import (
    BoxOutOfRangeError,
    OmegaSign,
    SignReport,
    omega_bounds_over_box,
    omega_enclosure_at,
    sign_of_omega_at,
)
from .certify import (
    Certificate,
    CertificateKind,
    CertificationFailure,
    PieceBound,
    VectorCertificate,
    certify_case,
    certify_feasible_pair,
    certify_feasible_vector,
    certify_infeasible_vector,
    cut_pieces,
    dihedral_key,
    orbit_representatives,
    spread_objectives,
    search_feasible_pair,
)
from .reference_cases import (
    FEASIBLE_CASES,
    MAXIMAL_INFEASIBLE_VECTORS,
    MISPRINTS,
    REFERENCE_CUTS,
    REMAINING_CASES,
    FeasibleCase,
    RemainingCase,
    printed_feasible_case,
)
from .reports import (
    certification_frame,
    omega_regression_frame,
    validate_certification_frame,
    validate_omega_regression_frame,
    write_report,
)

__all__ = [
    "LinearProgram",
    "LPError",
    "LPResult",
    "LPStatus",
    "solve_lp",
    "solve_lp_many",
    "IntervalError",
    "RationalInterval",
    "pi_enclosure",
    "product",
    "sin_enclosure",
    "sin_over",
    "sin_product",
    "Box",
    "CertificationError",
    "Constraint",
    "EmptyClosureError",
    "Feasible",
    "Infeasible",
    "InvalidPermutationError",
    "ReducedSystem",
    "VariableBound",
    "angle_values",
    "bounding_box",
    "build_reduced_system",
    "closure_bounding_box",
    "strict_feasible",
    "variable_index",
    "variable_name",
    "BoxOutOfRangeError",
    "OmegaSign",
    "SignReport",
    "omega_bounds_over_box",
    "omega_enclosure_at",
    "sign_of_omega_at",
    "Certificate",
    "CertificateKind",
    "CertificationFailure",
    "PieceBound",
    "VectorCertificate",
    "certify_case",
    "certify_feasible_pair",
    "certify_feasible_vector",
    "certify_infeasible_vector",
    "cut_pieces",
    "dihedral_key",
    "orbit_representatives",
    "spread_objectives",
    "search_feasible_pair",
    "FEASIBLE_CASES",
    "MAXIMAL_INFEASIBLE_VECTORS",
    "MISPRINTS",
    "REFERENCE_CUTS",
    "REMAINING_CASES",
    "FeasibleCase",
    "RemainingCase",
    "printed_feasible_case",
    "certification_frame",
    "omega_regression_frame",
    "validate_certification_frame",
    "validate_omega_regression_frame",
    "write_report",
]
