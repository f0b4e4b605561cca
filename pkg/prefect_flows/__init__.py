"""Prefect flows for the long-running reproductions.

    verify-cases   re-verification of the degree-5 reference cases
    enumerate      angle-type tables of drawable bucket combinations
"""

from .case_verification import (
    CASE_GROUPS,
    GroupResult,
    CaseVerificationAlert,
    format_summary,
    groups_for,
    case_verify_flow,
    run_group,
    summary_metrics,
    write_group,
)
from .angle_tables import (
    AngleTableSchema,
    angle_table_frame,
    angle_tables_flow,
    validate_angle_table,
    write_angle_table,
)

__all__ = [
    "CASE_GROUPS",
    "GroupResult",
    "CaseVerificationAlert",
    "format_summary",
    "groups_for",
    "case_verify_flow",
    "run_group",
    "summary_metrics",
    "write_group",
    "AngleTableSchema",
    "angle_table_frame",
    "angle_tables_flow",
    "validate_angle_table",
    "write_angle_table",
]
