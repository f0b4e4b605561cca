"""Tabular certification reports.

    Outcomes are flattened into DataFrames, validated with pandera and written
    next to a JSON document holding the exact fractions:

        <stem>.json     full certificates (fractions as strings)
        <stem>.parquet  one validated row per case

    To test this module run: uv run -m certification.reports
"""

import json
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from pathlib import Path

import pandas as pd
import pandera.pandas as pa
from pandera.pandas import Check, Column, DataFrameSchema

from .certify import Certificate, CertificationFailure, VectorCertificate
from .intervals import RationalInterval
from .omega import omega_bounds_over_box
from .reference_cases import REMAINING_CASES, RemainingCase

logger = logging.getLogger(__name__)

OUTCOME_KINDS = ["EmptyStrict", "SingleSignOverBoxes", "FeasiblePair", "Failure"]


def _vector_text(values: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


# ============================================================================
# SCHEMAS
# ============================================================================

CertificationSchema = DataFrameSchema(
    {
        "vector": Column(str, coerce=True, description="Sorted angle vector"),
        "tau": Column(str, coerce=True, nullable=True, description="Permutation of the case"),
        "sequence": Column(str, coerce=True, nullable=True, description="phi permuted by tau"),
        "kind": Column(str, Check.isin(OUTCOME_KINDS), coerce=True, description="Certificate kind"),
        "sign": Column(int, Check.isin([-1, 0, 1]), coerce=True, description="Sign of omega (0 if none)"),
        "pieces": Column(pa.Int64, Check.ge(0), coerce=True, description="Pieces bounded"),
        "omega_lo": Column(float, nullable=True, coerce=True, description="Lower omega bound"),
        "omega_hi": Column(float, nullable=True, coerce=True, description="Upper omega bound"),
        "ok": Column(bool, coerce=True, description="Case settled"),
        "reason": Column(str, coerce=True, nullable=True, description="Failure reason"),
    },
    checks=[Check(lambda df: df["omega_lo"].isna() | (df["omega_lo"] <= df["omega_hi"]), error="omega_lo > omega_hi")],
    coerce=True,
    strict=False,
)

OmegaRegressionSchema = DataFrameSchema(
    {
        "case": Column(str, coerce=True, description="Remaining-case label"),
        "piece": Column(int, Check.ge(0), coerce=True, description="0 for the whole box, i for split piece i"),
        "printed_lo": Column(float, coerce=True, description="Smaller printed bound"),
        "printed_hi": Column(float, coerce=True, description="Larger printed bound"),
        "computed_lo": Column(float, coerce=True, description="Recomputed lower bound"),
        "computed_hi": Column(float, coerce=True, description="Recomputed upper bound"),
        "deviation": Column(float, Check.ge(0), coerce=True, description="Largest absolute difference"),
        "transposed": Column(bool, coerce=True, description="Printed bounds were reversed"),
    },
    coerce=True,
    strict=False,
)


def validate_certification_frame(df: pd.DataFrame) -> pd.DataFrame:
    """Validate and coerce a certification DataFrame.

    Raises:
        pandera.errors.SchemaError: If validation fails
    """
    return CertificationSchema.validate(df)


def validate_omega_regression_frame(df: pd.DataFrame) -> pd.DataFrame:
    """Validate and coerce an omega regression DataFrame.

    Raises:
        pandera.errors.SchemaError: If validation fails
    """
    return OmegaRegressionSchema.validate(df)


# ============================================================================
# FRAMES
# ============================================================================

def _row(outcome: Certificate | CertificationFailure) -> dict:
    if isinstance(outcome, CertificationFailure):
        return {
            "vector": _vector_text(outcome.phi),
            "tau": None if outcome.tau is None else str(outcome.tau),
            "sequence": None,
            "kind": "Failure",
            "sign": 0,
            "pieces": 0,
            "omega_lo": None if outcome.omega is None else float(outcome.omega.lo),
            "omega_hi": None if outcome.omega is None else float(outcome.omega.hi),
            "ok": False,
            "reason": outcome.reason,
        }
    omega = outcome.omega
    if outcome.evidence is not None:
        omega = outcome.evidence[0].enclosure
    return {
        "vector": _vector_text(outcome.phi),
        "tau": str(outcome.tau),
        "sequence": _vector_text(outcome.sequence),
        "kind": outcome.kind.value,
        "sign": outcome.sign,
        "pieces": len(outcome.pieces),
        "omega_lo": None if omega is None else float(omega.lo),
        "omega_hi": None if omega is None else float(omega.hi),
        "ok": outcome.ok,
        "reason": None,
    }


def certification_frame(
    outcomes: Iterable[VectorCertificate | Certificate | CertificationFailure],
) -> pd.DataFrame:
    """One validated row per case, sorted by vector then tau."""
    rows = []
    for outcome in outcomes:
        if isinstance(outcome, VectorCertificate):
            rows.extend(_row(case) for case in outcome.cases)
        else:
            rows.append(_row(outcome))
    df = pd.DataFrame(rows, columns=list(CertificationSchema.columns))
    df = df.sort_values(["vector", "tau"], na_position="last").reset_index(drop=True)
    return validate_certification_frame(df)


def _regression_row(case: RemainingCase, piece: int, printed, computed: RationalInterval) -> dict:
    lo, hi = printed.sorted_pair()
    return {
        "case": case.label,
        "piece": piece,
        "printed_lo": float(lo),
        "printed_hi": float(hi),
        "computed_lo": float(computed.lo),
        "computed_hi": float(computed.hi),
        "deviation": float(max(abs(computed.lo - lo), abs(computed.hi - hi))),
        "transposed": printed.transposed,
    }


def omega_regression_frame(cases: Iterable[RemainingCase] | None = None) -> pd.DataFrame:
    """Recompute omega bounds on the printed boxes of the remaining cases."""
    rows = []
    for case in cases if cases is not None else REMAINING_CASES.values():
        rows.append(_regression_row(case, 0, case.printed, omega_bounds_over_box(case.box)))
        for i, piece in enumerate(case.pieces, start=1):
            if piece.box is not None:
                rows.append(_regression_row(case, i, piece.printed, omega_bounds_over_box(piece.box)))
    return validate_omega_regression_frame(pd.DataFrame(rows))


# ============================================================================
# OUTPUT
# ============================================================================

def write_report(
    payload: dict, frame: pd.DataFrame, output_dir: str | Path, stem: str, parquet: bool = True
) -> tuple[Path, Path | None]:
    """Write <stem>.json and, with parquet=True, <stem>.parquet under output_dir.

    Returns:
        (json path, parquet path or None)
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    json_path = out / f"{stem}.json"
    parquet_path = out / f"{stem}.parquet"
    json_path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=str))
    if not parquet:
        logger.info(f"📝 Wrote {json_path} ({len(frame)} rows)")
        return json_path, None
    frame.to_parquet(parquet_path, index=False)
    logger.info(f"📝 Wrote {json_path} and {parquet_path} ({len(frame)} rows)")
    return json_path, parquet_path


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    print(omega_regression_frame().to_string(index=False))
