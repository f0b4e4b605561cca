"""Re-verification of the degree-5 reference cases.

Three groups of cases can be checked, separately or together:

    infeasible  every maximal infeasible angle vector: strict-LP emptiness for
                every permutation class, single-signed omega (with the
                reference cuts) for the remaining ones
    feasible    every printed pair x+/x- lies in the closure of its reduced
                system and omega has the printed signs there
    regression  omega bounds recomputed on the printed boxes, next to the
                printed decimals

Each group produces a pandera-validated table written as JSON (and Parquet).
The plain functions are shared by the CLI; the flow fans the infeasible
vectors out as one task each and ends with a boxed summary.

CLI Usage:
    uv run main.py verify-cases --case feasible
    uv run main.py verify-cases --case infeasible --output reports

Prefect Deployment:
    uv run prefect deployment run 'verify-cases/verify-cases-all'

To test this module run: uv run -m prefect_flows.case_verification
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd
from prefect import flow, get_run_logger, task

from certification import (
    FEASIBLE_CASES,
    MAXIMAL_INFEASIBLE_VECTORS,
    REFERENCE_CUTS,
    certification_frame,
    certify_feasible_pair,
    certify_infeasible_vector,
    omega_regression_frame,
    write_report,
)
from settings import CONFIG

logger = logging.getLogger(__name__)

CASE_GROUPS = ("infeasible", "feasible", "regression")
REGRESSION_TOLERANCE = 1e-12


@dataclass
class GroupResult:
    """Outcome of one case group: its table, JSON payload and failing case labels."""
    group: str
    frame: pd.DataFrame
    payload: dict
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def groups_for(case: str) -> tuple[str, ...]:
    if case == "all":
        return CASE_GROUPS
    if case not in CASE_GROUPS:
        raise ValueError(f"unknown case group '{case}', expected one of {', '.join(CASE_GROUPS + ('all',))}")
    return (case,)


def _vector_label(vector) -> str:
    return "(" + ", ".join(str(v) for v in vector) + ")"


def certify_one_vector(vector):
    """Certificate (or failure) for one maximal infeasible vector."""
    return certify_infeasible_vector(vector, REFERENCE_CUTS)


def infeasible_group(outcomes=None) -> GroupResult:
    outcomes = [certify_one_vector(v) for v in MAXIMAL_INFEASIBLE_VECTORS] if outcomes is None else outcomes
    failures = [_vector_label(v) for v, o in zip(MAXIMAL_INFEASIBLE_VECTORS, outcomes) if not o.ok]
    payload = {"group": "infeasible", "vectors": [o.to_dict() for o in outcomes]}
    return GroupResult("infeasible", certification_frame(outcomes), payload, failures)


def feasible_group() -> GroupResult:
    outcomes = {
        name: certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
        for name, case in FEASIBLE_CASES.items()
    }
    failures = [name for name, o in outcomes.items() if not o.ok]
    payload = {"group": "feasible", "cases": {name: o.to_dict() for name, o in outcomes.items()}}
    return GroupResult("feasible", certification_frame(outcomes.values()), payload, failures)


def regression_group() -> GroupResult:
    frame = omega_regression_frame()
    # a transposed printed row is compared after sorting its two bounds
    off = frame[frame["deviation"] > REGRESSION_TOLERANCE]
    failures = sorted({f"{row.case}/{row.piece}" for row in off.itertuples() if not row.transposed})
    payload = {"group": "regression", "tolerance": REGRESSION_TOLERANCE, "rows": frame.to_dict(orient="records")}
    return GroupResult("regression", frame, payload, failures)


def run_group(group: str) -> GroupResult:
    return {"infeasible": infeasible_group, "feasible": feasible_group, "regression": regression_group}[group]()


def write_group(result: GroupResult, output_dir: str | Path, parquet: bool = True) -> Path:
    json_path, _ = write_report(
        {**result.payload, "ok": result.ok, "failures": result.failures},
        result.frame,
        output_dir,
        f"case_verify_{result.group}",
        parquet=parquet,
    )
    return json_path


def summary_metrics(results: list[GroupResult]) -> dict:
    return {
        "groups": [r.group for r in results],
        "rows": sum(len(r.frame) for r in results),
        "failed_groups": [r.group for r in results if not r.ok],
        "failures": [f"{r.group}: {label}" for r in results for label in r.failures],
        "has_problems": any(not r.ok for r in results),
    }


def format_summary(metrics: dict) -> str:
    failed = len(metrics["failures"])
    return f"""
╔══════════════════════════════════════════════════════════╗
║               CASE VERIFICATION SUMMARY                  ║
╠══════════════════════════════════════════════════════════╣
║  Groups:         {', '.join(metrics['groups']):<40}║
║  Table rows:     {metrics['rows']:>5}                                   ║
║  ✅ Passed:      {len(metrics['groups']) - len(metrics['failed_groups']):>5}                                   ║
║  ❌ Failures:    {failed:>5}                                   ║
╚══════════════════════════════════════════════════════════╝
"""


# ============================================================================
# PREFECT TASKS AND FLOW
# ============================================================================

@task(name="certify-infeasible-vector")
def certify_vector_task(vector):
    return certify_one_vector(vector)


@task(name="run-case-group")
def run_group_task(group: str) -> GroupResult:
    return run_group(group)


@task(name="write-group-report")
def write_group_task(result: GroupResult, output_dir: str, parquet: bool) -> str:
    return str(write_group(result, output_dir, parquet))


@task(name="log-summary")
def log_summary(results: list[GroupResult]) -> dict:
    """Log the boxed summary and return metrics for Prefect artifacts."""
    run_logger = get_run_logger()
    metrics = summary_metrics(results)
    run_logger.info(format_summary(metrics))
    return metrics


class CaseVerificationAlert(Exception):
    """Raised when a reference case could not be re-verified (for Prefect automation triggers)."""
    pass


@flow(name="verify-cases", log_prints=True)
def case_verify_flow(
    case: str = "all",
    output_dir: str | None = None,
    parquet: bool = True,
    fail_on_problems: bool = True,
) -> dict:
    """Re-verify the reference cases and write one report per case group.

    Args:
        case: infeasible, feasible, regression or all
        output_dir: Report directory (default: CONFIG output_dir)
        parquet: Also write Parquet tables
        fail_on_problems: Raise CaseVerificationAlert when any case fails

    Returns:
        Summary metrics with a has_problems flag

    Raises:
        CaseVerificationAlert: When fail_on_problems=True and a case failed
    """
    output_dir = output_dir or CONFIG["output_dir"]
    results = []
    for group in groups_for(case):
        if group == "infeasible":
            futures = [certify_vector_task.submit(v) for v in MAXIMAL_INFEASIBLE_VECTORS]
            result = infeasible_group([f.result() for f in futures])
        else:
            result = run_group_task(group)
        write_group_task(result, output_dir, parquet)
        results.append(result)

    metrics = log_summary(results)
    if fail_on_problems and metrics["has_problems"]:
        details = "\n".join(f"  - {f}" for f in metrics["failures"])
        raise CaseVerificationAlert(f"Reference cases failed re-verification!\n{details}")
    return metrics


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    feasible = feasible_group()
    logger.info(format_summary(summary_metrics([feasible])))
