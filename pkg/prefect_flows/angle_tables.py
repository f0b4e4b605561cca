"""Angle-type tables of drawable bucket combinations.

For every degree d the accepted multisets of classification buckets are
merged into ranged rows (see recognition.enumerate_feasible_combinations)
and written as a validated table. The flow fans the degree-5 enumeration out
by its first bucket, which is where nearly all of the work is.

CLI Usage:
    uv run main.py enumerate --degree 4
    uv run main.py enumerate --degree 5 --output tables

Prefect Deployment:
    uv run prefect deployment run 'enumerate/enumerate-tables'

To test this module run: uv run -m prefect_flows.angle_tables
"""

import logging
from pathlib import Path

import pandas as pd
import pandera.pandas as pa
from pandera.pandas import Check, Column, DataFrameSchema
from prefect import flow, get_run_logger, task

from certification import write_report
from opening_angles import ANGLE_BUCKETS, AngleBucket
from recognition import accepted_bucket_tuples, compress_rows, row_labels
from settings import CONFIG

logger = logging.getLogger(__name__)

DEGREES = (1, 2, 3, 4, 5)

AngleTableSchema = DataFrameSchema(
    {
        "degree": Column(int, Check.isin(list(DEGREES)), coerce=True, description="Vertex degree"),
        "row": Column(pa.Int64, Check.ge(1), coerce=True, description="1-based row number"),
        "cells": Column(str, coerce=True, description="Cell texts joined by ' | '"),
        "lower_sum": Column(float, Check.ge(0), coerce=True, description="Sum of the cells' lower ends"),
        "upper_sum": Column(float, Check.le(900), coerce=True, description="Sum of the cells' upper ends"),
    },
    strict=True,
)


def validate_angle_table(df: pd.DataFrame) -> pd.DataFrame:
    try:
        return AngleTableSchema.validate(df, lazy=True)
    except pa.errors.SchemaErrors as e:
        logger.error(f"🚨 Angle table failed validation:\n{e.failure_cases}")
        raise


def angle_table_frame(d: int, rows: list[tuple[AngleBucket, ...]]) -> pd.DataFrame:
    records = [
        {
            "degree": d,
            "row": i,
            "cells": " | ".join(row_labels(row)),
            "lower_sum": float(sum(c.lower for c in row)),
            "upper_sum": float(sum(c.upper for c in row)),
        }
        for i, row in enumerate(rows, start=1)
    ]
    return validate_angle_table(pd.DataFrame(records, columns=list(AngleTableSchema.columns)))


def table_payload(d: int, rows: list[tuple[AngleBucket, ...]]) -> dict:
    return {
        "degree": d,
        "rows": [
            [
                {"label": label, "lower": str(c.lower), "lower_closed": c.lower_closed,
                 "upper": str(c.upper), "upper_closed": c.upper_closed}
                for label, c in zip(row_labels(row), row)
            ]
            for row in rows
        ],
    }


def write_angle_table(d: int, rows, output_dir: str | Path, parquet: bool = True) -> Path:
    json_path, _ = write_report(
        table_payload(d, rows), angle_table_frame(d, rows), output_dir, f"angle_table_d{d}", parquet=parquet
    )
    return json_path


# ============================================================================
# PREFECT TASKS AND FLOW
# ============================================================================

@task(name="accepted-bucket-tuples")
def accepted_tuples_task(d: int, first: int) -> list[tuple[int, ...]]:
    return accepted_bucket_tuples(d, first)


@task(name="write-angle-table")
def write_table_task(d: int, rows, output_dir: str, parquet: bool) -> str:
    return str(write_angle_table(d, rows, output_dir, parquet))


@flow(name="enumerate", log_prints=True)
def angle_tables_flow(degrees: list[int] | None = None, output_dir: str | None = None, parquet: bool = True) -> dict:
    """Enumerate and write the angle-type table of each degree.

    Args:
        degrees: Degrees to enumerate (default 1..5)
        output_dir: Report directory (default: CONFIG output_dir)
        parquet: Also write Parquet tables

    Returns:
        Row count per degree
    """
    run_logger = get_run_logger()
    output_dir = output_dir or CONFIG["output_dir"]
    counts = {}
    for d in degrees or DEGREES:
        futures = [accepted_tuples_task.submit(d, first) for first in range(len(ANGLE_BUCKETS))]
        accepted = sorted(t for f in futures for t in f.result())
        rows = compress_rows(d, accepted)
        write_table_task(d, rows, output_dir, parquet)
        run_logger.info(f"📊 d={d}: {len(accepted)} accepted multisets in {len(rows)} rows")
        counts[d] = len(rows)
    return counts


if __name__ == "__main__":
    from recognition import enumerate_feasible_combinations

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    print(angle_table_frame(4, enumerate_feasible_combinations(4)).to_string(index=False))
