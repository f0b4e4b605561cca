"""Tests for the plain helpers behind the Prefect flows."""

import pandas as pd
import pandera.pandas as pa
import pytest

from prefect_flows import (
    CASE_GROUPS,
    GroupResult,
    angle_table_frame,
    format_summary,
    groups_for,
    summary_metrics,
    validate_angle_table,
    write_group,
)
from recognition import enumerate_feasible_combinations


def test_groups_for():
    assert groups_for("all") == CASE_GROUPS
    assert groups_for("feasible") == ("feasible",)
    with pytest.raises(ValueError):
        groups_for("everything")


def test_summary_metrics_flags_failed_groups():
    frame = pd.DataFrame({"case": ["a", "b"]})
    results = [
        GroupResult("feasible", frame, {}),
        GroupResult("regression", frame, {}, failures=["e/0"]),
    ]
    metrics = summary_metrics(results)
    assert metrics["rows"] == 4
    assert metrics["failed_groups"] == ["regression"]
    assert metrics["failures"] == ["regression: e/0"]
    assert metrics["has_problems"]
    assert "regression" in format_summary(metrics)
    assert not summary_metrics(results[:1])["has_problems"]


def test_angle_table_frame():
    rows = enumerate_feasible_combinations(3)
    df = angle_table_frame(3, rows)
    assert len(df) == len(rows)
    assert list(df["row"]) == list(range(1, len(rows) + 1))
    assert (df["degree"] == 3).all()


def test_angle_table_schema_rejects_bad_degree():
    df = pd.DataFrame([{"degree": 6, "row": 1, "cells": "x", "lower_sum": 0.0, "upper_sum": 10.0}])
    with pytest.raises(pa.errors.SchemaErrors):
        validate_angle_table(df)


def test_write_group(tmp_path):
    result = GroupResult("feasible", pd.DataFrame({"case": ["I"]}), {"cases": 1})
    path = write_group(result, tmp_path, parquet=False)
    assert path.name == "case_verify_feasible.json"
    assert path.exists()
