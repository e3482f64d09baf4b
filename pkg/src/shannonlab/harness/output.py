"""Result table and run summary writers.

Tables are written with pandas (CSV or TSV, shortest round-trip floats,
empty cells where no bound applies). The nine standard columns are followed
by one appended extension column, ``lower``, holding the lower end of a
two-sided bracket and left empty for every other row. Run summaries are serialized with
orjson after ``model_dump(mode="json")``.
"""

import sys
from collections.abc import Sequence
from enum import Enum
from pathlib import Path
from typing import TextIO

import orjson
import pandas as pd
import structlog

from shannonlab.harness.errors import ResultOutputError
from shannonlab.harness.models import ResultRow, RunSummary

logger = structlog.get_logger(__name__)

COLUMNS = [
    "experiment",
    "window",
    "N",
    "lambda",
    "param",
    "samples_used",
    "max_error",
    "bound",
    "pass",
    # extension column, always last
    "lower",
]

_SUMMARY_OPTIONS = (
    orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY
)


class OutputFormat(str, Enum):
    """Result table formats."""

    CSV = "csv"
    TSV = "tsv"

    @property
    def separator(self) -> str:
        """Field separator of the format."""
        return "\t" if self is OutputFormat.TSV else ","


def rows_to_frame(rows: Sequence[ResultRow]) -> pd.DataFrame:
    """Arrange result rows as a DataFrame with the table columns in order."""
    records = [
        {
            "experiment": row.experiment.value,
            "window": row.window,
            "N": row.N,
            "lambda": row.oversampling,
            "param": row.param,
            "samples_used": row.samples_used,
            "max_error": row.max_error,
            "bound": row.bound,
            "pass": "true" if row.passed else "false",
            "lower": row.lower,
        }
        for row in rows
    ]
    return pd.DataFrame.from_records(records, columns=COLUMNS)


def render_table(
    rows: Sequence[ResultRow], fmt: OutputFormat = OutputFormat.CSV
) -> str:
    """Render the rows as CSV or TSV text with a header line."""
    text: str = rows_to_frame(rows).to_csv(
        sep=fmt.separator, index=False, na_rep="", lineterminator="\n"
    )
    return text


def write_table(
    rows: Sequence[ResultRow],
    path: Path | None,
    fmt: OutputFormat = OutputFormat.CSV,
    stream: TextIO | None = None,
) -> None:
    """Write the result table to ``path``, or to ``stream`` when path is None.

    Args:
        rows: Result rows in output order.
        path: Destination file, None for ``stream``.
        fmt: Table format.
        stream: Text stream used without a path, stdout when None.

    Raises:
        ResultOutputError: If the file cannot be written.
    """
    text = render_table(rows, fmt)
    if path is None:
        (stream or sys.stdout).write(text)
        return
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ResultOutputError(path, str(exc)) from exc
    logger.debug("result_table_written", path=str(path), rows=len(rows))


def summary_path(path: Path) -> Path:
    """Return the summary location ``<path>.summary.json``."""
    return path.with_name(f"{path.name}.summary.json")


def serialize_summary(summary: RunSummary) -> bytes:
    """Serialize a run summary, including its overall pass flag.

    Raises:
        ResultOutputError: If the summary cannot be encoded.
    """
    data = summary.model_dump(mode="json")
    data["passed"] = summary.passed
    for check, dumped in zip(summary.slope_checks, data["slope_checks"]):
        dumped["passed"] = check.passed
    try:
        return orjson.dumps(data, option=_SUMMARY_OPTIONS)
    except (TypeError, orjson.JSONEncodeError) as exc:
        raise ResultOutputError(Path("<summary>"), str(exc)) from exc


def write_summary(summary: RunSummary, path: Path) -> Path:
    """Write the run summary next to the result table at ``path``.

    Returns:
        The summary file location.

    Raises:
        ResultOutputError: If the summary cannot be encoded or written.
    """
    target = summary_path(path)
    payload = serialize_summary(summary)
    try:
        target.write_bytes(payload + b"\n")
    except OSError as exc:
        raise ResultOutputError(target, str(exc)) from exc
    logger.debug("run_summary_written", path=str(target))
    return target
