"""Experiment harness reproducing the error and norm sweeps as tables.

Example:
    >>> from shannonlab.harness import ExperimentName, ExperimentSpec
    >>> spec = ExperimentSpec.resolve(ExperimentName.NORM, T_exponents=(0, 1))
    >>> spec.truncations
    (1, 2)
"""

from shannonlab.harness.errors import (
    ExperimentConfigError,
    HarnessError,
    ResultOutputError,
)
from shannonlab.harness.experiments import (
    RUNNERS,
    check_oversampling_independence,
    check_time_window_advantage,
    run_compare_experiment,
    run_experiment,
    run_freq_decay_experiment,
    run_nonrobustness_experiment,
    run_norm_experiment,
    run_robustness_experiment,
)
from shannonlab.harness.models import (
    EXPERIMENT_DEFAULTS,
    ExperimentName,
    ExperimentSpec,
    ResultRow,
    RunSummary,
    SlopeCheck,
)
from shannonlab.harness.output import (
    COLUMNS,
    OutputFormat,
    render_table,
    rows_to_frame,
    serialize_summary,
    summary_path,
    write_summary,
    write_table,
)
from shannonlab.harness.slopes import (
    decay_checks,
    fit_loglog_slope,
    fit_semilog_slope,
    last_decade,
)

__all__ = [
    "COLUMNS",
    "EXPERIMENT_DEFAULTS",
    "RUNNERS",
    "ExperimentConfigError",
    "ExperimentName",
    "ExperimentSpec",
    "HarnessError",
    "OutputFormat",
    "ResultOutputError",
    "ResultRow",
    "RunSummary",
    "SlopeCheck",
    "check_oversampling_independence",
    "check_time_window_advantage",
    "decay_checks",
    "fit_loglog_slope",
    "fit_semilog_slope",
    "last_decade",
    "render_table",
    "rows_to_frame",
    "run_compare_experiment",
    "run_experiment",
    "run_freq_decay_experiment",
    "run_nonrobustness_experiment",
    "run_norm_experiment",
    "run_robustness_experiment",
    "serialize_summary",
    "summary_path",
    "write_summary",
    "write_table",
]
