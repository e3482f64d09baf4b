"""Least-squares decay-rate fits of error sweeps.

Frequency-window errors decay algebraically in T - L and are fitted on a
log-log scale over the largest decade of valid rows. Time-window errors
decay exponentially in m and are fitted on a semilog scale over m >= 6,
where the exponential regime has set in.
"""

import math
from collections.abc import Iterable, Iterator, Sequence
from itertools import groupby

import numpy as np

from shannonlab.core.types import BoolArray, FloatArray
from shannonlab.harness.models import ExperimentName, ResultRow, SlopeCheck
from shannonlab.windows.models import FrequencyWindowKind, TimeWindowKind

ERROR_FLOOR = 1e-13
SEMILOG_TOLERANCE = 0.1
SEMILOG_MIN_M = 6
LINEAR_SLOPE_RANGE = (-1.7, -1.3)
SMOOTH_SLOPE_RANGE = (-2.8, -2.2)


def _as_positive(values: Sequence[float], label: str) -> FloatArray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.size < 2:
        raise ValueError(f"a slope fit needs at least two points, got {arr.size}")
    if np.any(arr <= 0.0):
        raise ValueError(f"{label} values must be positive for a log fit")
    return arr


def fit_loglog_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """Return the least-squares slope of log y against log x.

    Raises:
        ValueError: If fewer than two points are given or a value is not
            positive.
    """
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    lx = np.log(_as_positive(x, "x"))
    ly = np.log(_as_positive(y, "y"))
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)


def fit_semilog_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """Return the least-squares slope of log y against x.

    Raises:
        ValueError: If fewer than two points are given or a y value is not
            positive.
    """
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    ly = np.log(_as_positive(y, "y"))
    slope, _ = np.polyfit(np.asarray(x, dtype=np.float64), ly, 1)
    return float(slope)


def last_decade(x: FloatArray) -> BoolArray:
    """Mask of the points within a factor of ten of the largest one."""
    if x.size == 0:
        return np.zeros(0, dtype=np.bool_)
    result: BoolArray = x >= np.max(x) / 10.0
    return result


Sweep = tuple[str, float, list[ResultRow]]


def _sweeps(rows: Iterable[ResultRow]) -> Iterator[Sweep]:
    ordered = sorted(rows, key=lambda r: r.sort_key)
    for (window, lam), group in groupby(ordered, key=lambda r: r.sort_key[:2]):
        yield window, lam, list(group)


def _frequency_checks(rows: Iterable[ResultRow]) -> list[SlopeCheck]:
    kinds = {kind.value for kind in FrequencyWindowKind}
    checks: list[SlopeCheck] = []
    for window, lam, group in _sweeps(r for r in rows if r.window in kinds):
        valid = [r for r in group if r.bound is not None and r.max_error > ERROR_FLOOR]
        distance = np.array(
            [r.param - r.N * (1.0 + r.oversampling) for r in valid], dtype=np.float64
        )
        chosen = [r for r, keep in zip(valid, last_decade(distance)) if keep]
        low, high = (
            LINEAR_SLOPE_RANGE
            if window == FrequencyWindowKind.LINEAR.value
            else SMOOTH_SLOPE_RANGE
        )
        slope = None
        if len(chosen) >= 2:
            slope = fit_loglog_slope(
                [r.param - r.N * (1.0 + r.oversampling) for r in chosen],
                [r.max_error for r in chosen],
            )
        checks.append(
            SlopeCheck(
                experiment=ExperimentName.FREQ_DECAY,
                window=window,
                oversampling=lam,
                slope=slope,
                low=low,
                high=high,
                points=len(chosen),
            )
        )
    return checks


def _time_checks(rows: Iterable[ResultRow]) -> list[SlopeCheck]:
    kinds = {kind.value for kind in TimeWindowKind}
    checks: list[SlopeCheck] = []
    for window, lam, group in _sweeps(r for r in rows if r.window in kinds):
        chosen = [
            r
            for r in group
            if r.param >= SEMILOG_MIN_M and r.max_error > ERROR_FLOOR
        ]
        expected = -math.pi * lam / (1.0 + lam)
        slope = None
        if len(chosen) >= 2:
            slope = fit_semilog_slope(
                [float(r.param) for r in chosen], [r.max_error for r in chosen]
            )
        checks.append(
            SlopeCheck(
                experiment=ExperimentName.COMPARE,
                window=window,
                oversampling=lam,
                slope=slope,
                low=(1.0 + SEMILOG_TOLERANCE) * expected,
                high=(1.0 - SEMILOG_TOLERANCE) * expected,
                points=len(chosen),
            )
        )
    return checks


def decay_checks(name: ExperimentName, rows: Sequence[ResultRow]) -> list[SlopeCheck]:
    """Fit the decay rate of every sweep an experiment produces.

    Args:
        name: Experiment that produced ``rows``.
        rows: Result rows of the run.

    Returns:
        One check per (window, oversampling) sweep for the freq-decay and
        compare experiments, nothing for the others.
    """
    if name is ExperimentName.FREQ_DECAY:
        return _frequency_checks(rows)
    if name is ExperimentName.COMPARE:
        return _time_checks(rows)
    return []
