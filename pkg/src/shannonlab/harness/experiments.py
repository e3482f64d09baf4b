"""Experiment runners that measure errors and check them against bounds.

Each runner turns an ExperimentSpec into result rows; ``run_experiment``
dispatches by name, sorts the rows by (window, oversampling, param), fits
the decay rates and logs every failed check.
"""

import math
from collections import defaultdict
from collections.abc import Callable, Sequence

import numpy as np
import structlog

from shannonlab.bounds import (
    ErrorReport,
    ckb_bound_applies,
    ckb_error_bound,
    freq_cub_error_bound,
    freq_lin_error_bound,
    noise_error_bounds,
    robustness_bound_ckb,
    robustness_bound_general,
    robustness_bound_sinh,
    s_t_half_node,
    shannon_norm_bracket,
    shannon_norm_numeric,
    sinh_error_bound,
)
from shannonlab.bounds.norms import DEFAULT_REFINEMENT
from shannonlab.core.types import FloatArray
from shannonlab.harness.models import (
    ExperimentName,
    ExperimentSpec,
    ResultRow,
    RunSummary,
)
from shannonlab.harness.slopes import decay_checks
from shannonlab.reconstruct import (
    ClassicalShannon,
    FrequencyReg,
    GridEvaluator,
    Reconstructor,
    TimeReg,
    equispaced_grid,
    localized_weights,
    max_abs_error,
    stochastic_error,
)
from shannonlab.reconstruct.models import ReconstructionMethod
from shannonlab.sampling import (
    BandlimitedTestFunction,
    NoiseKind,
    NoiseModel,
    SampleSet,
    SignalKind,
    eval_test_function,
    make_generator,
    noise_vector,
    sample,
    signal_l2_norm,
)
from shannonlab.windows import (
    FrequencyWindow,
    FrequencyWindowKind,
    SamplingConfig,
    TimeWindow,
    TimeWindowKind,
    time_window_ft,
)

logger = structlog.get_logger(__name__)

Runner = Callable[[ExperimentSpec], list[ResultRow]]

NODE_GAP_SLACK = 1e-6
VARIANCE_TOLERANCE = 1.1
VARIANCE_POINTS = 10
OVERSAMPLING_SPREAD = 0.01
ADVANTAGE_MIN_M = 6
ADVANTAGE_MIN_OVERSAMPLING = 1.0


def _reference(f: BandlimitedTestFunction) -> Callable[[FloatArray], FloatArray]:
    def evaluate(t: FloatArray) -> FloatArray:
        return eval_test_function(f, t)

    return evaluate


def _frequency_bound(
    kind: FrequencyWindowKind, config: SamplingConfig, T: int, f_norm: float
) -> float | None:
    if T <= config.L:
        return None
    if kind is FrequencyWindowKind.LINEAR:
        return freq_lin_error_bound(config.N, config.oversampling, T, f_norm)
    return freq_cub_error_bound(config.N, config.oversampling, T, f_norm)


def _time_bound(w: TimeWindow, f_norm: float) -> float | None:
    N = w.config.N
    lam = w.config.oversampling
    if w.kind is TimeWindowKind.SINH:
        return sinh_error_bound(N, lam, w.m, f_norm)
    if not ckb_bound_applies(lam, w.m):
        return None
    return ckb_error_bound(N, lam, w.m, f_norm)


def check_oversampling_independence(rows: Sequence[ResultRow]) -> list[ResultRow]:
    """Mark rows whose value for a given T varies with the oversampling.

    The worst-case amplification depends on T only. For every T the values
    of all lambdas must agree within 1% of the largest one; otherwise every
    row of that T is marked inconsistent.
    """
    by_T: dict[int, list[float]] = defaultdict(list)
    for row in rows:
        by_T[row.param].append(row.max_error)
    agrees = {
        T: max(values) - min(values) <= OVERSAMPLING_SPREAD * max(values)
        for T, values in by_T.items()
    }
    return [
        row if agrees[row.param] else row.model_copy(update={"consistent": False})
        for row in rows
    ]


def check_time_window_advantage(rows: Sequence[ResultRow]) -> list[ResultRow]:
    """Mark time-window rows that do not beat every frequency window.

    Applies for m >= 6 and lambda >= 1, comparing rows of equal (lambda, m).
    """
    time_kinds = {kind.value for kind in TimeWindowKind}
    frequency_kinds = {kind.value for kind in FrequencyWindowKind}
    best: dict[tuple[float, int], float] = {}
    for row in rows:
        if row.window in frequency_kinds:
            key = (row.oversampling, row.param)
            best[key] = min(best.get(key, math.inf), row.max_error)

    def beaten(row: ResultRow) -> bool:
        if row.window not in time_kinds:
            return False
        if row.param < ADVANTAGE_MIN_M:
            return False
        if row.oversampling < ADVANTAGE_MIN_OVERSAMPLING:
            return False
        return row.max_error >= best.get((row.oversampling, row.param), math.inf)

    return [
        row.model_copy(update={"consistent": False}) if beaten(row) else row
        for row in rows
    ]


def run_norm_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """Compare the numerical operator norm with its closed-form bracket.

    Two rows per (lambda, T): ``shannon-norm`` checks max_t s_T(t) against
    the bracket, ``half-node-gap`` checks that the value at t = 1/(2L)
    lies within 2/(pi(2T+1)) of the maximum.
    """
    rows: list[ResultRow] = []
    for lam in spec.lambdas:
        L = SamplingConfig(N=spec.N, oversampling=lam).L
        for T in spec.truncations:
            numeric = shannon_norm_numeric(T, L)
            bracket = shannon_norm_bracket(T)
            norm = ErrorReport(
                method="shannon-norm",
                N=spec.N,
                oversampling=lam,
                param=T,
                measured_max_error=numeric,
                bound=bracket.upper,
                grid_size=DEFAULT_REFINEMENT + 1,
            )
            gap = ErrorReport(
                method="half-node-gap",
                N=spec.N,
                oversampling=lam,
                param=T,
                measured_max_error=abs(numeric - s_t_half_node(T)),
                bound=2.0 / (np.pi * (2 * T + 1)) + NODE_GAP_SLACK,
                grid_size=DEFAULT_REFINEMENT + 1,
            )
            used = 2 * T + 1
            rows.append(
                ResultRow.from_report(
                    spec.name, norm.method, norm, used, lower=bracket.lower
                )
            )
            rows.append(ResultRow.from_report(spec.name, gap.method, gap, used))
    return rows


def run_nonrobustness_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """Measure how the Shannon sum amplifies worst-case sign perturbations.

    The grid is augmented by t = 1/(2L), where every term of the perturbed
    sum has the same sign and the amplification peaks. The amplification
    for one T must not depend on lambda; see
    ``check_oversampling_independence``.
    """
    evaluator = GridEvaluator()
    rows: list[ResultRow] = []
    for lam in spec.lambdas:
        L = SamplingConfig(N=spec.N, oversampling=lam).L
        grid = np.union1d(equispaced_grid(-1.0, 1.0, spec.S), [0.5 / L])
        for T in spec.truncations:
            indices = np.arange(-T, T + 1, dtype=np.int64)
            model = NoiseModel(
                kind=NoiseKind.WORST_CASE_SIGN, epsilon=spec.epsilon, T=T
            )
            perturbation = SampleSet.from_array(L, -T, noise_vector(model, indices))
            r = Reconstructor(method=ClassicalShannon(T=T), samples=perturbation)
            measured = float(np.max(np.abs(evaluator.map(r.evaluate_array, grid))))
            lower, upper = noise_error_bounds(T, spec.epsilon)
            report = ErrorReport(
                method="shannon",
                N=spec.N,
                oversampling=lam,
                param=T,
                measured_max_error=measured,
                bound=upper,
                grid_size=grid.size,
            )
            rows.append(
                ResultRow.from_report(
                    spec.name, "shannon", report, r.samples_used, lower=lower
                )
            )
    return check_oversampling_independence(rows)


def run_freq_decay_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """Measure the frequency-window error of the unit sinc against T.

    Rows with T <= L carry no bound: the algebraic decay only sets in once
    the truncation passes the sampling rate.
    """
    f = BandlimitedTestFunction(kind=SignalKind.UNIT_SINC, N=spec.N)
    f_norm = signal_l2_norm(f)
    reference = _reference(f)
    evaluator = GridEvaluator()
    T_max = max(spec.truncations)
    rows: list[ResultRow] = []
    for lam in spec.lambdas:
        config = SamplingConfig(N=spec.N, oversampling=lam)
        samples = sample(f, config.L, -T_max, T_max)
        for kind in FrequencyWindowKind:
            window = FrequencyWindow(kind=kind, config=config)
            for T in spec.truncations:
                r = Reconstructor(
                    method=FrequencyReg(window=window, T=T), samples=samples
                )
                report = ErrorReport(
                    method=kind.value,
                    N=spec.N,
                    oversampling=lam,
                    param=T,
                    measured_max_error=max_abs_error(
                        r, reference, -1.0, 1.0, spec.S, evaluator
                    ),
                    bound=_frequency_bound(kind, config, T, f_norm),
                    grid_size=spec.S,
                )
                rows.append(
                    ResultRow.from_report(spec.name, kind.value, report, r.samples_used)
                )
    return rows


def _compare_methods(
    config: SamplingConfig, m: int
) -> list[tuple[str, ReconstructionMethod]]:
    T = config.rounded_L + m
    methods: list[tuple[str, ReconstructionMethod]] = [
        ("shannon", ClassicalShannon(T=T))
    ]
    for kind in FrequencyWindowKind:
        window = FrequencyWindow(kind=kind, config=config)
        methods.append((kind.value, FrequencyReg(window=window, T=T)))
    for time_kind in TimeWindowKind:
        w = TimeWindow(kind=time_kind, m=m, config=config)
        methods.append((time_kind.value, TimeReg(window=w)))
    return methods


def run_compare_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """Compare all reconstruction methods at equal sample counts.

    For each (lambda, m) the truncated sums use T = L + m, so every method
    reads the same 2L + 2m + 1 samples on [-1, 1]. ``param`` is m on every
    row. Time windows must beat every frequency window from m = 6 on when
    lambda >= 1; see ``check_time_window_advantage``.
    """
    f = BandlimitedTestFunction(kind=SignalKind.SHIFTED_PAIR, N=spec.N)
    f_norm = signal_l2_norm(f)
    reference = _reference(f)
    evaluator = GridEvaluator()
    rows: list[ResultRow] = []
    for lam in spec.lambdas:
        config = SamplingConfig(N=spec.N, oversampling=lam)
        reach = config.rounded_L + max(spec.m_values)
        samples = sample(f, config.L, -reach, reach)
        for m in spec.m_values:
            for tag, method in _compare_methods(config, m):
                r = Reconstructor(method=method, samples=samples)
                if isinstance(method, TimeReg):
                    bound = _time_bound(method.window, f_norm)
                elif isinstance(method, FrequencyReg):
                    bound = _frequency_bound(
                        method.window.kind, config, method.T, f_norm
                    )
                else:
                    bound = None
                report = ErrorReport(
                    method=tag,
                    N=spec.N,
                    oversampling=lam,
                    param=m,
                    measured_max_error=max_abs_error(
                        r, reference, -1.0, 1.0, spec.S, evaluator
                    ),
                    bound=bound,
                    grid_size=spec.S,
                )
                rows.append(
                    ResultRow.from_report(spec.name, tag, report, r.samples_used)
                )
    return check_time_window_advantage(rows)


def _bounded_noise_rows(spec: ExperimentSpec, w: TimeWindow) -> list[ResultRow]:
    grid = equispaced_grid(-1.0, 1.0, spec.S)
    weights = localized_weights(w, grid)
    lo, hi = weights.required_range()
    indices = np.arange(lo, hi + 1, dtype=np.int64)
    model = NoiseModel(
        kind=NoiseKind.BOUNDED_UNIFORM, epsilon=spec.epsilon, seed=spec.seed
    )
    draws = noise_vector(model, np.broadcast_to(indices, (spec.draws, indices.size)))
    L = w.config.L
    lam = w.config.oversampling
    deviation = max(
        float(np.max(np.abs(weights.apply(SampleSet.from_array(L, lo, row)))))
        for row in draws
    )
    if w.kind is TimeWindowKind.SINH:
        specific = robustness_bound_sinh(spec.epsilon, lam, w.m)
    else:
        specific = robustness_bound_ckb(spec.epsilon, lam, w.m)
    general = robustness_bound_general(
        spec.epsilon, L, time_window_ft(w, 0.0)
    )
    rows: list[ResultRow] = []
    for tag, bound in ((w.kind.value, specific), (f"{w.kind.value}-general", general)):
        report = ErrorReport(
            method=tag,
            N=spec.N,
            oversampling=lam,
            param=w.m,
            measured_max_error=deviation,
            bound=bound,
            grid_size=spec.S,
        )
        rows.append(ResultRow.from_report(spec.name, tag, report, indices.size))
    return rows


def _gaussian_variance_row(spec: ExperimentSpec, config: SamplingConfig) -> ResultRow:
    T = config.rounded_L
    indices = np.arange(-T, T + 1, dtype=np.int64)
    t = make_generator(spec.seed + 1).uniform(-1.0, 1.0, size=VARIANCE_POINTS)
    model = NoiseModel(
        kind=NoiseKind.ZERO_MEAN_GAUSSIAN, rho=spec.rho, seed=spec.seed
    )
    noise = noise_vector(model, np.broadcast_to(indices, (spec.trials, indices.size)))
    trials = (SampleSet.from_array(config.L, -T, trial) for trial in noise)
    errors = np.stack([np.asarray(stochastic_error(s, t)) for s in trials])
    variance = float(np.max(np.var(errors, axis=0, ddof=1)))
    report = ErrorReport(
        method="shannon-gaussian",
        N=spec.N,
        oversampling=config.oversampling,
        param=T,
        measured_max_error=variance,
        bound=VARIANCE_TOLERANCE * spec.rho**2,
        grid_size=VARIANCE_POINTS,
    )
    return ResultRow.from_report(spec.name, report.method, report, indices.size)


def run_robustness_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """Measure the effect of random sample noise on the reconstructions.

    Bounded uniform noise of amplitude epsilon is pushed through the
    localized formula of both time windows in ``draws`` independent draws;
    the largest deviation is checked against the window-specific and the
    general worst-case bound. Gaussian noise of deviation rho is pushed
    through the Shannon sum with T = L in ``trials`` trials; the largest
    empirical variance over random times is checked against 1.1 rho^2.
    ``max_error`` holds that variance on the ``shannon-gaussian`` rows.
    """
    rows: list[ResultRow] = []
    for lam in spec.lambdas:
        config = SamplingConfig(N=spec.N, oversampling=lam)
        for m in spec.m_values:
            for kind in TimeWindowKind:
                w = TimeWindow(kind=kind, m=m, config=config)
                rows.extend(_bounded_noise_rows(spec, w))
        rows.append(_gaussian_variance_row(spec, config))
    return rows


RUNNERS: dict[ExperimentName, Runner] = {
    ExperimentName.NORM: run_norm_experiment,
    ExperimentName.NONROBUSTNESS: run_nonrobustness_experiment,
    ExperimentName.FREQ_DECAY: run_freq_decay_experiment,
    ExperimentName.COMPARE: run_compare_experiment,
    ExperimentName.ROBUSTNESS: run_robustness_experiment,
}


def run_experiment(spec: ExperimentSpec) -> tuple[list[ResultRow], RunSummary]:
    """Run the experiment named by ``spec``.

    Args:
        spec: Validated experiment specification.

    Returns:
        The rows sorted by (window, oversampling, param) and the run summary.
    """
    log = logger.bind(experiment=spec.name.value)
    log.info("experiment_start", N=spec.N, lambdas=spec.lambdas, S=spec.S)
    rows = sorted(RUNNERS[spec.name](spec), key=lambda row: row.sort_key)
    for row in rows:
        if not row.passed:
            log.warning(
                "experiment_row_failed",
                window=row.window,
                oversampling=row.oversampling,
                param=row.param,
                measured=row.max_error,
                lower=row.lower,
                bound=row.bound,
            )
    checks = decay_checks(spec.name, rows)
    for check in checks:
        if not check.passed:
            log.warning(
                "experiment_slope_failed",
                window=check.window,
                oversampling=check.oversampling,
                slope=check.slope,
                low=check.low,
                high=check.high,
            )
    summary = RunSummary(
        experiment=spec.name,
        rows=len(rows),
        failures=sum(not row.passed for row in rows),
        slope_checks=tuple(checks),
        spec=spec,
    )
    log.info(
        "experiment_complete",
        rows=summary.rows,
        failures=summary.failures,
        passed=summary.passed,
    )
    return rows, summary
