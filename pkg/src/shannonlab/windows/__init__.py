"""Time and frequency window functions with both dual representations.

Example:
    >>> from shannonlab.windows import SamplingConfig, TimeWindow, time_window_eval
    >>> cfg = SamplingConfig(N=256, oversampling=1.0)
    >>> w = TimeWindow(kind="ckb", m=6, config=cfg)
    >>> time_window_eval(w, w.support)
    0.0
"""

from shannonlab.windows.errors import WindowError, WindowParameterError
from shannonlab.windows.frequency import (
    freq_window_hat,
    freq_window_time,
    lin_window_decay_bound,
)
from shannonlab.windows.models import (
    FrequencyWindow,
    FrequencyWindowKind,
    SamplingConfig,
    TimeWindow,
    TimeWindowKind,
)
from shannonlab.windows.time import (
    check_window_samples,
    time_window_eval,
    time_window_ft,
    time_window_regularized_sinc,
    validate_phi_membership,
    window_integral,
)

__all__ = [
    "FrequencyWindow",
    "FrequencyWindowKind",
    "SamplingConfig",
    "TimeWindow",
    "TimeWindowKind",
    "WindowError",
    "WindowParameterError",
    "check_window_samples",
    "freq_window_hat",
    "freq_window_time",
    "lin_window_decay_bound",
    "time_window_eval",
    "time_window_ft",
    "time_window_regularized_sinc",
    "validate_phi_membership",
    "window_integral",
]
