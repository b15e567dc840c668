"""Additive Holt-Winters smoothing: level + linear trend + 12-month seasonal.

State updates follow the standard additive recursions

    level_t = alpha * (y_t - s_{t-12}) + (1 - alpha) * (level_{t-1} + slope_{t-1})
    slope_t = beta * (level_t - level_{t-1}) + (1 - beta) * slope_{t-1}
    s_t     = gamma * (y_t - level_t) + (1 - gamma) * s_{t-12}

with the one-step-ahead fit ``level_{t-1} + slope_{t-1} + s_{t-12}``.  The
first 24 observations are reserved for initializing the state (classical
seasonal indices plus an ordinary least-squares line through the
deseasonalized values); filtering and the SSE start right after that window.
Smoothing constants are estimated by minimizing the one-step SSE over the
closed cube [0, 1]^3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decompose import decompose_additive
from .errors import InsufficientDataError
from .optimize import BoundedProblem, multistart_minimize
from .series import CalendarMonth, MonthlySeries, PartialMonthlySeries

INIT_WINDOW = 24


@dataclass(frozen=True)
class HWParams:
    """Smoothing constants, each in [0, 1]."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        for name, value in (("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")


@dataclass(frozen=True)
class HWState:
    """Smoothing state: level, per-month slope, and 12 seasonal terms.

    ``seasonal[0]`` is the January term, in index points like the level.
    """

    level: float
    slope: float
    seasonal: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.seasonal) != 12:
            raise ValueError(f"seasonal state needs 12 values, got {len(self.seasonal)}")


@dataclass(frozen=True)
class HWModel:
    params: HWParams
    initial_state: HWState
    final_state: HWState
    fitted: PartialMonthlySeries
    sse: float
    training_span: tuple[CalendarMonth, CalendarMonth]


def hw_initial_state(series: MonthlySeries) -> HWState:
    """State implied by the first 24 observations.

    Seasonal terms come from a classical decomposition of the window; level
    and slope are the value and gradient, at the window's last month, of an
    OLS line through the deseasonalized observations.
    """
    if len(series) < INIT_WINDOW:
        raise InsufficientDataError(
            f"initialization needs {INIT_WINDOW} months, got {len(series)}"
        )
    window = series.head(INIT_WINDOW)
    indices = decompose_additive(window).seasonal_indices
    deseasonalized = np.array([
        window.values[t] - indices[window.month_at(t).month - 1]
        for t in range(INIT_WINDOW)
    ])
    t = np.arange(INIT_WINDOW, dtype=float)
    slope, intercept = np.polyfit(t, deseasonalized, 1)
    level = intercept + slope * (INIT_WINDOW - 1)
    return HWState(level=float(level), slope=float(slope), seasonal=indices)


def hw_filter(
    series: MonthlySeries, params: HWParams, init: HWState
) -> tuple[PartialMonthlySeries, float, HWState]:
    """Run the recursions over offsets 24.. and accumulate the one-step SSE."""
    n = len(series)
    if n < INIT_WINDOW + 1:
        raise InsufficientDataError(
            f"filtering needs more than {INIT_WINDOW} months, got {n}"
        )
    alpha, beta, gamma = params.alpha, params.beta, params.gamma
    values = series.values
    start_month = series.start.month - 1
    level = init.level
    slope = init.slope
    seasonal = list(init.seasonal)

    fitted: list[float | None] = [None] * INIT_WINDOW
    sse = 0.0
    for t in range(INIT_WINDOW, n):
        m = (start_month + t) % 12
        one_step = level + slope + seasonal[m]
        fitted.append(one_step)
        err = values[t] - one_step
        sse += err * err
        previous_level = level
        level = alpha * (values[t] - seasonal[m]) + (1.0 - alpha) * (level + slope)
        slope = beta * (level - previous_level) + (1.0 - beta) * slope
        seasonal[m] = gamma * (values[t] - level) + (1.0 - gamma) * seasonal[m]

    final = HWState(level=level, slope=slope, seasonal=tuple(seasonal))
    return PartialMonthlySeries(series.start, tuple(fitted)), sse, final


def hw_fit(series: MonthlySeries) -> HWModel:
    """Estimate smoothing constants by one-step SSE over [0, 1]^3."""
    if len(series) < INIT_WINDOW + 12:
        raise InsufficientDataError(
            f"fitting needs at least {INIT_WINDOW + 12} months, got {len(series)}"
        )
    init = hw_initial_state(series)

    def objective(x: np.ndarray) -> float:
        params = HWParams(alpha=float(x[0]), beta=float(x[1]), gamma=float(x[2]))
        return hw_filter(series, params, init)[1]

    problem = BoundedProblem(lower=(0.0, 0.0, 0.0), upper=(1.0, 1.0, 1.0), objective=objective)
    result = multistart_minimize(problem, grid_points_per_dim=3, tol=1e-6, max_evals=1500)
    params = HWParams(*result.argmin)
    fitted, sse, final = hw_filter(series, params, init)
    return HWModel(
        params=params,
        initial_state=init,
        final_state=final,
        fitted=fitted,
        sse=sse,
        training_span=(series.start, series.end),
    )


def hw_forecast(model: HWModel, horizon: int) -> MonthlySeries:
    """Point forecasts from the final state, starting right after training."""
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    last = model.training_span[1]
    level = model.final_state.level
    slope = model.final_state.slope
    seasonal = model.final_state.seasonal
    values = []
    for h in range(1, horizon + 1):
        month = last.advanced(h)
        values.append(level + h * slope + seasonal[month.month - 1])
    return MonthlySeries(last.advanced(1), tuple(values))
