"""Decomposition and forecasting toolkit for monthly market index series."""

from .arima import (
    ArimaModel,
    ArimaOrder,
    arima_forecast,
    auto_order,
    css_objective,
    difference,
    fit_arima,
    integrate_forecasts,
)
from .decompose import Decomposition, centered_ma, decompose_additive, seasonal_indices
from .errors import DataError, GapError, InsufficientDataError, ParseError
from .evaluation import (
    ForecastRecord,
    MethodSummary,
    StructuralRow,
    pct_error,
    run_method1,
    run_method2,
    run_method3,
    run_method4,
    run_method5,
    run_method6,
    summarize,
)
from .holtwinters import HWModel, HWParams, HWState, hw_filter, hw_fit, hw_forecast, hw_initial_state
from .ingest import (
    DailyObservation,
    aggregate_monthly,
    golden_auto_series,
    load_daily_csv,
    load_monthly_csv,
)
from .optimize import BoundedProblem, OptimResult, minimize_bounded, multistart_minimize
from .series import CalendarMonth, MonthlySeries, PartialMonthlySeries

__version__ = "0.1.0"

__all__ = [
    "ArimaModel",
    "ArimaOrder",
    "BoundedProblem",
    "CalendarMonth",
    "DailyObservation",
    "DataError",
    "Decomposition",
    "ForecastRecord",
    "GapError",
    "HWModel",
    "HWParams",
    "HWState",
    "InsufficientDataError",
    "MethodSummary",
    "MonthlySeries",
    "OptimResult",
    "ParseError",
    "PartialMonthlySeries",
    "StructuralRow",
    "aggregate_monthly",
    "arima_forecast",
    "auto_order",
    "centered_ma",
    "css_objective",
    "decompose_additive",
    "difference",
    "fit_arima",
    "golden_auto_series",
    "hw_filter",
    "hw_fit",
    "hw_forecast",
    "hw_initial_state",
    "integrate_forecasts",
    "load_daily_csv",
    "load_monthly_csv",
    "minimize_bounded",
    "multistart_minimize",
    "pct_error",
    "run_method1",
    "run_method2",
    "run_method3",
    "run_method4",
    "run_method5",
    "run_method6",
    "seasonal_indices",
    "summarize",
]
