"""The six evaluation protocols over a six-year monthly series.

Year boundaries come from the series span: the first five years train, the
sixth is held out.

1. Holt-Winters fitted once, all twelve test months forecast at once.
2. Holt-Winters refit each month on the expanding window, one-step forecasts.
3. Trend-component forecasting: the training window's trend is itself
   forecast with Holt-Winters, seasonal indices are added back, and the
   result is compared against the trend+seasonal aggregate of the full-span
   decomposition (first six test months only, since the full-span trend stops
   there).
4. ARIMA with automatic order selection, twelve months ahead.
5. ARIMA reselected and refit each month, one-step forecasts.
6. Structural comparison: trend+seasonal aggregates from the years-1..5 and
   years-2..6 windows over the 36 months where both trends exist.

Forecast errors are signed percentages, (forecast - actual) / actual * 100;
summaries are taken over their absolute values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arima import arima_forecast, auto_order, fit_arima
from .decompose import decompose_additive
from .errors import InsufficientDataError
from .holtwinters import hw_fit, hw_forecast
from .series import CalendarMonth, MonthlySeries, PartialMonthlySeries

SPAN_MONTHS = 72
TRAIN_MONTHS = 60


@dataclass(frozen=True)
class ForecastRecord:
    month: CalendarMonth
    actual: float
    forecast: float
    signed_pct_error: float


@dataclass(frozen=True)
class MethodSummary:
    """Statistics over absolute percentage errors."""

    min_abs: float
    max_abs: float
    mean_abs: float
    sd_abs: float


@dataclass(frozen=True)
class StructuralRow:
    """Trend+seasonal aggregates of two windows for one month."""

    month: CalendarMonth
    trend_a: float
    seasonal_a: float
    sum_a: float
    trend_b: float
    seasonal_b: float
    sum_b: float
    pct_variation: float


def pct_error(actual: float, forecast: float) -> float:
    """Signed percentage error of a forecast."""
    if actual == 0:
        raise ZeroDivisionError("percentage error undefined for actual = 0")
    return (forecast - actual) / actual * 100.0


def _check_span(full: MonthlySeries) -> None:
    if len(full) != SPAN_MONTHS:
        raise InsufficientDataError(
            f"evaluation needs a {SPAN_MONTHS}-month series (six years), got {len(full)}"
        )


def _record(month: CalendarMonth, actual: float, forecast: float) -> ForecastRecord:
    return ForecastRecord(
        month=month,
        actual=actual,
        forecast=forecast,
        signed_pct_error=pct_error(actual, forecast),
    )


def run_method1(full: MonthlySeries) -> list[ForecastRecord]:
    """Fixed-origin Holt-Winters, horizon 12."""
    _check_span(full)
    train = full.head(TRAIN_MONTHS)
    forecasts = hw_forecast(hw_fit(train), 12)
    return [
        _record(forecasts.month_at(i), full.values[TRAIN_MONTHS + i], forecasts.values[i])
        for i in range(12)
    ]


def run_method2(full: MonthlySeries) -> list[ForecastRecord]:
    """Rolling-origin Holt-Winters, horizon 1."""
    _check_span(full)
    records = []
    for i in range(12):
        train = full.head(TRAIN_MONTHS + i)
        forecast = hw_forecast(hw_fit(train), 1)
        records.append(_record(forecast.start, full.values[TRAIN_MONTHS + i], forecast.values[0]))
    return records


def _trend_series(trend: PartialMonthlySeries) -> MonthlySeries:
    offsets = trend.present_offsets()
    values = tuple(trend.values[i] for i in offsets)
    return MonthlySeries(trend.month_at(offsets[0]), values)


def run_method3(full: MonthlySeries) -> list[ForecastRecord]:
    """Forecast the training window's trend, add its seasonal indices, and
    compare with the full-span trend+seasonal aggregate (six months)."""
    _check_span(full)
    train = full.head(TRAIN_MONTHS)
    train_parts = decompose_additive(train)
    trend = _trend_series(train_parts.trend)

    # Twelve trend steps from the last defined trend month; the final six
    # line up with the first six test months.
    trend_forecast = hw_forecast(hw_fit(trend), 12)
    full_parts = decompose_additive(full)

    records = []
    for i in range(6):
        month = trend_forecast.month_at(6 + i)
        index = month.month - 1
        forecast_sum = trend_forecast.values[6 + i] + train_parts.seasonal_indices[index]
        actual_trend = full_parts.trend.value_at(month)
        assert actual_trend is not None
        actual_sum = actual_trend + full_parts.seasonal_indices[index]
        records.append(_record(month, actual_sum, forecast_sum))
    return records


def run_method4(full: MonthlySeries) -> list[ForecastRecord]:
    """Fixed-origin ARIMA with automatic order selection, horizon 12."""
    _check_span(full)
    train = full.head(TRAIN_MONTHS)
    model = fit_arima(train, auto_order(train))
    forecasts = arima_forecast(model, 12)
    return [
        _record(forecasts.month_at(i), full.values[TRAIN_MONTHS + i], forecasts.values[i])
        for i in range(12)
    ]


def run_method5(full: MonthlySeries) -> list[ForecastRecord]:
    """Rolling-origin ARIMA, order reselected every month, horizon 1."""
    _check_span(full)
    records = []
    for i in range(12):
        train = full.head(TRAIN_MONTHS + i)
        model = fit_arima(train, auto_order(train))
        forecast = arima_forecast(model, 1)
        records.append(_record(forecast.start, full.values[TRAIN_MONTHS + i], forecast.values[0]))
    return records


def run_method6(full: MonthlySeries) -> list[StructuralRow]:
    """Compare trend+seasonal aggregates of the years-1..5 and years-2..6
    windows over the overlap where both trends are defined."""
    _check_span(full)
    window_a = full.head(TRAIN_MONTHS)
    window_b = full.slice(full.month_at(12), full.end)
    parts_a = decompose_additive(window_a)
    parts_b = decompose_additive(window_b)

    rows = []
    first = window_b.month_at(6)          # first trend month of the later window
    last = window_a.month_at(TRAIN_MONTHS - 7)  # last trend month of the earlier window
    month = first
    while month <= last:
        index = month.month - 1
        trend_a = parts_a.trend.value_at(month)
        trend_b = parts_b.trend.value_at(month)
        assert trend_a is not None and trend_b is not None
        seasonal_a = parts_a.seasonal_indices[index]
        seasonal_b = parts_b.seasonal_indices[index]
        sum_a = trend_a + seasonal_a
        sum_b = trend_b + seasonal_b
        rows.append(
            StructuralRow(
                month=month,
                trend_a=trend_a,
                seasonal_a=seasonal_a,
                sum_a=sum_a,
                trend_b=trend_b,
                seasonal_b=seasonal_b,
                sum_b=sum_b,
                pct_variation=(sum_b - sum_a) / sum_a * 100.0,
            )
        )
        month = month.advanced(1)
    return rows


def summarize(records: list[ForecastRecord]) -> MethodSummary:
    """Min/max/mean/sd of the absolute percentage errors (sample sd)."""
    if len(records) < 2:
        raise ValueError(f"summary needs at least 2 records, got {len(records)}")
    magnitudes = [abs(r.signed_pct_error) for r in records]
    n = len(magnitudes)
    mean = sum(magnitudes) / n
    variance = sum((m - mean) ** 2 for m in magnitudes) / (n - 1)
    return MethodSummary(
        min_abs=min(magnitudes),
        max_abs=max(magnitudes),
        mean_abs=mean,
        sd_abs=math.sqrt(variance),
    )
