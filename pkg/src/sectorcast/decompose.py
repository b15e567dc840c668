"""Classical additive decomposition of a monthly series.

observed = trend + seasonal + random, where

* trend is a 2x12 centered moving average (half weights on the endpoints),
  undefined for the first and last six months;
* the 12 seasonal indices are per-calendar-month means of the detrended
  values, re-centered so they sum to zero, and repeat identically every year;
* random is whatever remains wherever the trend is defined.

All arithmetic is done in full double precision; rounding for display is the
caller's business.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientDataError
from .series import MonthlySeries, PartialMonthlySeries


@dataclass(frozen=True)
class Decomposition:
    """The three additive components of a monthly series.

    ``seasonal_indices[0]`` is January's index.  ``trend`` and ``random``
    are absent exactly at the first six and last six offsets.
    """

    observed: MonthlySeries
    trend: PartialMonthlySeries
    seasonal_indices: tuple[float, ...]
    seasonal: MonthlySeries
    random: PartialMonthlySeries


def centered_ma(series: MonthlySeries, period: int = 12) -> PartialMonthlySeries:
    """Centered moving average with half weights at both window ends.

    For the default monthly period the window is t-6 .. t+6 with the two
    outermost values weighted 1/2, which leaves the first and last six
    offsets undefined.
    """
    if period < 2 or period % 2 != 0:
        raise ValueError(f"period must be a positive even integer, got {period}")
    n = len(series)
    if n < period + 1:
        raise InsufficientDataError(
            f"centered moving average needs at least {period + 1} months, got {n}"
        )
    half = period // 2
    weights = np.full(period + 1, 1.0)
    weights[0] = weights[-1] = 0.5
    weights /= period

    values = np.asarray(series.values)
    out: list[float | None] = [None] * n
    for t in range(half, n - half):
        out[t] = float(np.dot(weights, values[t - half:t + half + 1]))
    return PartialMonthlySeries(series.start, tuple(out))


def seasonal_indices(
    observed: MonthlySeries, trend: PartialMonthlySeries
) -> tuple[float, ...]:
    """Zero-sum additive seasonal indices, January first.

    Each raw index is the mean of (observed - trend) over every offset of
    that calendar month where the trend is defined; the twelve raw means are
    then centered on their own mean.
    """
    if trend.start != observed.start or len(trend) != len(observed):
        raise ValueError("trend must be aligned with the observed series")
    buckets: list[list[float]] = [[] for _ in range(12)]
    for offset in trend.present_offsets():
        month = observed.month_at(offset).month
        buckets[month - 1].append(observed.values[offset] - trend.values[offset])
    for month_index, bucket in enumerate(buckets):
        if not bucket:
            raise InsufficientDataError(
                f"no detrended observations for month {month_index + 1}"
            )
    raw = np.array([np.mean(bucket) for bucket in buckets])
    centered = raw - raw.mean()
    return tuple(float(v) for v in centered)


def decompose_additive(series: MonthlySeries) -> Decomposition:
    """Split a series into trend, tiled seasonal and random components."""
    if len(series) < 24:
        raise InsufficientDataError(
            f"decomposition needs at least 24 months, got {len(series)}"
        )
    trend = centered_ma(series)
    indices = seasonal_indices(series, trend)
    seasonal = MonthlySeries(
        series.start,
        tuple(indices[series.month_at(i).month - 1] for i in range(len(series))),
    )
    random: list[float | None] = [
        None if trend.values[i] is None
        else series.values[i] - trend.values[i] - seasonal.values[i]
        for i in range(len(series))
    ]
    return Decomposition(
        observed=series,
        trend=trend,
        seasonal_indices=indices,
        seasonal=seasonal,
        random=PartialMonthlySeries(series.start, tuple(random)),
    )
