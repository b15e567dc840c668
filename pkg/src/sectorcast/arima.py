"""ARIMA(p,d,q) estimation by conditional sum of squares, AIC order search,
and forecasting.

The series is differenced d times; for d = 0 the working series is centered
on its sample mean (restored in forecasts), for d >= 1 there is no constant
or drift term.  Innovations follow the recursion

    e_t = w_t - sum_i phi_i * w_{t-i} - sum_j theta_j * e_{t-j}

with zero pre-sample values, and the objective sums e_t^2 over
t = max(p,q)+1 .. n.  Coefficients are constrained to [-0.99, 0.99] each,
which keeps the recursions from exploding without any root checking.

AIC is n*ln(SSE/n) + 2*(p+q+1) with n the differenced length; the automatic
order search scans the full p in 0..5, d in 0..2, q in 0..5 grid and keeps
the lowest AIC, breaking ties toward smaller p+q, then d, then p.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.signal import lfilter

from .errors import InsufficientDataError
from .optimize import BoundedProblem, OptimResult, minimize_bounded, multistart_minimize
from .series import CalendarMonth, MonthlySeries, PartialMonthlySeries

COEFF_BOUND = 0.99
MAX_P = 5
MAX_D = 2
MAX_Q = 5

# The order grid makes up to 108 fits per automatic search, and the rolling
# evaluation protocols refit that grid every month, so per-fit effort has to
# stay small.  Models with one or two coefficients get a full 3-point grid of
# starts; larger ones start once from the all-zero (white noise) point, which
# is the standard conditioning point for CSS.
def _grid_points(dim: int) -> int:
    return 3 if dim <= 2 else 1


def _eval_budget(dim: int) -> int:
    return 700 if dim <= 2 else 250 * dim


@dataclass(frozen=True)
class ArimaOrder:
    p: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if not (0 <= self.p <= MAX_P and 0 <= self.d <= MAX_D and 0 <= self.q <= MAX_Q):
            raise ValueError(
                f"order must satisfy p<={MAX_P}, d<={MAX_D}, q<={MAX_Q}, "
                f"got ({self.p},{self.d},{self.q})"
            )


@dataclass(frozen=True)
class ArimaModel:
    """A fitted model plus everything needed to forecast from it.

    ``residuals`` aligns with the training calendar; the first
    d + max(p,q) months are absent (their innovations do not enter the
    objective).  ``last_values`` holds the trailing d + max(p,q) training
    observations on the original scale.  ``mean`` is the sample mean removed
    from the working series when d = 0, else 0.
    """

    order: ArimaOrder
    ar: tuple[float, ...]
    ma: tuple[float, ...]
    mean: float
    sigma2: float
    aic: float
    residuals: PartialMonthlySeries
    training_span: tuple[CalendarMonth, CalendarMonth]
    last_values: tuple[float, ...]


def difference(series: MonthlySeries, d: int) -> MonthlySeries:
    """Apply the first-difference operator d times."""
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    if len(series) <= d:
        raise InsufficientDataError(f"cannot difference {len(series)} months {d} times")
    if d == 0:
        return series
    values = np.diff(np.asarray(series.values), n=d)
    return MonthlySeries(series.start.advanced(d), tuple(float(v) for v in values))


def integrate_forecasts(
    diff_forecasts: Sequence[float], tail: Sequence[float], d: int
) -> list[float]:
    """Undo d rounds of differencing on a block of forecasts.

    ``tail`` must hold the last d values of the undifferenced training
    series, oldest first.
    """
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    if len(tail) != d:
        raise ValueError(f"tail must hold exactly d={d} values, got {len(tail)}")
    forecasts = [float(v) for v in diff_forecasts]
    tail_arr = np.asarray(tail, dtype=float)
    for level in range(d, 0, -1):
        base = float(np.diff(tail_arr, n=level - 1)[-1]) if level > 1 else float(tail_arr[-1])
        accumulated = []
        running = base
        for v in forecasts:
            running += v
            accumulated.append(running)
        forecasts = accumulated
    return forecasts


def _innovations(w: np.ndarray, ar: Sequence[float], ma: Sequence[float]) -> np.ndarray:
    # e_t = w_t - sum phi_i w_{t-i} - sum theta_j e_{t-j}, zero pre-sample:
    # exactly the linear difference equation lfilter(b, a) solves.
    b = np.empty(len(ar) + 1)
    b[0] = 1.0
    if len(ar):
        b[1:] = np.negative(ar)
    a = np.empty(len(ma) + 1)
    a[0] = 1.0
    if len(ma):
        a[1:] = ma
    return lfilter(b, a, w)


def css_objective(
    diffed: MonthlySeries,
    ar: Sequence[float],
    ma: Sequence[float],
    *,
    demean: bool = True,
) -> float:
    """Conditional sum of squared innovations for the given coefficients.

    The working series is centered on its sample mean unless ``demean`` is
    false (model fitting disables it for d >= 1, where no constant term is
    allowed).  The sum skips the first max(p,q) innovations.
    """
    w = np.asarray(diffed.values, dtype=float)
    if demean:
        w = w - w.mean()
    e = _innovations(w, ar, ma)
    skip = max(len(ar), len(ma))
    tail = e[skip:]
    return float(tail @ tail)


def _css_on_values(w: np.ndarray, ar: np.ndarray, ma: np.ndarray, skip: int) -> float:
    e = _innovations(w, ar, ma)
    tail = e[skip:]
    return float(tail @ tail)


def fit_arima(
    series: MonthlySeries,
    order: ArimaOrder,
    *,
    warm_starts: Sequence[Sequence[float]] = (),
) -> ArimaModel:
    """Estimate coefficients for a fixed order.

    ``warm_starts`` adds extra optimizer starting points (a nested model's
    optimum, zero-padded, guarantees the larger model never fits worse).
    """
    p, d, q = order.p, order.d, order.q
    diffed = difference(series, d)
    n = len(diffed)
    if n < 10 + p + q:
        raise InsufficientDataError(
            f"order ({p},{d},{q}) needs at least {10 + p + q} differenced values, got {n}"
        )
    w = np.asarray(diffed.values, dtype=float)
    mean = float(w.mean()) if d == 0 else 0.0
    wc = w - mean
    skip = max(p, q)
    dim = p + q

    if dim == 0:
        ar: tuple[float, ...] = ()
        ma: tuple[float, ...] = ()
        sse = _css_on_values(wc, np.empty(0), np.empty(0), 0)
    else:
        def objective(x: np.ndarray) -> float:
            return _css_on_values(wc, x[:p], x[p:], skip)

        problem = BoundedProblem(
            lower=(-COEFF_BOUND,) * dim,
            upper=(COEFF_BOUND,) * dim,
            objective=objective,
        )
        scale = float(wc @ wc)
        tol = 1e-9 * (1.0 + scale)
        budget = _eval_budget(dim)
        clipped_starts = [
            tuple(np.clip(np.asarray(s, dtype=float), -COEFF_BOUND, COEFF_BOUND))
            for s in warm_starts
        ]
        result = multistart_minimize(
            problem,
            grid_points_per_dim=_grid_points(dim),
            tol=tol,
            max_evals=budget,
            extra_starts=clipped_starts,
        )
        coeffs = np.asarray(result.argmin)
        ar = tuple(float(v) for v in coeffs[:p])
        ma = tuple(float(v) for v in coeffs[p:])
        sse = result.value

    sigma2 = sse / n
    aic = n * math.log(sigma2) + 2 * (p + q + 1) if sigma2 > 0.0 else float("-inf")

    innov = _innovations(wc, ar, ma)
    residual_values: list[float | None] = [None] * (d + skip) + [
        float(v) for v in innov[skip:]
    ]
    residuals = PartialMonthlySeries(series.start, tuple(residual_values))
    tail_length = d + skip
    last_values = tuple(series.values[len(series) - tail_length:]) if tail_length else ()
    return ArimaModel(
        order=order,
        ar=ar,
        ma=ma,
        mean=mean,
        sigma2=sigma2,
        aic=aic,
        residuals=residuals,
        training_span=(series.start, series.end),
        last_values=last_values,
    )


def auto_order(series: MonthlySeries) -> ArimaOrder:
    """Lowest-AIC order over the full (p, d, q) grid."""
    if len(series) < 30:
        raise InsufficientDataError(
            f"automatic order selection needs at least 30 months, got {len(series)}"
        )
    best_key: tuple[float, int, int, int] | None = None
    best_order: ArimaOrder | None = None
    for d in range(MAX_D + 1):
        n = len(series) - d
        for p, q in itertools.product(range(MAX_P + 1), range(MAX_Q + 1)):
            if n < 10 + p + q:
                continue
            model = fit_arima(series, ArimaOrder(p, d, q))
            key = (model.aic, p + q, d, p)
            if best_key is None or key < best_key:
                best_key = key
                best_order = ArimaOrder(p, d, q)
    if best_order is None:
        raise InsufficientDataError("no feasible order for this series")
    return best_order


def arima_forecast(model: ArimaModel, horizon: int) -> MonthlySeries:
    """Point forecasts with future innovations fixed at zero."""
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    p, d, q = model.order.p, model.order.d, model.order.q

    tail = np.asarray(model.last_values, dtype=float)
    w_tail = np.diff(tail, n=d) if d else tail.copy()
    centered_lags = list(w_tail - model.mean)

    residual_tail = [v for v in model.residuals.values if v is not None]
    innovation_lags = list(residual_tail[len(residual_tail) - q:]) if q else []

    diff_forecasts = []
    for _ in range(horizon):
        value = 0.0
        for i in range(p):
            value += model.ar[i] * centered_lags[-1 - i]
        for j in range(q):
            value += model.ma[j] * innovation_lags[-1 - j]
        centered_lags.append(value)
        innovation_lags.append(0.0)
        diff_forecasts.append(value + model.mean)

    original_tail = model.last_values[len(model.last_values) - d:] if d else ()
    forecasts = integrate_forecasts(diff_forecasts, original_tail, d)
    start = model.training_span[1].advanced(1)
    return MonthlySeries(start, tuple(forecasts))
