"""Command-line interface.

Four subcommands, all deterministic and stream-friendly:

* ``ingest``     daily CSV -> monthly means CSV (``year,month,value``)
* ``decompose``  monthly series -> ``year,month,aggregate,trend,seasonal,random``
                 with empty cells where trend/random are undefined
* ``forecast``   fit one engine (``hw`` or ``arima``) and emit point forecasts;
                 with ``--train-end`` the held-out actuals and percentage
                 errors are added
* ``evaluate``   run one of the six evaluation protocols (or all of them plus
                 the per-method error summary) on a six-year series

Reports go to stdout or ``--output``; diagnostics go to stderr.  ``--format
json`` swaps the CSV layouts for JSON documents with the same content, and
``--round`` switches to presentation rounding (integers for index levels,
two decimals for percentages).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .arima import arima_forecast, auto_order, fit_arima
from .decompose import Decomposition, decompose_additive
from .errors import DataError, InsufficientDataError, ParseError
from .evaluation import (
    ForecastRecord,
    StructuralRow,
    run_method1,
    run_method2,
    run_method3,
    run_method4,
    run_method5,
    run_method6,
    summarize,
)
from .holtwinters import hw_fit, hw_forecast
from .ingest import aggregate_monthly, golden_auto_series, load_daily_csv, load_monthly_csv
from .series import CalendarMonth, MonthlySeries

_METHOD_RUNNERS = {
    1: run_method1,
    2: run_method2,
    3: run_method3,
    4: run_method4,
    5: run_method5,
    6: run_method6,
}


def round_half_away_from_zero(value: float) -> int:
    """Round to the nearest integer, halves going away from zero."""
    return int(math.floor(value + 0.5)) if value >= 0 else int(math.ceil(value - 0.5))


def _fmt(value: float | None, rounded: bool, pct: bool = False) -> str:
    if value is None:
        return ""
    if rounded:
        return f"{value:.2f}" if pct else str(round_half_away_from_zero(value))
    return f"{value:.6f}"


def _jnum(value: float | None, rounded: bool, pct: bool = False):
    if value is None or not rounded:
        return value
    return round(value, 2) if pct else round_half_away_from_zero(value)


def render_monthly_csv(series: MonthlySeries, rounded: bool) -> str:
    lines = ["year,month,value"]
    for i, value in enumerate(series.values):
        month = series.month_at(i)
        lines.append(f"{month.year},{month.month},{_fmt(value, rounded)}")
    return "\n".join(lines) + "\n"


def render_monthly_json(series: MonthlySeries, rounded: bool) -> str:
    doc = {
        "months": [str(series.month_at(i)) for i in range(len(series))],
        "value": [_jnum(v, rounded) for v in series.values],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_decomposition_csv(parts: Decomposition, rounded: bool) -> str:
    lines = ["year,month,aggregate,trend,seasonal,random"]
    for i in range(len(parts.observed)):
        month = parts.observed.month_at(i)
        lines.append(
            ",".join(
                [
                    str(month.year),
                    str(month.month),
                    _fmt(parts.observed.values[i], rounded),
                    _fmt(parts.trend.values[i], rounded),
                    _fmt(parts.seasonal.values[i], rounded),
                    _fmt(parts.random.values[i], rounded),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def render_decomposition_json(parts: Decomposition, rounded: bool) -> str:
    doc = {
        "start": str(parts.observed.start),
        "aggregate": [_jnum(v, rounded) for v in parts.observed.values],
        "trend": [_jnum(v, rounded) for v in parts.trend.values],
        "seasonal": [_jnum(v, rounded) for v in parts.seasonal.values],
        "random": [_jnum(v, rounded) for v in parts.random.values],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_forecast_csv(
    forecasts: MonthlySeries,
    actuals: list[float | None] | None,
    errors: list[float | None] | None,
    rounded: bool,
) -> str:
    with_actuals = actuals is not None
    lines = ["year,month,forecast,actual,pct_error" if with_actuals else "year,month,forecast"]
    for i, value in enumerate(forecasts.values):
        month = forecasts.month_at(i)
        row = [str(month.year), str(month.month), _fmt(value, rounded)]
        if with_actuals:
            assert errors is not None
            row.append(_fmt(actuals[i], rounded))
            row.append(_fmt(errors[i], rounded, pct=True))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def render_forecast_json(
    forecasts: MonthlySeries,
    actuals: list[float | None] | None,
    errors: list[float | None] | None,
    rounded: bool,
) -> str:
    doc: dict = {
        "months": [str(forecasts.month_at(i)) for i in range(len(forecasts))],
        "forecast": [_jnum(v, rounded) for v in forecasts.values],
    }
    if actuals is not None:
        assert errors is not None
        doc["actual"] = [_jnum(v, rounded) for v in actuals]
        doc["pct_error"] = [_jnum(v, rounded, pct=True) for v in errors]
    return json.dumps(doc, indent=2) + "\n"


def _record_lines(records: list[ForecastRecord], rounded: bool) -> list[str]:
    lines = ["year,month,actual,forecast,pct_error"]
    for r in records:
        lines.append(
            ",".join(
                [
                    str(r.month.year),
                    str(r.month.month),
                    _fmt(r.actual, rounded),
                    _fmt(r.forecast, rounded),
                    _fmt(r.signed_pct_error, rounded, pct=True),
                ]
            )
        )
    return lines


def _structural_lines(rows: list[StructuralRow], rounded: bool) -> list[str]:
    lines = ["year,month,trend_a,seasonal_a,sum_a,trend_b,seasonal_b,sum_b,pct_variation"]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.month.year),
                    str(r.month.month),
                    _fmt(r.trend_a, rounded),
                    _fmt(r.seasonal_a, rounded),
                    _fmt(r.sum_a, rounded),
                    _fmt(r.trend_b, rounded),
                    _fmt(r.seasonal_b, rounded),
                    _fmt(r.sum_b, rounded),
                    _fmt(r.pct_variation, rounded, pct=True),
                ]
            )
        )
    return lines


def _record_doc(records: list[ForecastRecord], rounded: bool) -> list[dict]:
    return [
        {
            "month": str(r.month),
            "actual": _jnum(r.actual, rounded),
            "forecast": _jnum(r.forecast, rounded),
            "pct_error": _jnum(r.signed_pct_error, rounded, pct=True),
        }
        for r in records
    ]


def _structural_doc(rows: list[StructuralRow], rounded: bool) -> list[dict]:
    return [
        {
            "month": str(r.month),
            "trend_a": _jnum(r.trend_a, rounded),
            "seasonal_a": _jnum(r.seasonal_a, rounded),
            "sum_a": _jnum(r.sum_a, rounded),
            "trend_b": _jnum(r.trend_b, rounded),
            "seasonal_b": _jnum(r.seasonal_b, rounded),
            "sum_b": _jnum(r.sum_b, rounded),
            "pct_variation": _jnum(r.pct_variation, rounded, pct=True),
        }
        for r in rows
    ]


def render_method_csv(method: int, result, rounded: bool) -> str:
    lines = _structural_lines(result, rounded) if method == 6 else _record_lines(result, rounded)
    return "\n".join(lines) + "\n"


def render_method_json(method: int, result, rounded: bool) -> str:
    if method == 6:
        doc = {"method": 6, "rows": _structural_doc(result, rounded)}
    else:
        doc = {"method": method, "records": _record_doc(result, rounded)}
    return json.dumps(doc, indent=2) + "\n"


def _summary_rows(results: dict[int, list], rounded: bool) -> list[dict]:
    rows = []
    for method in range(1, 6):
        s = summarize(results[method])
        rows.append(
            {
                "method": method,
                "min_abs": _jnum(s.min_abs, rounded, pct=True),
                "max_abs": _jnum(s.max_abs, rounded, pct=True),
                "mean_abs": _jnum(s.mean_abs, rounded, pct=True),
                "sd_abs": _jnum(s.sd_abs, rounded, pct=True),
            }
        )
    return rows


def render_all_csv(results: dict[int, list], rounded: bool) -> str:
    blocks = []
    for method in range(1, 7):
        lines = [f"method,{method}"]
        if method == 6:
            lines.extend(_structural_lines(results[method], rounded))
        else:
            lines.extend(_record_lines(results[method], rounded))
        blocks.append("\n".join(lines))
    summary_lines = ["summary", "method,min_abs,max_abs,mean_abs,sd_abs"]
    for method in range(1, 6):
        s = summarize(results[method])
        summary_lines.append(
            ",".join(
                [
                    str(method),
                    _fmt(s.min_abs, rounded, pct=True),
                    _fmt(s.max_abs, rounded, pct=True),
                    _fmt(s.mean_abs, rounded, pct=True),
                    _fmt(s.sd_abs, rounded, pct=True),
                ]
            )
        )
    blocks.append("\n".join(summary_lines))
    return "\n\n".join(blocks) + "\n"


def render_all_json(results: dict[int, list], rounded: bool) -> str:
    methods: dict[str, dict] = {}
    for method in range(1, 7):
        if method == 6:
            methods[str(method)] = {"rows": _structural_doc(results[method], rounded)}
        else:
            methods[str(method)] = {"records": _record_doc(results[method], rounded)}
    doc = {"methods": methods, "summary": _summary_rows(results, rounded)}
    return json.dumps(doc, indent=2) + "\n"


def _load_series(args: argparse.Namespace) -> MonthlySeries:
    if args.golden:
        return golden_auto_series()
    return load_monthly_csv(args.input)


def _cmd_ingest(args: argparse.Namespace) -> str:
    monthly = aggregate_monthly(load_daily_csv(args.input))
    if args.format == "json":
        return render_monthly_json(monthly, args.round)
    return render_monthly_csv(monthly, args.round)


def _cmd_decompose(args: argparse.Namespace) -> str:
    parts = decompose_additive(_load_series(args))
    if args.format == "json":
        return render_decomposition_json(parts, args.round)
    return render_decomposition_csv(parts, args.round)


def _cmd_forecast(args: argparse.Namespace) -> str:
    series = _load_series(args)
    if args.train_end is not None:
        train = series.slice(series.start, args.train_end)
    else:
        train = series

    if args.engine == "hw":
        forecasts = hw_forecast(hw_fit(train), args.horizon)
    else:
        forecasts = arima_forecast(fit_arima(train, auto_order(train)), args.horizon)

    actuals: list[float | None] | None = None
    errors: list[float | None] | None = None
    if args.train_end is not None:
        actuals = []
        errors = []
        for i in range(len(forecasts)):
            month = forecasts.month_at(i)
            if series.start <= month <= series.end:
                actual = series.value_at(month)
                actuals.append(actual)
                errors.append((forecasts.values[i] - actual) / actual * 100.0)
            else:
                actuals.append(None)
                errors.append(None)

    if args.format == "json":
        return render_forecast_json(forecasts, actuals, errors, args.round)
    return render_forecast_csv(forecasts, actuals, errors, args.round)


def _cmd_evaluate(args: argparse.Namespace) -> str:
    series = _load_series(args)
    if args.method == "all":
        results = {m: _METHOD_RUNNERS[m](series) for m in range(1, 7)}
        if args.format == "json":
            return render_all_json(results, args.round)
        return render_all_csv(results, args.round)
    method = int(args.method)
    result = _METHOD_RUNNERS[method](series)
    if args.format == "json":
        return render_method_json(method, result, args.round)
    return render_method_csv(method, result, args.round)


def _parse_train_end(text: str) -> CalendarMonth:
    try:
        return CalendarMonth.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectorcast",
        description="Decompose, forecast and evaluate monthly index series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, golden: bool = True) -> None:
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--input", help="input CSV path")
        if golden:
            source.add_argument(
                "--golden",
                action="store_true",
                help="use the bundled Auto sector index dataset (2010-2015)",
            )
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument(
            "--round",
            action="store_true",
            help="presentation rounding: integer levels, two-decimal percentages",
        )
        p.add_argument("--output", help="write the report here instead of stdout")

    p_ingest = sub.add_parser("ingest", help="aggregate daily CSV to monthly means")
    add_common(p_ingest, golden=False)
    p_ingest.set_defaults(golden=False, handler=_cmd_ingest)

    p_dec = sub.add_parser("decompose", help="trend/seasonal/random decomposition")
    add_common(p_dec)
    p_dec.set_defaults(handler=_cmd_decompose)

    p_fc = sub.add_parser("forecast", help="fit one engine and forecast ahead")
    add_common(p_fc)
    p_fc.add_argument("--engine", choices=("hw", "arima"), required=True)
    p_fc.add_argument("--horizon", type=int, default=12, help="months ahead (default 12)")
    p_fc.add_argument(
        "--train-end",
        type=_parse_train_end,
        metavar="YYYY-MM",
        help="fit only through this month; later input months become held-out actuals",
    )
    p_fc.set_defaults(handler=_cmd_forecast)

    p_ev = sub.add_parser("evaluate", help="run evaluation protocols on a six-year series")
    add_common(p_ev)
    p_ev.add_argument("--method", choices=("1", "2", "3", "4", "5", "6", "all"), required=True)
    p_ev.set_defaults(handler=_cmd_evaluate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "forecast" and args.horizon < 1:
        parser.error("--horizon must be at least 1")

    try:
        report = args.handler(args)
    except (ParseError, DataError, InsufficientDataError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as handle:
                handle.write(report)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(report)
    return 0


if __name__ == "__main__":
    sys.exit(main())
