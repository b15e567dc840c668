"""Loading daily observations and aggregating them into monthly series.

Daily input is CSV with a ``date,value`` header, ISO dates and decimal
values.  Monthly aggregation takes the plain arithmetic mean of the trading
days present in each month; leading and trailing partial months are kept.

The module also embeds the bundled reference dataset: 72 monthly aggregates
of the Indian Auto sector index, January 2010 through December 2015, which
the regression tests and the ``--golden`` CLI flag are built on.
"""

from __future__ import annotations

import csv
import datetime
import io
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import DataError, GapError, ParseError
from .series import CalendarMonth, MonthlySeries


@dataclass(frozen=True)
class DailyObservation:
    date: datetime.date
    value: float


def load_daily_csv(source: IO[bytes] | IO[str] | str) -> list[DailyObservation]:
    """Parse daily observations from a CSV stream or path.

    Rows are returned sorted by date.  Duplicate dates, malformed rows and
    empty files are rejected.
    """
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            return load_daily_csv(handle)
    raw = source.read()
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    reader = csv.reader(io.StringIO(text))
    rows = [(i + 1, row) for i, row in enumerate(reader) if row]
    if not rows:
        raise DataError("empty daily CSV")
    header_line, header = rows[0]
    if [c.strip().lower() for c in header] != ["date", "value"]:
        raise ParseError(f"expected header 'date,value', got {','.join(header)!r}", header_line)
    if len(rows) == 1:
        raise DataError("daily CSV contains a header but no observations")

    observations: list[DailyObservation] = []
    seen: dict[datetime.date, int] = {}
    for line_number, row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", line_number)
        try:
            date = datetime.date.fromisoformat(row[0].strip())
        except ValueError:
            raise ParseError(f"bad date {row[0]!r}", line_number) from None
        try:
            value = float(row[1])
        except ValueError:
            raise ParseError(f"bad value {row[1]!r}", line_number) from None
        if date in seen:
            raise DataError(f"duplicate date {date.isoformat()} on lines {seen[date]} and {line_number}")
        seen[date] = line_number
        observations.append(DailyObservation(date, value))

    observations.sort(key=lambda obs: obs.date)
    return observations


def aggregate_monthly(observations: Iterable[DailyObservation]) -> MonthlySeries:
    """Average daily observations month by month.

    Every interior month of the covered span must have at least one
    observation; a missing month raises :class:`GapError` naming it.
    """
    sums: dict[tuple[int, int], float] = {}
    counts: dict[tuple[int, int], int] = {}
    for obs in observations:
        key = (obs.date.year, obs.date.month)
        sums[key] = sums.get(key, 0.0) + obs.value
        counts[key] = counts.get(key, 0) + 1
    if not sums:
        raise DataError("no observations to aggregate")

    first = CalendarMonth(*min(sums))
    last = CalendarMonth(*max(sums))
    values: list[float] = []
    month = first
    while month <= last:
        key = (month.year, month.month)
        if key not in sums:
            raise GapError(f"no observations in {month}")
        values.append(sums[key] / counts[key])
        month = month.advanced(1)
    return MonthlySeries(first, tuple(values))


def load_monthly_csv(source: IO[bytes] | IO[str] | str) -> MonthlySeries:
    """Read a ``year,month,value`` CSV into a gap-free monthly series."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            return load_monthly_csv(handle)
    raw = source.read()
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    reader = csv.reader(io.StringIO(text))
    rows = [(i + 1, row) for i, row in enumerate(reader) if row]
    if not rows:
        raise DataError("empty monthly CSV")
    header_line, header = rows[0]
    if [c.strip().lower() for c in header] != ["year", "month", "value"]:
        raise ParseError(f"expected header 'year,month,value', got {','.join(header)!r}", header_line)
    if len(rows) == 1:
        raise DataError("monthly CSV contains a header but no rows")

    months: list[CalendarMonth] = []
    values: list[float] = []
    for line_number, row in rows[1:]:
        if len(row) != 3:
            raise ParseError(f"expected 3 fields, got {len(row)}", line_number)
        try:
            month = CalendarMonth(int(row[0]), int(row[1]))
            value = float(row[2])
        except ValueError as exc:
            raise ParseError(str(exc), line_number) from None
        months.append(month)
        values.append(value)

    start = months[0]
    for offset, month in enumerate(months):
        if month != start.advanced(offset):
            raise DataError(f"months not contiguous at {month} (expected {start.advanced(offset)})")
    return MonthlySeries(start, tuple(values))


def monthly_csv_rows(series: MonthlySeries) -> list[tuple[int, int, float]]:
    """``(year, month, value)`` rows for CSV export."""
    return [
        (series.month_at(i).year, series.month_at(i).month, series.values[i])
        for i in range(len(series))
    ]


# Monthly means of the bundled Auto sector index, Jan 2010 .. Dec 2015.
# One row per year, January first.
_GOLDEN_AUTO_VALUES = (
    7380, 6958, 7584, 7702, 7581, 8034, 8315, 8710, 9269, 9844, 10127, 10100,
    9426, 8547, 8806, 9515, 9061, 8626, 8902, 8390, 8656, 8866, 8771, 8359,
    8576, 9883, 9979, 10363, 9568, 9154, 9215, 9394, 9841, 10299, 10620, 11139,
    11379, 10809, 10499, 10164, 11091, 10731, 10672, 10255, 10893, 11776, 12103, 12247,
    11983, 11985, 12783, 13437, 14078, 15118, 15688, 16418, 17798, 17700, 18712, 18752,
    18907, 19565, 19397, 19041, 18799, 18357, 18806, 18918, 17348, 17738, 18535, 18317,
)


def golden_auto_series() -> MonthlySeries:
    """The bundled 72-month Auto sector index series (Jan 2010 .. Dec 2015)."""
    return MonthlySeries(CalendarMonth(2010, 1), _GOLDEN_AUTO_VALUES)
