"""Calendar-anchored monthly series types.

A :class:`MonthlySeries` is a gap-free run of monthly values starting at a
:class:`CalendarMonth`; a :class:`PartialMonthlySeries` is the same thing with
explicit ``None`` holes (used for components such as a centered moving average
that is undefined near the edges).  All three types are immutable value
objects and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class CalendarMonth:
    """A specific month of a specific year.  Ordering is chronological."""

    year: int
    month: int

    def __post_init__(self) -> None:
        if not 1 <= self.month <= 12:
            raise ValueError(f"month must be in 1..12, got {self.month}")

    def advanced(self, months: int) -> "CalendarMonth":
        """The month ``months`` steps later (negative steps go back)."""
        total = self.year * 12 + (self.month - 1) + months
        return CalendarMonth(total // 12, total % 12 + 1)

    def months_until(self, other: "CalendarMonth") -> int:
        """Signed number of steps from self to ``other``."""
        return (other.year - self.year) * 12 + (other.month - self.month)

    @classmethod
    def parse(cls, text: str) -> "CalendarMonth":
        """Parse ``YYYY-MM`` (e.g. ``2014-12``)."""
        parts = text.split("-")
        if len(parts) != 2:
            raise ValueError(f"expected YYYY-MM, got {text!r}")
        try:
            year, month = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"expected YYYY-MM, got {text!r}") from None
        return cls(year, month)

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"


def _as_finite_floats(values: Iterable[float]) -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    for v in out:
        if not math.isfinite(v):
            raise ValueError(f"non-finite value {v!r} in series")
    return out


@dataclass(frozen=True)
class MonthlySeries:
    """A contiguous monthly sequence of finite values.

    Value ``k`` belongs to ``start.advanced(k)``; there are no gaps and no
    missing slots.
    """

    start: CalendarMonth
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_finite_floats(self.values))
        if len(self.values) == 0:
            raise ValueError("series must contain at least one value")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    @property
    def end(self) -> CalendarMonth:
        """Calendar month of the last value."""
        return self.start.advanced(len(self.values) - 1)

    def month_at(self, offset: int) -> CalendarMonth:
        """Calendar month of the value at ``offset``."""
        if not 0 <= offset < len(self.values):
            raise IndexError(f"offset {offset} outside 0..{len(self.values) - 1}")
        return self.start.advanced(offset)

    def offset_of(self, month: CalendarMonth) -> int:
        """Inverse of :meth:`month_at`."""
        offset = self.start.months_until(month)
        if not 0 <= offset < len(self.values):
            raise IndexError(f"{month} outside series span {self.start}..{self.end}")
        return offset

    def value_at(self, month: CalendarMonth) -> float:
        return self.values[self.offset_of(month)]

    def slice(self, first: CalendarMonth, last: CalendarMonth) -> "MonthlySeries":
        """Contiguous sub-series from ``first`` to ``last``, both inclusive."""
        if first > last:
            raise ValueError(f"slice start {first} after end {last}")
        lo = self.offset_of(first)
        hi = self.offset_of(last)
        return MonthlySeries(first, self.values[lo:hi + 1])

    def head(self, n: int) -> "MonthlySeries":
        """The first ``n`` values as a series."""
        if not 1 <= n <= len(self.values):
            raise ValueError(f"head length {n} outside 1..{len(self.values)}")
        return MonthlySeries(self.start, self.values[:n])


@dataclass(frozen=True)
class PartialMonthlySeries:
    """A monthly sequence in which some slots are explicitly absent (None)."""

    start: CalendarMonth
    values: tuple[float | None, ...]

    def __post_init__(self) -> None:
        checked: list[float | None] = []
        present = 0
        for v in self.values:
            if v is None:
                checked.append(None)
                continue
            v = float(v)
            if not math.isfinite(v):
                raise ValueError(f"non-finite value {v!r} in series")
            checked.append(v)
            present += 1
        if present == 0:
            raise ValueError("partial series must contain at least one present value")
        object.__setattr__(self, "values", tuple(checked))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end(self) -> CalendarMonth:
        return self.start.advanced(len(self.values) - 1)

    def month_at(self, offset: int) -> CalendarMonth:
        if not 0 <= offset < len(self.values):
            raise IndexError(f"offset {offset} outside 0..{len(self.values) - 1}")
        return self.start.advanced(offset)

    def value_at(self, month: CalendarMonth) -> float | None:
        offset = self.start.months_until(month)
        if not 0 <= offset < len(self.values):
            raise IndexError(f"{month} outside series span {self.start}..{self.end}")
        return self.values[offset]

    def present_offsets(self) -> tuple[int, ...]:
        """Offsets whose value is present, in order."""
        return tuple(i for i, v in enumerate(self.values) if v is not None)
