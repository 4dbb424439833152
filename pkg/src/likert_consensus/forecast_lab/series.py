"""Monthly time series keyed by ``YYYY-MM`` labels."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..errors import BadDate, DateMisalignment, GapInDates

_MONTH_RE = re.compile(r"^(\d{4})-(\d{2})$")


def parse_month(label: str) -> int:
    """``'2007-01'`` -> month ordinal ``2007*12 + 0``."""
    m = _MONTH_RE.match(label.strip()) if isinstance(label, str) else None
    if m is None:
        raise BadDate(f"expected YYYY-MM, got {label!r}")
    year, month = int(m.group(1)), int(m.group(2))
    if not 1 <= month <= 12:
        raise BadDate(f"month out of range in {label!r}")
    return year * 12 + month - 1


def format_month(ordinal: int) -> str:
    year, month0 = divmod(int(ordinal), 12)
    return f"{year:04d}-{month0 + 1:02d}"


def check_monthly(ordinals: Sequence[int], first_row: int = 1) -> None:
    """Raise unless ordinals increase by exactly one month at each step."""
    for i in range(1, len(ordinals)):
        step = ordinals[i] - ordinals[i - 1]
        if step <= 0:
            raise BadDate(f"date {format_month(ordinals[i])} does not follow "
                          f"{format_month(ordinals[i - 1])}", row=first_row + i)
        if step > 1:
            raise GapInDates(f"gap between {format_month(ordinals[i - 1])} and "
                             f"{format_month(ordinals[i])}", row=first_row + i)


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Contiguous monthly series. ``start`` is the month ordinal of the first value."""

    start: int
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "start", int(self.start))

    @classmethod
    def from_labels(cls, dates: Sequence[str], values: Iterable[float]) -> "TimeSeries":
        ordinals = [parse_month(d) for d in dates]
        values = list(values)
        if len(ordinals) != len(values):
            raise DateMisalignment("dates and values differ in length")
        if not ordinals:
            return cls(0, np.empty(0))
        check_monthly(ordinals)
        return cls(ordinals[0], np.asarray(values, dtype=float))

    def __len__(self) -> int:
        return self.values.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (self.start == other.start and self.values.shape == other.values.shape
                and bool(np.array_equal(self.values, other.values)))

    def __repr__(self) -> str:
        if not len(self):
            return "TimeSeries(<empty>)"
        return f"TimeSeries({self.first_label}..{self.last_label}, n={len(self)})"

    @property
    def end(self) -> int:
        """Ordinal one past the last month."""
        return self.start + len(self)

    @property
    def ordinals(self) -> np.ndarray:
        return np.arange(self.start, self.end)

    @property
    def dates(self) -> list[str]:
        return [format_month(o) for o in range(self.start, self.end)]

    @property
    def first_label(self) -> str:
        return format_month(self.start)

    @property
    def last_label(self) -> str:
        return format_month(self.end - 1)

    def has(self, ordinal: int) -> bool:
        return self.start <= ordinal < self.end

    def at(self, ordinal: int) -> float:
        if not self.has(ordinal):
            raise KeyError(format_month(ordinal))
        return float(self.values[ordinal - self.start])

    def window(self, first: int | None = None, last: int | None = None) -> "TimeSeries":
        """Sub-series covering months ``first..last`` inclusive, clipped to the data."""
        lo = self.start if first is None else max(first, self.start)
        hi = self.end - 1 if last is None else min(last, self.end - 1)
        if hi < lo:
            return TimeSeries(lo, np.empty(0))
        return TimeSeries(lo, self.values[lo - self.start: hi - self.start + 1])

    def upto(self, last: int) -> "TimeSeries":
        return self.window(None, last)


def overlap(a: TimeSeries, b: TimeSeries) -> tuple[int, int]:
    """Inclusive ordinal range shared by both series (empty if hi < lo)."""
    return max(a.start, b.start), min(a.end, b.end) - 1


def require_aligned(a: TimeSeries, b: TimeSeries) -> None:
    if a.start != b.start or len(a) != len(b):
        raise DateMisalignment(f"series not aligned: {a!r} vs {b!r}")
