"""Delimited-text panel ingestion.

Two layouts are supported, both UTF-8 with a header row:

* wide: one date column followed by one column per series, header cells
  naming the series (``date,GBP_3M,EUR_6M``).
* long: exactly three columns, date, series label, value.

Empty fields, ``NA`` and ``NaN`` (any case) mark missing observations,
resolved per series by the source's policy: ``drop`` removes the
observation, ``forward_fill`` repeats the last seen value. Parse problems
are reported with 1-based line numbers.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path

import numpy as np

from .errors import (
    DuplicateDateError,
    InsufficientDataError,
    InvalidInputError,
    PanelFormatError,
)
from .patterns import RawSeries

LAYOUTS = ("wide", "long")
MISSING_POLICIES = ("drop", "forward_fill")
DEFAULT_DATE_FORMAT = "%Y-%m-%d"

# (date, value or None for missing, source line number)
_Observation = tuple[datetime, float | None, int]


@dataclass(frozen=True)
class PanelSource:
    """Where and how to read a panel of labeled series."""

    path: str | Path
    layout: str = "wide"
    date_format: str = DEFAULT_DATE_FORMAT
    missing_policy: str = "drop"
    differencing: bool = False
    delimiter: str = ","

    def __post_init__(self):
        if self.layout not in LAYOUTS:
            raise InvalidInputError(f"layout must be one of {LAYOUTS}, got {self.layout!r}")
        if self.missing_policy not in MISSING_POLICIES:
            raise InvalidInputError(
                f"missing_policy must be one of {MISSING_POLICIES}, got {self.missing_policy!r}"
            )
        if not isinstance(self.delimiter, str) or len(self.delimiter) != 1:
            raise InvalidInputError(f"delimiter must be a single character, got {self.delimiter!r}")


def _is_missing(token: str) -> bool:
    return token.strip().lower() in ("", "na", "nan")


def _parse_date(token: str, date_format: str, line: int) -> datetime:
    try:
        return datetime.strptime(token.strip(), date_format)
    except ValueError:
        raise PanelFormatError(
            f"unparseable date {token.strip()!r} (expected format {date_format})", line
        ) from None


def _parse_value(token: str, label: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise PanelFormatError(
            f"series {label!r}: unparseable value {token.strip()!r}", line
        ) from None
    if not math.isfinite(value):
        raise PanelFormatError(f"series {label!r}: non-finite value {token.strip()!r}", line)
    return value


def _check_labels(labels: list[str], line: int) -> None:
    if any(not lab for lab in labels):
        raise PanelFormatError("empty series label in header", line)
    if len(set(labels)) != len(labels):
        raise PanelFormatError("duplicate series labels in header", line)


def _read_wide(reader, header: list[str], src: PanelSource) -> dict[str, list[_Observation]]:
    if len(header) < 2:
        raise PanelFormatError(
            "wide layout needs a date column plus at least one series column", 1
        )
    labels = [cell.strip() for cell in header[1:]]
    _check_labels(labels, 1)
    observations: dict[str, list[_Observation]] = {label: [] for label in labels}
    seen_dates: set[datetime] = set()
    for row in reader:
        line = reader.line_num
        if len(row) != len(header):
            raise PanelFormatError(f"expected {len(header)} fields, got {len(row)}", line)
        date = _parse_date(row[0], src.date_format, line)
        if date in seen_dates:
            raise DuplicateDateError(f"duplicate date {row[0].strip()!r}", line)
        seen_dates.add(date)
        for label, token in zip(labels, row[1:]):
            value = None if _is_missing(token) else _parse_value(token, label, line)
            observations[label].append((date, value, line))
    return observations


def _read_long(reader, header: list[str], src: PanelSource) -> dict[str, list[_Observation]]:
    if len(header) != 3:
        raise PanelFormatError(
            f"long layout needs exactly 3 columns (date, label, value), got {len(header)}", 1
        )
    observations: dict[str, list[_Observation]] = {}
    seen: set[tuple[str, datetime]] = set()
    for row in reader:
        line = reader.line_num
        if len(row) != 3:
            raise PanelFormatError(f"expected 3 fields, got {len(row)}", line)
        date = _parse_date(row[0], src.date_format, line)
        label = row[1].strip()
        if not label:
            raise PanelFormatError("empty series label", line)
        if (label, date) in seen:
            raise DuplicateDateError(f"series {label!r}: duplicate date {row[0].strip()!r}", line)
        seen.add((label, date))
        value = None if _is_missing(row[2]) else _parse_value(row[2], label, line)
        observations.setdefault(label, []).append((date, value, line))
    return observations


def _apply_policy(label: str, obs: list[_Observation], policy: str) -> list[tuple[datetime, float]]:
    if policy == "drop":
        return [(date, value) for date, value, _ in obs if value is not None]
    kept: list[tuple[datetime, float]] = []
    last: float | None = None
    for date, value, line in obs:
        if value is None:
            if last is None:
                raise PanelFormatError(
                    f"series {label!r}: first observation is missing, cannot forward-fill", line
                )
            value = last
        last = value
        kept.append((date, value))
    return kept


def _build_series(label: str, obs: list[_Observation], src: PanelSource) -> RawSeries:
    obs = sorted(obs, key=lambda item: item[0])
    kept = _apply_policy(label, obs, src.missing_policy)
    if not kept:
        raise InsufficientDataError(
            f"series {label!r} has no observations left under policy {src.missing_policy!r}"
        )
    dates = [date for date, _ in kept]
    values = np.array([value for _, value in kept])
    if src.differencing:
        if values.size < 2:
            raise InsufficientDataError(
                f"series {label!r}: differencing needs at least 2 observations"
            )
        values = np.diff(values)
        dates = dates[1:]
    return RawSeries(values=values, timestamps=tuple(dates), label=label)


def load_panel(src: PanelSource) -> list[RawSeries]:
    """Parse the source file into one RawSeries per label, sorted by label.

    Rows may arrive in any order; each series is sorted by date. Errors carry
    the offending 1-based line number where one exists.
    """
    path = Path(src.path)
    if not path.is_file():
        raise InvalidInputError(f"input file not found: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=src.delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise PanelFormatError("file is empty, expected a header row") from None
        if src.layout == "wide":
            observations = _read_wide(reader, header, src)
        else:
            observations = _read_long(reader, header, src)
    return [_build_series(label, observations[label], src) for label in sorted(observations)]


def write_wide_panel(
    path: str | Path,
    panel: list[RawSeries],
    date_format: str = DEFAULT_DATE_FORMAT,
    delimiter: str = ",",
) -> None:
    """Write series as a wide-layout file loadable by ``load_panel``.

    Values are written with full round-trip precision (repr), so loading the
    file back under the drop policy reproduces each series exactly. Series
    without timestamps get synthetic daily dates from 2000-01-01. Dates
    missing from a series are left as empty (missing) fields.
    """
    if not panel:
        raise InvalidInputError("cannot write an empty panel")
    labels = [series.label for series in panel]
    if any(not lab for lab in labels):
        raise InvalidInputError("every series needs a nonempty label to be written")
    if len(set(labels)) != len(labels):
        raise InvalidInputError("panel series labels must be unique")

    columns: dict[str, dict[datetime, float]] = {}
    for series in panel:
        if series.timestamps is not None:
            stamps = list(series.timestamps)
        else:
            start = datetime(2000, 1, 1)
            stamps = [start + timedelta(days=i) for i in range(len(series))]
        columns[series.label] = dict(zip(stamps, (float(v) for v in series.values)))
    all_dates = sorted(set().union(*(col.keys() for col in columns.values())))

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        writer.writerow(["date"] + labels)
        for date in all_dates:
            row = [date.strftime(date_format)]
            for label in labels:
                value = columns[label].get(date)
                row.append("" if value is None else repr(value))
            writer.writerow(row)
