"""Gas spot-price series: parsing, validation, statistics, and persistence.

The canonical feed formats are deliberately tiny:

* CSV: one quote per line, ``YYYY-MM-DD,<decimal EUR/MWh>``, no header,
  LF line endings, UTF-8.
* JSON: an array of objects ``{"date": "YYYY-MM-DD", "price_eur_mwh": <number>}``
  (extra keys are tolerated and ignored).

Parsing keeps rows in input order and leaves ordering checks to
:func:`validate_series`, so a feed with shuffled or duplicated dates is
reported by the validator, not silently repaired by the parser.
A validated series is immutable and safe to share across threads.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from dataclasses import dataclass, replace
from datetime import date
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Iterable, Literal

from .money import D

logger = logging.getLogger(__name__)

FeedFormat = Literal["csv", "json"]


class FeedParseError(ValueError):
    """A feed row (or the feed as a whole) could not be parsed.

    ``row`` is the 1-based line number (CSV) or array index (JSON), or
    None for feed-level problems such as an unknown format.
    """

    def __init__(self, reason: str, row: int | None = None):
        self.row = row
        self.reason = reason
        super().__init__(f"row {row}: {reason}" if row is not None else reason)


class SeriesValidationError(ValueError):
    """The series violates an ordering or non-emptiness invariant."""


class PriceLookupError(LookupError):
    """A price query has no answer in the given series."""


@dataclass(frozen=True)
class PriceQuote:
    """One dated spot price in EUR/MWh. Price must be finite and positive."""

    date: date
    price: Decimal

    def __post_init__(self) -> None:
        if not isinstance(self.price, Decimal):
            object.__setattr__(self, "price", D(self.price))
        if not self.price.is_finite():
            raise ValueError(f"price must be finite, got {self.price}")
        if self.price <= 0:
            raise ValueError(f"price must be positive, got {self.price}")


@dataclass(frozen=True)
class PriceSeries:
    """An ordered collection of quotes plus a free-text source label."""

    quotes: tuple[PriceQuote, ...]
    source_label: str = ""

    def __len__(self) -> int:
        return len(self.quotes)

    def __iter__(self):
        return iter(self.quotes)

    @property
    def first_date(self) -> date:
        return self.quotes[0].date

    @property
    def last_date(self) -> date:
        return self.quotes[-1].date


@dataclass(frozen=True)
class PrePostStats:
    """Mean price before a split date vs. the latest price on/after it."""

    split_date: date
    pre_mean: Decimal
    post_latest: Decimal
    ratio: Decimal


def _parse_csv(raw: str) -> list[PriceQuote]:
    quotes = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        parts = line.split(",")
        if len(parts) != 2:
            raise FeedParseError(
                f"expected 'YYYY-MM-DD,price', got {line!r}", row=lineno
            )
        date_text, price_text = parts
        try:
            day = date.fromisoformat(date_text.strip())
        except ValueError:
            raise FeedParseError(f"bad date {date_text!r}", row=lineno) from None
        try:
            price = Decimal(price_text.strip())
        except InvalidOperation:
            raise FeedParseError(f"bad price {price_text!r}", row=lineno) from None
        try:
            quotes.append(PriceQuote(day, price))
        except ValueError as exc:
            raise FeedParseError(str(exc), row=lineno) from None
    return quotes


def _parse_json(raw: str) -> list[PriceQuote]:
    try:
        # parse_float=Decimal keeps the feed's literal digits exact.
        data = json.loads(raw, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise FeedParseError(f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, list):
        raise FeedParseError("expected a JSON array of quote objects")
    quotes = []
    for index, item in enumerate(data, start=1):
        if not isinstance(item, dict):
            raise FeedParseError("expected a quote object", row=index)
        try:
            date_text = item["date"]
            price_value = item["price_eur_mwh"]
        except KeyError as exc:
            raise FeedParseError(f"missing key {exc.args[0]!r}", row=index) from None
        try:
            day = date.fromisoformat(str(date_text))
        except ValueError:
            raise FeedParseError(f"bad date {date_text!r}", row=index) from None
        if not isinstance(price_value, (Decimal, int)):
            raise FeedParseError(f"bad price {price_value!r}", row=index)
        try:
            quotes.append(PriceQuote(day, D(price_value)))
        except ValueError as exc:
            raise FeedParseError(str(exc), row=index) from None
    return quotes


def parse_price_feed(
    raw: str, format: FeedFormat = "csv", source_label: str = ""
) -> PriceSeries:
    """Parse feed text into a series, preserving input order.

    No sorting or deduplication happens here; run the result through
    :func:`validate_series` before using it.
    """
    if not raw or not raw.strip():
        raise FeedParseError("empty input")
    if format == "csv":
        quotes = _parse_csv(raw)
    elif format == "json":
        quotes = _parse_json(raw)
    else:
        raise FeedParseError(f"unknown format {format!r}")
    return PriceSeries(quotes=tuple(quotes), source_label=source_label)


def validate_series(series: PriceSeries) -> PriceSeries:
    """Return the series sorted by date, rejecting duplicates and emptiness.

    Idempotent: validating a validated series returns an equal series.
    """
    if not series.quotes:
        raise SeriesValidationError("empty series")
    ordered = sorted(series.quotes, key=lambda q: q.date)
    for earlier, later in zip(ordered, ordered[1:]):
        if earlier.date == later.date:
            raise SeriesValidationError(f"duplicate date {earlier.date.isoformat()}")
    return replace(series, quotes=tuple(ordered))


def price_stats(series: PriceSeries, split_date: date) -> PrePostStats:
    """Mean of quotes strictly before ``split_date`` vs. the latest on/after it.

    The pre-split mean is the unweighted arithmetic mean of the available
    quotes; ``ratio`` is ``post_latest / pre_mean``.
    """
    pre = [q.price for q in series.quotes if q.date < split_date]
    post = [q for q in series.quotes if q.date >= split_date]
    if not pre:
        raise PriceLookupError(f"no quotes before {split_date.isoformat()}")
    if not post:
        raise PriceLookupError(f"no quotes on or after {split_date.isoformat()}")
    pre_mean = sum(pre, start=Decimal(0)) / len(pre)
    post_latest = max(post, key=lambda q: q.date).price
    return PrePostStats(
        split_date=split_date,
        pre_mean=pre_mean,
        post_latest=post_latest,
        ratio=post_latest / pre_mean,
    )


def latest_price(series: PriceSeries, as_of: date) -> Decimal:
    """Last-observation-carried-forward price at ``as_of``.

    Markets have non-trading days, so the answer is the price of the most
    recent quote dated on or before ``as_of``.
    """
    candidates = [q for q in series.quotes if q.date <= as_of]
    if not candidates:
        raise PriceLookupError(f"no quote on or before {as_of.isoformat()}")
    return max(candidates, key=lambda q: q.date).price


def export_series(series: PriceSeries, format: FeedFormat = "csv") -> str:
    """Serialize a validated series back into a canonical feed.

    Round-trip law: ``validate_series(parse_price_feed(export_series(s, f), f))``
    equals ``s`` for every valid series and either format.
    """
    validated = validate_series(series)
    if format == "csv":
        return "".join(f"{q.date.isoformat()},{q.price}\n" for q in validated.quotes)
    if format == "json":
        # Prices are emitted as bare decimal literals so the exact digits
        # survive the trip; json.dumps would detour through float.
        items = ",".join(
            f'{{"date":"{q.date.isoformat()}","price_eur_mwh":{q.price}}}'
            for q in validated.quotes
        )
        return f"[{items}]"
    raise FeedParseError(f"unknown format {format!r}")


class PriceStore:
    """File-backed persistence: one canonical CSV file, rewritten atomically.

    Ingesting quotes that extend the series past its last date appends
    lines; anything that changes earlier content rewrites the file through
    a temp file + rename. Writes are serialized per store instance.
    """

    def __init__(self, path: Path | str):
        self.path = Path(path)
        self._lock = threading.Lock()

    def load(self) -> PriceSeries | None:
        """Read and validate the stored series; None when nothing is stored."""
        if not self.path.exists():
            return None
        raw_text = self.path.read_text(encoding="utf-8")
        if not raw_text.strip():
            return None
        series = parse_price_feed(raw_text, "csv", source_label=str(self.path))
        return validate_series(series)

    def ingest(self, new: PriceSeries) -> PriceSeries:
        """Merge new quotes with the stored ones and persist the result.

        A date present both on disk and in ``new`` is a validation error;
        the store never silently overwrites history.
        """
        with self._lock:
            existing = self.load()
            if existing is None:
                merged = validate_series(new)
                self._write_all(merged)
                return merged
            merged = validate_series(
                PriceSeries(
                    quotes=existing.quotes + tuple(new.quotes),
                    source_label=existing.source_label,
                )
            )
            if merged.quotes[: len(existing.quotes)] == existing.quotes:
                self._append(merged.quotes[len(existing.quotes):])
            else:
                self._write_all(merged)
            return merged

    def replace(self, series: PriceSeries) -> PriceSeries:
        """Validate and persist ``series``, discarding previous content."""
        with self._lock:
            validated = validate_series(series)
            self._write_all(validated)
            return validated

    def _append(self, quotes: Iterable[PriceQuote]) -> None:
        with open(self.path, "a", encoding="utf-8") as handle:
            for quote in quotes:
                handle.write(f"{quote.date.isoformat()},{quote.price}\n")
        logger.info("appended quotes to %s", self.path)

    def _write_all(self, series: PriceSeries) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(export_series(series, "csv"), encoding="utf-8")
        os.replace(tmp, self.path)
        logger.info("rewrote %s with %d quotes", self.path, len(series))
