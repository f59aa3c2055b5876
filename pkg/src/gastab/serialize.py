"""JSON payload shapes shared by the HTTP API and the CLI's --json mode.

Every money/energy field is emitted twice: ``raw`` is the 4-decimal
fixed-point string, ``display`` is the documented human rounding of that
same value. Clients should render the display strings verbatim; the raw
strings exist so nothing downstream ever re-rounds. Field order is fixed,
so identical inputs produce byte-identical JSON.
"""

from __future__ import annotations

import json
from datetime import date

from .model import CostBreakdown, HouseholdProfile, NationalEstimate
from .money import (
    fmt_count_millions,
    fmt_eur,
    fmt_eur_total,
    fmt_kwh,
    fmt_kwh_1dp,
    fmt_price_mwh,
    fmt_ratio,
    fmt_twh,
    raw,
)
from .prices import PrePostStats, PriceQuote, PriceSeries
from .scenarios import ScenarioResult


def dumps(payload) -> str:
    """Render exactly like the HTTP layer: UTF-8, compact separators."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def _field(value, display: str) -> dict:
    return {"raw": raw(value), "display": display}


def quote_payload(quote: PriceQuote) -> dict:
    return {
        "date": quote.date.isoformat(),
        "price_eur_mwh": raw(quote.price),
        "display": fmt_price_mwh(quote.price),
    }


def stats_payload(stats: PrePostStats) -> dict:
    return {
        "split_date": stats.split_date.isoformat(),
        "pre_mean": _field(stats.pre_mean, fmt_price_mwh(stats.pre_mean)),
        "post_latest": _field(stats.post_latest, fmt_price_mwh(stats.post_latest)),
        "ratio": _field(stats.ratio, fmt_ratio(stats.ratio)),
    }


def prices_payload(
    series: PriceSeries,
    stats: PrePostStats | None,
    *,
    stale: bool,
    range_from: date | None = None,
    range_to: date | None = None,
) -> dict:
    quotes = [
        quote_payload(q)
        for q in series.quotes
        if (range_from is None or q.date >= range_from)
        and (range_to is None or q.date <= range_to)
    ]
    return {
        "source_label": series.source_label,
        "stale": stale,
        "quotes": quotes,
        "stats": stats_payload(stats) if stats is not None else None,
    }


def breakdown_payload(breakdown: CostBreakdown) -> dict:
    return {
        "kind": "household",
        "consumption_kwh_per_day": _field(
            breakdown.consumption_kwh_per_day, fmt_kwh(breakdown.consumption_kwh_per_day)
        ),
        "payment_eur_per_day": _field(
            breakdown.payment_eur_per_day, fmt_eur(breakdown.payment_eur_per_day)
        ),
        "savings_eur_per_day": _field(
            breakdown.savings_eur_per_day, fmt_eur(breakdown.savings_eur_per_day)
        ),
        "shower_savings_eur_per_day": _field(
            breakdown.shower_savings_eur_per_day,
            fmt_eur(breakdown.shower_savings_eur_per_day),
        ),
    }


def national_payload(estimate: NationalEstimate) -> dict:
    return {
        "kind": "national",
        "gas_heated_households": _field(
            estimate.gas_heated_households,
            fmt_count_millions(estimate.gas_heated_households),
        ),
        "total_consumption_twh_per_day": _field(
            estimate.total_consumption_twh_per_day,
            fmt_twh(estimate.total_consumption_twh_per_day),
        ),
        "total_payment_eur_per_day": _field(
            estimate.total_payment_eur_per_day,
            fmt_eur_total(estimate.total_payment_eur_per_day),
        ),
        "total_savings_eur_per_day": _field(
            estimate.total_savings_eur_per_day,
            fmt_eur_total(estimate.total_savings_eur_per_day),
        ),
    }


def profile_payload(profile: HouseholdProfile) -> dict:
    return {
        "area_m2": raw(profile.area_m2),
        "temp_reduction_c": raw(profile.temp_reduction_c),
        "cold_showers": profile.cold_showers,
        "persons": profile.persons,
    }


def estimate_payload(
    profile: HouseholdProfile,
    price_eur_mwh,
    breakdown: CostBreakdown,
    *,
    stale: bool,
    notes: tuple[str, ...] = (),
) -> dict:
    return {
        "profile": profile_payload(profile),
        "price_eur_mwh": _field(price_eur_mwh, fmt_price_mwh(price_eur_mwh)),
        "breakdown": breakdown_payload(breakdown),
        "stale": stale,
        "notes": list(notes),
    }


def shower_payload(kwh_per_shower, eur_per_shower) -> dict:
    return {
        "kwh_per_shower": _field(kwh_per_shower, fmt_kwh_1dp(kwh_per_shower)),
        "eur_per_shower": _field(eur_per_shower, fmt_eur(eur_per_shower)),
    }


def scenario_payload(result: ScenarioResult) -> dict:
    if isinstance(result.daily, NationalEstimate):
        daily = national_payload(result.daily)
    else:
        daily = breakdown_payload(result.daily)
    return {
        "label": result.label,
        "daily": daily,
        "daily_savings_eur": _field(
            result.daily_savings_eur, fmt_eur_total(result.daily_savings_eur)
            if result.daily_savings_eur >= 1_000_000
            else fmt_eur(result.daily_savings_eur)
        ),
        "cumulative_savings_eur": _field(
            result.cumulative_savings_eur,
            fmt_eur_total(result.cumulative_savings_eur)
            if result.cumulative_savings_eur >= 1_000_000
            else fmt_eur(result.cumulative_savings_eur),
        ),
        "assumptions": {
            "price_eur_mwh": _field(
                result.price_eur_mwh, fmt_price_mwh(result.price_eur_mwh)
            ),
            "days_remaining": result.days_remaining,
            "europe_multiplier": raw(result.europe_multiplier),
            "stale": result.staleness_flag,
        },
        "notes": list(result.notes),
    }


def error_payload(code: str, message: str, detail: dict | None = None) -> dict:
    payload = {"code": code, "message": message}
    if detail:
        payload["detail"] = detail
    return payload
