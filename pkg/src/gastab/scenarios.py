"""What-if scenarios: evaluate, project over the remaining horizon, compare.

A scenario wraps either one household profile or a national housing stock,
a price source (a fixed number or a validated series read at a given
date), a projection horizon in days, and a population multiplier used to
scale the savings claim beyond the base population. Projections assume a
constant price over the horizon.

Results carry human-readable notes for every assumption that deserves a
flag: stale prices, savings rates extrapolated away from the 2°C anchor,
the population multiplier, and the per-household rounding mode behind the
published national total.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from datetime import date
from decimal import Decimal
from pathlib import Path
from typing import Mapping, Sequence, Union

from .model import (
    CostBreakdown,
    HouseholdProfile,
    HousingStock,
    ModelParams,
    NationalEstimate,
    RoundingMode,
    household_breakdown,
    national_estimate,
)
from .money import D, ONE, ZERO, fmt_count_millions, raw
from .prices import PriceSeries, latest_price

DEFAULT_DAYS_REMAINING = 27
EUROPE_MULTIPLIER = D("5")

DEFAULT_GERMAN_STOCK = HousingStock()


class ScenarioError(ValueError):
    """A scenario definition is inconsistent or cannot be evaluated."""


@dataclass(frozen=True)
class FixedPrice:
    price_eur_mwh: Decimal

    def __post_init__(self) -> None:
        if not isinstance(self.price_eur_mwh, Decimal):
            object.__setattr__(self, "price_eur_mwh", D(self.price_eur_mwh))

    def resolve(self) -> tuple[Decimal, bool]:
        return self.price_eur_mwh, False


@dataclass(frozen=True)
class SeriesPrice:
    """Price read from a validated series at ``as_of`` (step semantics)."""

    series: PriceSeries
    as_of: date
    stale: bool = False

    def resolve(self) -> tuple[Decimal, bool]:
        return latest_price(self.series, self.as_of), self.stale


PriceSource = Union[FixedPrice, SeriesPrice]


@dataclass(frozen=True)
class Scenario:
    label: str
    price_source: PriceSource
    profile: HouseholdProfile | None = None
    stock: HousingStock | None = None
    temp_reduction_c: Decimal = D("2")
    rounding_mode: RoundingMode = "rounded"
    europe_multiplier: Decimal = ONE
    days_remaining: int = DEFAULT_DAYS_REMAINING

    def __post_init__(self) -> None:
        if (self.profile is None) == (self.stock is None):
            raise ScenarioError("exactly one of profile or stock must be set")
        if not isinstance(self.europe_multiplier, Decimal):
            object.__setattr__(self, "europe_multiplier", D(self.europe_multiplier))
        if not isinstance(self.temp_reduction_c, Decimal):
            object.__setattr__(self, "temp_reduction_c", D(self.temp_reduction_c))
        if self.europe_multiplier <= 0:
            raise ScenarioError("europe_multiplier must be positive")
        if self.days_remaining < 0:
            raise ScenarioError("days_remaining must be >= 0")


@dataclass(frozen=True)
class ScenarioResult:
    """Daily figures plus the projection over the remaining horizon.

    ``daily`` is the base-population result; ``daily_savings_eur`` and
    ``cumulative_savings_eur`` include the population multiplier, so
    ``cumulative == base daily savings × days_remaining × multiplier``
    holds exactly.
    """

    label: str
    daily: CostBreakdown | NationalEstimate
    price_eur_mwh: Decimal
    daily_savings_eur: Decimal
    cumulative_savings_eur: Decimal
    days_remaining: int
    europe_multiplier: Decimal
    staleness_flag: bool
    notes: tuple[str, ...]

    @property
    def daily_payment_eur(self) -> Decimal:
        if isinstance(self.daily, NationalEstimate):
            return self.daily.total_payment_eur_per_day
        return self.daily.payment_eur_per_day


def _notes_for(scenario: Scenario, stale: bool, temp: Decimal) -> tuple[str, ...]:
    notes = []
    if stale:
        notes.append(
            "price taken from a cache older than its TTL; refresh the feed "
            "for current figures"
        )
    if temp not in (ZERO, D("2")):
        notes.append(
            f"savings at {temp}°C are extrapolated linearly from the "
            "12%-per-2°C anchor"
        )
    if scenario.stock is not None:
        if scenario.rounding_mode == "rounded":
            notes.append(
                "per-household consumption rounded to whole kWh before "
                "scaling, matching the published national total; unrounded "
                "mode gives the continuous figure (1.4597 vs 1.4688 TWh at "
                "defaults)"
            )
        if scenario.stock == DEFAULT_GERMAN_STOCK:
            households = D(scenario.stock.n_apartments) * scenario.stock.gas_heating_share
            notes.append(
                f"gas-heated household count used: {fmt_count_millions(households)} "
                "(42.5 Mio. × 48%); summaries often quote 20.5 Mio."
            )
    if scenario.europe_multiplier != ONE:
        notes.append(
            f"population multiplier ×{scenario.europe_multiplier} is the "
            "scale-up implied by the daily savings claims (≈70/14), not a "
            "household census; headline round figures near €1.8 Mrd. "
            "correspond to slightly different horizon assumptions"
        )
    return tuple(notes)


def evaluate(scenario: Scenario, params: ModelParams) -> ScenarioResult:
    """Resolve the price, compute daily figures, and project the horizon."""
    price, stale = scenario.price_source.resolve()
    if scenario.profile is not None:
        daily = household_breakdown(scenario.profile, price, params)
        base_savings = daily.savings_eur_per_day + daily.shower_savings_eur_per_day
        temp = scenario.profile.temp_reduction_c
    else:
        daily = national_estimate(
            scenario.stock,
            price,
            params,
            per_household_kwh_rounding=scenario.rounding_mode,
            temp_reduction_c=scenario.temp_reduction_c,
        )
        base_savings = daily.total_savings_eur_per_day
        temp = scenario.temp_reduction_c
    daily_savings = base_savings * scenario.europe_multiplier
    cumulative = daily_savings * scenario.days_remaining
    return ScenarioResult(
        label=scenario.label,
        daily=daily,
        price_eur_mwh=price,
        daily_savings_eur=daily_savings,
        cumulative_savings_eur=cumulative,
        days_remaining=scenario.days_remaining,
        europe_multiplier=scenario.europe_multiplier,
        staleness_flag=stale,
        notes=_notes_for(scenario, stale, temp),
    )


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    kind: str
    payment_eur_per_day: Decimal
    savings_eur_per_day: Decimal
    cumulative_savings_eur: Decimal
    delta_vs_baseline_eur_per_day: Decimal


def compare(
    baseline: Scenario, alternatives: Sequence[Scenario], params: ModelParams
) -> list[ComparisonRow]:
    """Evaluate baseline plus alternatives, in input order.

    The delta column is the daily amount a scenario keeps away from gas
    suppliers relative to the baseline: (baseline payment − baseline
    savings) − (scenario payment − scenario savings).
    """
    scenarios = [baseline, *alternatives]
    kinds = {type(s.price_source) for s in scenarios}
    if len(kinds) > 1:
        raise ScenarioError("scenarios must share the same price source semantics")
    results = [evaluate(s, params) for s in scenarios]
    base_net = results[0].daily_payment_eur - results[0].daily_savings_eur
    rows = []
    for result in results:
        net = result.daily_payment_eur - result.daily_savings_eur
        rows.append(
            ComparisonRow(
                label=result.label,
                kind="national" if isinstance(result.daily, NationalEstimate) else "household",
                payment_eur_per_day=result.daily_payment_eur,
                savings_eur_per_day=result.daily_savings_eur,
                cumulative_savings_eur=result.cumulative_savings_eur,
                delta_vs_baseline_eur_per_day=base_net - net,
            )
        )
    return rows


COMPARISON_COLUMNS = (
    "label",
    "kind",
    "payment_eur_per_day",
    "savings_eur_per_day",
    "cumulative_savings_eur",
    "delta_vs_baseline_eur_per_day",
)


def comparison_csv(rows: Sequence[ComparisonRow]) -> str:
    lines = [",".join(COMPARISON_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                (
                    row.label,
                    row.kind,
                    raw(row.payment_eur_per_day),
                    raw(row.savings_eur_per_day),
                    raw(row.cumulative_savings_eur),
                    raw(row.delta_vs_baseline_eur_per_day),
                )
            )
        )
    return "\n".join(lines) + "\n"


def comparison_dicts(rows: Sequence[ComparisonRow]) -> list[dict]:
    return [
        {
            "label": row.label,
            "kind": row.kind,
            "payment_eur_per_day": raw(row.payment_eur_per_day),
            "savings_eur_per_day": raw(row.savings_eur_per_day),
            "cumulative_savings_eur": raw(row.cumulative_savings_eur),
            "delta_vs_baseline_eur_per_day": raw(row.delta_vs_baseline_eur_per_day),
        }
        for row in rows
    ]


_PROFILE_KEYS = {"area_m2", "temp_reduction_c", "cold_showers", "persons"}
_STOCK_KEYS = {"n_apartments", "avg_area_m2", "gas_heating_share"}


def scenario_from_mapping(
    label: str,
    values: Mapping[str, object],
    *,
    default_price: PriceSource | None = None,
    default_stock: HousingStock | None = None,
) -> Scenario:
    """Build a scenario from a flat mapping (config section or JSON body).

    A mapping is national when it sets ``national`` truthy or any stock
    key; otherwise it must set ``area_m2``. ``price_eur_mwh`` falls back
    to ``default_price`` (usually the store's latest quote).
    """
    def get_bool(key: str, default: bool = False) -> bool:
        value = values.get(key, default)
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in ("1", "true", "yes", "on"):
            return True
        if text in ("0", "false", "no", "off"):
            return False
        raise ScenarioError(f"{label}: bad boolean for {key!r}: {value!r}")

    national = get_bool("national") or any(k in values for k in _STOCK_KEYS)

    if "price_eur_mwh" in values:
        price_source: PriceSource = FixedPrice(D(str(values["price_eur_mwh"])))
    elif default_price is not None:
        price_source = default_price
    else:
        raise ScenarioError(f"{label}: no price given and no price store available")

    common = {
        "europe_multiplier": D(str(values.get("europe_multiplier", "1"))),
        "days_remaining": int(str(values.get("days_remaining", DEFAULT_DAYS_REMAINING))),
    }

    if national:
        base = default_stock or HousingStock()
        stock = HousingStock(
            n_apartments=int(str(values.get("n_apartments", base.n_apartments))),
            avg_area_m2=D(str(values.get("avg_area_m2", base.avg_area_m2))),
            gas_heating_share=D(str(values.get("gas_heating_share", base.gas_heating_share))),
        )
        mode = str(values.get("rounding_mode", "rounded"))
        if mode not in ("rounded", "unrounded"):
            raise ScenarioError(f"{label}: unknown rounding_mode {mode!r}")
        return Scenario(
            label=label,
            price_source=price_source,
            stock=stock,
            temp_reduction_c=D(str(values.get("temp_reduction_c", "2"))),
            rounding_mode=mode,
            **common,
        )

    if "area_m2" not in values:
        raise ScenarioError(f"{label}: household scenario needs area_m2")
    profile = HouseholdProfile(
        area_m2=D(str(values["area_m2"])),
        temp_reduction_c=D(str(values.get("temp_reduction_c", "0"))),
        cold_showers=get_bool("cold_showers"),
        persons=int(str(values.get("persons", 1))),
    )
    return Scenario(label=label, price_source=price_source, profile=profile, **common)


def load_scenarios(
    path: Path | str,
    *,
    default_price: PriceSource | None = None,
    default_stock: HousingStock | None = None,
) -> list[Scenario]:
    """Read scenarios from an INI file, one section per scenario.

    The first section is the baseline. Keys mirror the mapping accepted by
    :func:`scenario_from_mapping`.
    """
    parser = configparser.ConfigParser()
    read = parser.read(path, encoding="utf-8")
    if not read:
        raise ScenarioError(f"cannot read scenario file {path}")
    if not parser.sections():
        raise ScenarioError(f"no scenario sections in {path}")
    return [
        scenario_from_mapping(
            section,
            dict(parser.items(section)),
            default_price=default_price,
            default_stock=default_stock,
        )
        for section in parser.sections()
    ]
