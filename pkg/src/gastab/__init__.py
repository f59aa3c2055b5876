"""gastab: gas spot prices in, heating payments and savings scenarios out.

A deterministic engine that ingests gas spot-price series (EUR/MWh),
computes per-household and national daily payments attributable to a
configurable import share, and projects the savings achievable through
behavioral changes such as lowering room temperature or skipping hot
showers. Ships with a CLI, a small JSON HTTP API, and a synthetic but
statistically consistent price fixture for offline use.
"""

__version__ = "0.1.0"

from .model import (
    CostBreakdown,
    HouseholdProfile,
    HousingStock,
    ModelParams,
    NationalEstimate,
    ShowerCost,
    daily_consumption,
    daily_payment,
    household_breakdown,
    national_estimate,
    shower_cost,
    temperature_savings,
)
from .prices import (
    PrePostStats,
    PriceQuote,
    PriceSeries,
    PriceStore,
    export_series,
    latest_price,
    parse_price_feed,
    price_stats,
    validate_series,
)
from .scenarios import (
    ComparisonRow,
    FixedPrice,
    Scenario,
    ScenarioResult,
    SeriesPrice,
    compare,
    evaluate,
)

__all__ = [
    "CostBreakdown",
    "HouseholdProfile",
    "HousingStock",
    "ModelParams",
    "NationalEstimate",
    "ShowerCost",
    "daily_consumption",
    "daily_payment",
    "household_breakdown",
    "national_estimate",
    "shower_cost",
    "temperature_savings",
    "PrePostStats",
    "PriceQuote",
    "PriceSeries",
    "PriceStore",
    "export_series",
    "latest_price",
    "parse_price_feed",
    "price_stats",
    "validate_series",
    "ComparisonRow",
    "FixedPrice",
    "Scenario",
    "ScenarioResult",
    "SeriesPrice",
    "compare",
    "evaluate",
]
