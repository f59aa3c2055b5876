"""The cost chain: floor area → gas use → payments → savings.

All arithmetic is exact decimal; display rounding happens only in the
serialization layer. The chain is deliberately simple:

* ``daily_consumption``: area × annual heating intensity / heating days.
  With the default calibration (140 kWh/m²/year over 180 heating days) a
  92 m² apartment needs 71.5556 kWh per heating day, which prints as the
  familiar 72 kWh.
* ``daily_payment``: consumption × price × import share, converting
  EUR/MWh to EUR/kWh internally (1 MWh = 1000 kWh).
* ``temperature_savings``: the 12%-per-2°C anchor, extrapolated linearly
  per °C and clamped at 100% of the payment.
* ``shower_cost``: annual water-heating energy per person spread over the
  year, priced like any other gas use.
* ``national_estimate``: the average household scaled by the count of
  gas-heated apartments. The published national total is reproducible
  only when the per-household figure is first rounded to whole kWh, so
  the rounding step is an explicit mode rather than a hidden choice.

Everything here is a pure function over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from typing import Literal

from .money import D, ZERO, ONE

KWH_PER_MWH = Decimal(1000)

RoundingMode = Literal["rounded", "unrounded"]


def _coerce(obj, field: str) -> None:
    value = getattr(obj, field)
    if not isinstance(value, Decimal):
        object.__setattr__(obj, field, D(value))


@dataclass(frozen=True)
class ModelParams:
    """Calibration constants. Defaults reproduce the published tables.

    The heating intensity default is not arbitrary: 140 kWh/m²/year is the
    unique whole-number intensity that, spread over 180 heating days,
    matches every published consumption figure for 40–120 m² apartments
    after rounding to whole kWh (see the calibration test).
    """

    intensity_kwh_per_m2_year: Decimal = D("140")
    heating_days_per_year: Decimal = D("180")
    russian_share: Decimal = D("0.5")
    savings_rate_per_2c: Decimal = D("0.12")
    shower_annual_kwh_per_person: Decimal = D("550")
    shower_water_liters_per_day: Decimal = D("40")
    days_per_year_for_showers: Decimal = D("365")

    def __post_init__(self) -> None:
        for field in (
            "intensity_kwh_per_m2_year",
            "heating_days_per_year",
            "russian_share",
            "savings_rate_per_2c",
            "shower_annual_kwh_per_person",
            "shower_water_liters_per_day",
            "days_per_year_for_showers",
        ):
            _coerce(self, field)
        positive = (
            self.intensity_kwh_per_m2_year,
            self.heating_days_per_year,
            self.shower_annual_kwh_per_person,
            self.shower_water_liters_per_day,
            self.days_per_year_for_showers,
        )
        if any(v <= 0 for v in positive):
            raise ValueError("all model parameters must be positive")
        if not (ZERO < self.russian_share <= ONE):
            raise ValueError("russian_share must be in (0, 1]")
        if not (ZERO <= self.savings_rate_per_2c < ONE):
            raise ValueError("savings_rate_per_2c must be in [0, 1)")


@dataclass(frozen=True)
class HousingStock:
    """National housing parameters (defaults: Germany)."""

    n_apartments: int = 42_500_000
    avg_area_m2: Decimal = D("92")
    gas_heating_share: Decimal = D("0.48")

    def __post_init__(self) -> None:
        for field in ("avg_area_m2", "gas_heating_share"):
            _coerce(self, field)
        if self.n_apartments <= 0:
            raise ValueError("n_apartments must be positive")
        if self.avg_area_m2 <= 0:
            raise ValueError("avg_area_m2 must be positive")
        if not (ZERO <= self.gas_heating_share <= ONE):
            raise ValueError("gas_heating_share must be in [0, 1]")


@dataclass(frozen=True)
class HouseholdProfile:
    """One household's floor area and behavioral choices."""

    area_m2: Decimal
    temp_reduction_c: Decimal = D("0")
    cold_showers: bool = False
    persons: int = 1

    def __post_init__(self) -> None:
        for field in ("area_m2", "temp_reduction_c"):
            _coerce(self, field)
        if self.area_m2 <= 0:
            raise ValueError("area_m2 must be positive")
        if self.temp_reduction_c < 0:
            raise ValueError("temp_reduction_c must be >= 0")
        if self.persons < 1:
            raise ValueError("persons must be >= 1")


@dataclass(frozen=True)
class CostBreakdown:
    consumption_kwh_per_day: Decimal
    payment_eur_per_day: Decimal
    savings_eur_per_day: Decimal
    shower_savings_eur_per_day: Decimal

    def __post_init__(self) -> None:
        values = (
            self.consumption_kwh_per_day,
            self.payment_eur_per_day,
            self.savings_eur_per_day,
            self.shower_savings_eur_per_day,
        )
        if any(v < 0 for v in values):
            raise ValueError("breakdown fields must be >= 0")
        if self.savings_eur_per_day > self.payment_eur_per_day:
            raise ValueError("savings cannot exceed the payment")


@dataclass(frozen=True)
class ShowerCost:
    kwh_per_shower: Decimal
    eur_per_shower: Decimal


@dataclass(frozen=True)
class NationalEstimate:
    gas_heated_households: Decimal
    total_consumption_twh_per_day: Decimal
    total_payment_eur_per_day: Decimal
    total_savings_eur_per_day: Decimal

    def __post_init__(self) -> None:
        values = (
            self.gas_heated_households,
            self.total_consumption_twh_per_day,
            self.total_payment_eur_per_day,
            self.total_savings_eur_per_day,
        )
        if any(v < 0 for v in values):
            raise ValueError("national estimate fields must be >= 0")


def daily_consumption(area_m2: Decimal | int | str, params: ModelParams) -> Decimal:
    """Gas use per heating day for a given floor area, in kWh, unrounded."""
    area = D(area_m2)
    if area <= 0:
        raise ValueError("area_m2 must be positive")
    return area * params.intensity_kwh_per_m2_year / params.heating_days_per_year


def daily_payment(
    consumption_kwh: Decimal | int | str,
    price_eur_mwh: Decimal | int | str,
    russian_share: Decimal | int | str,
) -> Decimal:
    """EUR per day attributed to the import share, unrounded."""
    consumption = D(consumption_kwh)
    price = D(price_eur_mwh)
    share = D(russian_share)
    if consumption < 0 or price < 0 or share < 0:
        raise ValueError("consumption, price, and share must be >= 0")
    return consumption * (price / KWH_PER_MWH) * share


def temperature_savings(
    payment_eur_per_day: Decimal | int | str,
    temp_reduction_c: Decimal | int | str,
    params: ModelParams,
) -> Decimal:
    """Payment share saved by lowering room temperature.

    Linear per °C from the rate-per-2°C anchor, clamped so savings never
    exceed the payment.
    """
    payment = D(payment_eur_per_day)
    reduction = D(temp_reduction_c)
    if payment < 0:
        raise ValueError("payment must be >= 0")
    if reduction < 0:
        raise ValueError("temp_reduction_c must be >= 0")
    factor = min(ONE, (reduction / 2) * params.savings_rate_per_2c)
    return payment * factor


def shower_cost(price_eur_mwh: Decimal | int | str, params: ModelParams) -> ShowerCost:
    """Energy and attributed cost of one hot shower, unrounded."""
    price = D(price_eur_mwh)
    if price < 0:
        raise ValueError("price must be >= 0")
    kwh = params.shower_annual_kwh_per_person / params.days_per_year_for_showers
    eur = kwh * (price / KWH_PER_MWH) * params.russian_share
    return ShowerCost(kwh_per_shower=kwh, eur_per_shower=eur)


def household_breakdown(
    profile: HouseholdProfile,
    price_eur_mwh: Decimal | int | str,
    params: ModelParams,
) -> CostBreakdown:
    """Compose the full chain for one household."""
    consumption = daily_consumption(profile.area_m2, params)
    payment = daily_payment(consumption, price_eur_mwh, params.russian_share)
    savings = temperature_savings(payment, profile.temp_reduction_c, params)
    if profile.cold_showers:
        shower = shower_cost(price_eur_mwh, params)
        shower_savings = profile.persons * shower.eur_per_shower
    else:
        shower_savings = ZERO
    return CostBreakdown(
        consumption_kwh_per_day=consumption,
        payment_eur_per_day=payment,
        savings_eur_per_day=savings,
        shower_savings_eur_per_day=shower_savings,
    )


def national_estimate(
    stock: HousingStock,
    price_eur_mwh: Decimal | int | str,
    params: ModelParams,
    per_household_kwh_rounding: RoundingMode = "rounded",
    temp_reduction_c: Decimal | int | str = D("2"),
) -> NationalEstimate:
    """Scale the average household to the national gas-heated stock.

    ``rounded`` mode rounds the per-household consumption to whole kWh
    before scaling, which is how the published national total was built;
    ``unrounded`` keeps the continuous figure. At default inputs the two
    modes land at 1.4688 vs. 1.4597 TWh per day.
    """
    if per_household_kwh_rounding not in ("rounded", "unrounded"):
        raise ValueError(f"unknown rounding mode {per_household_kwh_rounding!r}")
    households = D(stock.n_apartments) * stock.gas_heating_share
    per_household_kwh = daily_consumption(stock.avg_area_m2, params)
    if per_household_kwh_rounding == "rounded":
        per_household_kwh = per_household_kwh.quantize(ONE, rounding=ROUND_HALF_UP)
    total_kwh = households * per_household_kwh
    per_household_payment = daily_payment(
        per_household_kwh, price_eur_mwh, params.russian_share
    )
    per_household_savings = temperature_savings(
        per_household_payment, temp_reduction_c, params
    )
    return NationalEstimate(
        gas_heated_households=households,
        total_consumption_twh_per_day=total_kwh.scaleb(-9),
        total_payment_eur_per_day=households * per_household_payment,
        total_savings_eur_per_day=households * per_household_savings,
    )
