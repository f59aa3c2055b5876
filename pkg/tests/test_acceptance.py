"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
happen (pytest captures stdout otherwise). Everything here runs offline
against the shipped fixture and finishes in seconds.

Derived expectations are frozen from independent oracles computed in exact
rational arithmetic (``fractions.Fraction``), not from the code under test.
"""

import json
import random
from datetime import date, timedelta
from decimal import Decimal
from fractions import Fraction

from fastapi.testclient import TestClient

from gastab.api import ApiState, create_app
from gastab.cli import main
from gastab.model import (
    HouseholdProfile,
    HousingStock,
    ModelParams,
    daily_consumption,
    daily_payment,
    household_breakdown,
    national_estimate,
    shower_cost,
    temperature_savings,
)
from gastab.money import D, fixed4, fmt_eur, fmt_eur_total, fmt_kwh, fmt_kwh_1dp, fmt_twh
from gastab.prices import (
    PriceQuote,
    PriceSeries,
    export_series,
    parse_price_feed,
    price_stats,
    validate_series,
)
from gastab.scenarios import FixedPrice, Scenario, evaluate

PARAMS = ModelParams()
PRICE = D(160)


def report(criterion: str, failures: list, detail: str = ""):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] {criterion}"
    if detail:
        line += f" — {detail}"
    if failures:
        line += f" — {'; '.join(str(f) for f in failures)}"
    print(line, flush=True)
    assert not failures, line


def within(value: Decimal, target: Decimal, tolerance: Decimal) -> bool:
    return abs(value - target) <= tolerance


def as_decimal(fraction: Fraction) -> Decimal:
    return Decimal(fraction.numerator) / Decimal(fraction.denominator)


def test_table2_golden():
    """Exact display strings for every published household row at €160/MWh."""
    expected = {
        40: ("31 kWh", "€2.49", "€0.30"),
        60: ("47 kWh", "€3.73", "€0.45"),
        80: ("62 kWh", "€4.98", "€0.60"),
        100: ("78 kWh", "€6.22", "€0.75"),
        120: ("93 kWh", "€7.47", "€0.90"),
        92: ("72 kWh", "€5.72", "€0.69"),
    }
    failures = []
    for area, (kwh, payment, savings) in expected.items():
        profile = HouseholdProfile(area_m2=D(area), temp_reduction_c=D(2))
        b = household_breakdown(profile, PRICE, PARAMS)
        got = (
            fmt_kwh(b.consumption_kwh_per_day),
            fmt_eur(b.payment_eur_per_day),
            fmt_eur(b.savings_eur_per_day),
        )
        if got != (kwh, payment, savings):
            failures.append(f"{area} m²: {got} != {(kwh, payment, savings)}")
    report("household table golden (6 areas × 3 columns)", failures)


def test_table1_golden():
    """National totals: rounded mode reproduces the published table;
    unrounded mode matches the exact-rational oracle."""
    failures = []
    rounded = national_estimate(HousingStock(), PRICE, PARAMS, "rounded")
    if fmt_twh(rounded.total_consumption_twh_per_day) != "1.47 TWh":
        failures.append(f"twh display {fmt_twh(rounded.total_consumption_twh_per_day)}")
    if fmt_eur_total(rounded.total_payment_eur_per_day) != "€117 Mio.":
        failures.append(f"payment display {fmt_eur_total(rounded.total_payment_eur_per_day)}")
    if not within(rounded.total_consumption_twh_per_day, D("1.4688"), D("0.0001")):
        failures.append(f"twh raw {rounded.total_consumption_twh_per_day}")
    if not within(rounded.total_payment_eur_per_day, D("117500000"), D("100000")):
        failures.append(f"payment raw {rounded.total_payment_eur_per_day}")

    # Unrounded companion, from the oracle: 20.4e6 households × 92×140/180 kWh.
    households = Fraction(42_500_000) * Fraction(48, 100)
    per_household = Fraction(92) * 140 / 180
    oracle_twh = as_decimal(households * per_household / 10**9)
    oracle_payment = as_decimal(households * per_household * Fraction(160, 1000) / 2)
    unrounded = national_estimate(HousingStock(), PRICE, PARAMS, "unrounded")
    if not within(unrounded.total_consumption_twh_per_day, oracle_twh, D("0.0001")):
        failures.append(
            f"unrounded twh {unrounded.total_consumption_twh_per_day} vs oracle {oracle_twh}"
        )
    if not within(unrounded.total_payment_eur_per_day, D("116800000"), D("100000")):
        failures.append(f"unrounded payment {unrounded.total_payment_eur_per_day}")
    if not within(unrounded.total_payment_eur_per_day, oracle_payment, D("1")):
        failures.append("unrounded payment drifts from oracle")
    report(
        "national table golden (rounded 1.47 TWh / €117 Mio.; unrounded oracle)",
        failures,
        detail=f"unrounded {fixed4(unrounded.total_consumption_twh_per_day)} TWh, "
        f"€{(unrounded.total_payment_eur_per_day / 1_000_000).quantize(D('0.1'))}M",
    )


def test_savings_aggregates(capsys):
    """National daily savings, the 27-day projection, and the ×5 scale-up."""
    failures = []
    germany = evaluate(
        Scenario(label="de", price_source=FixedPrice(PRICE), stock=HousingStock()),
        PARAMS,
    )
    if not within(germany.daily_savings_eur, D("14100000"), D("50000")):
        failures.append(f"daily {germany.daily_savings_eur}")
    if not within(germany.cumulative_savings_eur, D("380700000"), D("1000000")):
        failures.append(f"cumulative {germany.cumulative_savings_eur}")

    europe = evaluate(
        Scenario(
            label="eu",
            price_source=FixedPrice(PRICE),
            stock=HousingStock(),
            europe_multiplier=D(5),
        ),
        PARAMS,
    )
    if not within(europe.daily_savings_eur, D("70500000"), D("300000")):
        failures.append(f"europe daily {europe.daily_savings_eur}")
    if not (D("1.8e9") <= europe.cumulative_savings_eur <= D("2.0e9")):
        failures.append(f"europe cumulative {europe.cumulative_savings_eur}")
    if not any("1.8" in note for note in europe.notes):
        failures.append("missing horizon-discrepancy note on europe scenario")

    # The note must reach operator-facing output, not just the result object.
    code = main(
        ["scenario", "--national", "--price", "160", "--europe-multiplier", "5"]
    )
    out = capsys.readouterr().out
    if code != 0 or "1.8" not in out:
        failures.append("CLI scenario output lacks the discrepancy note")
    report(
        "savings aggregates (14.1M/day, 380.7M/27d, ×5 → 70.5M/day, 1.8–2.0B)",
        failures,
        detail=f"europe cumulative €{(europe.cumulative_savings_eur / D('1e9')).quantize(D('0.001'))}B",
    )


def test_shower():
    failures = []
    cost = shower_cost(PRICE, PARAMS)
    if fmt_kwh_1dp(cost.kwh_per_shower) != "1.5 kWh":
        failures.append(f"energy display {fmt_kwh_1dp(cost.kwh_per_shower)}")
    if fmt_eur(cost.eur_per_shower) != "€0.12":
        failures.append(f"cost display {fmt_eur(cost.eur_per_shower)}")
    if not within(cost.kwh_per_shower, D("1.5068"), D("0.0001")):
        failures.append(f"energy raw {cost.kwh_per_shower}")
    if not within(cost.eur_per_shower, D("0.1205"), D("0.0005")):
        failures.append(f"cost raw {cost.eur_per_shower}")
    report("shower (1.5 kWh, €0.12 per shower)", failures)


def test_figure_stats_on_fixture(fixture_series):
    failures = []
    stats = price_stats(fixture_series, date(2022, 2, 24))
    if not (D(78) <= stats.pre_mean <= D(82)):
        failures.append(f"pre mean {stats.pre_mean}")
    if stats.post_latest != D("160.0"):
        failures.append(f"latest {stats.post_latest}")
    if not (D("1.95") <= stats.ratio <= D("2.05")):
        failures.append(f"ratio {stats.ratio}")
    report(
        "price-doubling statistics on shipped fixture",
        failures,
        detail=f"pre {stats.pre_mean}, latest {stats.post_latest}, ratio {stats.ratio}",
    )


def _random_series(rng: random.Random) -> PriceSeries:
    start = date(2021, 1, 1).toordinal()
    days = rng.sample(range(start, start + 2000), rng.randint(1, 30))
    quotes = tuple(
        PriceQuote(date.fromordinal(day), Decimal(rng.randint(1, 50_000)) / 100)
        for day in sorted(days)
    )
    return PriceSeries(quotes=quotes)


def test_property_suite():
    """Randomized laws at the 4-digit fixed-point grid (seeded, offline)."""
    rng = random.Random(20220304)
    failures = []

    for i in range(100):
        series = _random_series(rng)
        fmt = "csv" if i % 2 == 0 else "json"
        again = validate_series(parse_price_feed(export_series(series, fmt), fmt))
        if again.quotes != series.quotes:
            failures.append(f"round-trip #{i} ({fmt})")
        if validate_series(again) != again:
            failures.append(f"idempotence #{i}")

    for i in range(1000):
        area = Decimal(rng.randint(1, 1_000_000)) / 100
        k = Decimal(rng.randint(1, 10_000)) / 100
        if fixed4(daily_consumption(area * k, PARAMS)) != fixed4(
            k * daily_consumption(area, PARAMS)
        ):
            failures.append(f"linearity #{i}")
            break

    for i in range(1000):
        c = Decimal(rng.randint(1, 1_000_000)) / 100
        p = Decimal(rng.randint(1, 100_000)) / 100
        s = Decimal(rng.randint(1, 100)) / 100
        base = daily_payment(c, p, s)
        if fixed4(daily_payment(2 * c, p, s)) != fixed4(2 * base):
            failures.append(f"bilinearity-consumption #{i}")
            break
        if fixed4(daily_payment(c, 2 * p, s)) != fixed4(2 * base):
            failures.append(f"bilinearity-price #{i}")
            break
        reduction = Decimal(rng.randint(0, 400)) / 10
        savings = temperature_savings(base, reduction, PARAMS)
        if not (0 <= savings <= base):
            failures.append(f"savings clamp #{i}")
            break

    for i in range(50):
        stock = HousingStock(
            n_apartments=rng.randint(1, 50_000_000),
            avg_area_m2=Decimal(rng.randint(2000, 20_000)) / 100,
            gas_heating_share=Decimal(rng.randint(1, 100)) / 100,
        )
        price = Decimal(rng.randint(1, 50_000)) / 100
        estimate = national_estimate(stock, price, PARAMS, "unrounded")
        per_household = daily_payment(
            daily_consumption(stock.avg_area_m2, PARAMS), price, PARAMS.russian_share
        )
        product = estimate.gas_heated_households * per_household
        if abs(estimate.total_payment_eur_per_day - product) > D("0.0001"):
            failures.append(f"national consistency #{i}")
            break

    report(
        "property suite (100 round-trips, 1000 linearity, 1000 bilinearity+clamp, "
        "50 national consistency)",
        failures,
    )


def test_cli_api_parity(capsys, fixture_series):
    """cmd_estimate --json must be field-identical to GET /api/v1/estimate."""
    rng = random.Random(42)
    client = TestClient(create_app(ApiState(series=fixture_series)))
    failures = []
    for i in range(20):
        area = str(Decimal(rng.randint(2000, 20_000)) / 100)
        temp = str(Decimal(rng.choice(range(0, 11))) / 2)
        cold = rng.random() < 0.5
        persons = rng.randint(1, 6)
        price = str(Decimal(rng.randint(5000, 30_000)) / 100)

        params = {
            "area_m2": area,
            "temp_reduction_c": temp,
            "persons": str(persons),
            "price_eur_mwh": price,
            "cold_showers": "true" if cold else "false",
        }
        api_payload = client.get("/api/v1/estimate", params=params).json()

        argv = [
            "estimate", "--area", area, "--temp-reduction", temp,
            "--persons", str(persons), "--price", price, "--json",
        ]
        if cold:
            argv.append("--cold-showers")
        code = main(argv)
        cli_payload = json.loads(capsys.readouterr().out)
        if code != 0 or cli_payload != api_payload:
            failures.append(f"profile #{i} (area {area}, temp {temp})")
    report("CLI/API parity on 20 randomized profiles", failures)
