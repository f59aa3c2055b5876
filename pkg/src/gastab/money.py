"""Decimal arithmetic helpers and display rounding.

Money and energy amounts travel through the package as `decimal.Decimal`;
nothing is rounded until a value crosses a serialization or display
boundary. The display rules live here and nowhere else:

* EUR amounts: 2 decimals, half-up ("€5.72")
* EUR totals: whole millions rounded down ("€117 Mio."), switching to
  2-decimal billions rounded down above €1000 Mio. ("€1.90 Mrd.")
* heating energy: whole kWh, half-up ("72 kWh")
* shower energy: 1 decimal kWh ("1.5 kWh")
* national energy: 2 decimals TWh, half-up ("1.47 TWh")
* spot prices: 1 decimal ("160.0 EUR/MWh")
* price ratios: 1 decimal with a times sign ("×2.0")
* household counts: 1 decimal millions, half-up ("20.4 Mio.")

Raw (machine-readable) serializations quantize to 4 fractional digits,
again half-up; internal values keep full precision.
"""

from __future__ import annotations

from decimal import Decimal, InvalidOperation, ROUND_DOWN, ROUND_HALF_UP

ZERO = Decimal(0)
FOUR_PLACES = Decimal("0.0001")
CENTS = Decimal("0.01")
TENTHS = Decimal("0.1")
ONE = Decimal(1)
MILLION = Decimal(1_000_000)
BILLION = Decimal(1_000_000_000)


def D(value: Decimal | int | str | float) -> Decimal:
    """Convert to Decimal without going through binary float precision."""
    if isinstance(value, Decimal):
        return value
    return Decimal(str(value))


def parse_decimal(text: str) -> Decimal:
    """Parse a decimal literal, raising ValueError on junk or non-finite input."""
    try:
        value = Decimal(text.strip())
    except InvalidOperation:
        raise ValueError(f"not a decimal number: {text!r}") from None
    if not value.is_finite():
        raise ValueError(f"not a finite number: {text!r}")
    return value


def fixed4(value: Decimal) -> Decimal:
    """Quantize to the 4-digit fixed-point grid used at raw boundaries."""
    return value.quantize(FOUR_PLACES, rounding=ROUND_HALF_UP)


def raw(value: Decimal) -> str:
    """Raw string form of a quantity: 4 fractional digits, half-up."""
    return str(fixed4(value))


def fmt_eur(value: Decimal) -> str:
    return f"€{value.quantize(CENTS, rounding=ROUND_HALF_UP)}"


def fmt_eur_total(value: Decimal) -> str:
    """Large EUR totals: conservative whole millions, billions past €1000 Mio.

    Rounds toward zero: a published total like €117.5M reads "€117 Mio.",
    understating rather than inflating the claim.
    """
    if abs(value) >= BILLION:
        mrd = (value / BILLION).quantize(CENTS, rounding=ROUND_DOWN)
        return f"€{mrd} Mrd."
    mio = (value / MILLION).to_integral_value(rounding=ROUND_DOWN)
    return f"€{mio} Mio."


def fmt_kwh(value: Decimal) -> str:
    return f"{value.quantize(ONE, rounding=ROUND_HALF_UP)} kWh"


def fmt_kwh_1dp(value: Decimal) -> str:
    return f"{value.quantize(TENTHS, rounding=ROUND_HALF_UP)} kWh"


def fmt_twh(value: Decimal) -> str:
    return f"{value.quantize(CENTS, rounding=ROUND_HALF_UP)} TWh"


def fmt_price_mwh(value: Decimal) -> str:
    return f"{value.quantize(TENTHS, rounding=ROUND_HALF_UP)} EUR/MWh"


def fmt_ratio(value: Decimal) -> str:
    return f"×{value.quantize(TENTHS, rounding=ROUND_HALF_UP)}"


def fmt_count_millions(value: Decimal) -> str:
    return f"{(value / MILLION).quantize(TENTHS, rounding=ROUND_HALF_UP)} Mio."


def fmt_percent(share: Decimal) -> str:
    """Fraction as percent, dropping the decimal when whole ("48 %")."""
    value = share * 100
    if value == value.to_integral_value():
        return f"{value.quantize(ONE)} %"
    return f"{value.quantize(TENTHS, rounding=ROUND_HALF_UP)} %"
