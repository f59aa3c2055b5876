"""Operator CLI: ingest feeds, inspect stats, run estimates and scenarios.

Subcommands:

    ingest         fetch a feed (file, URL, or shipped fixture) into the store
    stats          pre/post split statistics of the stored series
    estimate       one household's daily breakdown
    national       the national aggregation in both rounding modes
    scenario       evaluate/compare what-if scenarios (inline or from a file)
    export-figure  plot-ready series with a rolling mean column
    serve          run the JSON HTTP API

Reporting subcommands take --json and then emit exactly the payload the
HTTP API would return for the same inputs (export-figure's data output
has --format json instead; serve produces no report). Exit code is 0 iff
no error was written to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import date, timedelta
from decimal import Decimal
from pathlib import Path

from . import __version__
from .api import ApiState, create_app
from .config import CliConfig, ConfigError, resolve_config
from .fetch import DEFAULT_FIXTURE, FeedCache, FeedSource, FetchError, fetch
from .model import (
    HouseholdProfile,
    HousingStock,
    household_breakdown,
    national_estimate,
)
from .money import (
    D,
    fmt_count_millions,
    fmt_eur,
    fmt_eur_total,
    fmt_kwh,
    fmt_percent,
    fmt_price_mwh,
    fmt_twh,
    raw,
)
from .prices import (
    FeedParseError,
    PriceLookupError,
    PriceStore,
    SeriesValidationError,
    parse_price_feed,
    price_stats,
    validate_series,
)
from .scenarios import (
    ComparisonRow,
    FixedPrice,
    ScenarioError,
    SeriesPrice,
    compare,
    evaluate,
    load_scenarios,
    scenario_from_mapping,
)
from .serialize import (
    dumps,
    estimate_payload,
    national_payload,
    scenario_payload,
    stats_payload,
)

CliError = (
    ConfigError,
    FeedParseError,
    SeriesValidationError,
    PriceLookupError,
    FetchError,
    ScenarioError,
    ValueError,
    OSError,
)


def _money(value: Decimal) -> str:
    return fmt_eur_total(value) if abs(value) >= 1_000_000 else fmt_eur(value)


def _resolve(args: argparse.Namespace, **flag_overrides) -> CliConfig:
    flags = dict(flag_overrides)
    if getattr(args, "store", None):
        flags["store_path"] = args.store
    return resolve_config(flags=flags, config_path=getattr(args, "config", None))


def _store_price(cfg: CliConfig, args: argparse.Namespace):
    """Price source from --price or the store's latest quote."""
    if getattr(args, "price", None) is not None:
        return FixedPrice(D(args.price))
    series = PriceStore(cfg.store_path).load()
    if series is None:
        raise PriceLookupError(
            f"no --price given and no series stored at {cfg.store_path}"
        )
    return SeriesPrice(series, series.last_date)


# --- subcommands -----------------------------------------------------------


def cmd_ingest(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    if args.fixture is not None:
        source = FeedSource("fixture", args.fixture or DEFAULT_FIXTURE, args.format)
    else:
        kind = "http" if args.source.startswith(("http://", "https://")) else "file"
        source = FeedSource(kind, args.source, args.format, cache_ttl=args.ttl)
    cache = FeedCache(cfg.cache_dir) if source.kind == "http" else None
    result = fetch(source, cache=cache)
    parsed = parse_price_feed(result.body, source.format, source_label=source.location)
    new = validate_series(parsed)
    PriceStore(cfg.store_path).ingest(new)
    if args.json:
        print(
            dumps(
                {
                    "ingested": len(new),
                    "from": new.first_date.isoformat(),
                    "to": new.last_date.isoformat(),
                    "origin": result.origin,
                    "stale": result.stale,
                }
            )
        )
        return 0
    print(
        f"ingested {len(new)} quotes "
        f"({new.first_date.isoformat()}..{new.last_date.isoformat()})"
    )
    if result.stale:
        print("warning: feed served from stale cache")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    cfg = _resolve(args, split_date=args.split_date)
    series = PriceStore(cfg.store_path).load()
    if series is None:
        raise PriceLookupError(f"no series stored at {cfg.store_path}")
    stats = price_stats(series, cfg.split_date)
    if args.json:
        print(dumps(stats_payload(stats)))
        return 0
    print(f"quotes            {len(series)} ({series.first_date}..{series.last_date})")
    print(f"split date        {stats.split_date.isoformat()}")
    print(f"pre-split mean    {fmt_price_mwh(stats.pre_mean)}")
    print(f"latest post       {fmt_price_mwh(stats.post_latest)}")
    print(f"ratio             {stats.ratio.quantize(Decimal('0.01'))} (pre mean -> latest)")
    return 0


def cmd_estimate(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    profile = HouseholdProfile(
        area_m2=D(args.area),
        temp_reduction_c=D(args.temp_reduction),
        cold_showers=args.cold_showers,
        persons=args.persons,
    )
    price, stale = _store_price(cfg, args).resolve()
    breakdown = household_breakdown(profile, price, cfg.params)
    if args.json:
        print(dumps(estimate_payload(profile, price, breakdown, stale=stale)))
        return 0
    print("consumption  payment  temp savings  shower savings")
    print(
        f"{fmt_kwh(breakdown.consumption_kwh_per_day)}  "
        f"{fmt_eur(breakdown.payment_eur_per_day)}  "
        f"{fmt_eur(breakdown.savings_eur_per_day)}  "
        f"{fmt_eur(breakdown.shower_savings_eur_per_day)}"
    )
    print(f"price: {fmt_price_mwh(price)}" + ("  [stale]" if stale else ""))
    return 0


def cmd_national(args: argparse.Namespace) -> int:
    cfg = _resolve(
        args,
        n_apartments=args.n_apartments,
        avg_area_m2=args.avg_area,
        gas_heating_share=args.gas_share,
    )
    price, stale = _store_price(cfg, args).resolve()
    estimate = national_estimate(
        cfg.stock,
        price,
        cfg.params,
        per_household_kwh_rounding=args.rounding_mode,
        temp_reduction_c=D(args.temp_reduction),
    )
    notes = [
        (
            "rounded mode scales the whole-kWh household figure (the published "
            "total); unrounded mode keeps the continuous figure"
        ),
    ]
    if cfg.stock == HousingStock():
        notes.append(
            f"gas-heated households: {fmt_count_millions(estimate.gas_heated_households)} "
            "(42.5 Mio. × 48%); summaries often quote 20.5 Mio."
        )
    if args.json:
        print(
            dumps(
                {
                    "stock": {
                        "n_apartments": cfg.stock.n_apartments,
                        "avg_area_m2": raw(cfg.stock.avg_area_m2),
                        "gas_heating_share": raw(cfg.stock.gas_heating_share),
                    },
                    "price_eur_mwh": raw(price),
                    "rounding_mode": args.rounding_mode,
                    "estimate": national_payload(estimate),
                    "stale": stale,
                    "notes": notes,
                }
            )
        )
        return 0
    share = cfg.params.russian_share
    per_household = (
        estimate.total_consumption_twh_per_day.scaleb(9) / estimate.gas_heated_households
        if estimate.gas_heated_households
        else D(0)
    )
    print(f"apartments                     {fmt_count_millions(D(cfg.stock.n_apartments))}")
    print(f"average apartment size         {cfg.stock.avg_area_m2} m²")
    print(f"gas-heated share               {fmt_percent(cfg.stock.gas_heating_share)}")
    print(f"gas-heated households          {fmt_count_millions(estimate.gas_heated_households)}")
    print(f"consumption per household      {fmt_kwh(per_household)}/day ({args.rounding_mode} mode)")
    print(f"national consumption           {fmt_twh(estimate.total_consumption_twh_per_day)}/day")
    print(f"payments at {fmt_percent(share)} import share  {fmt_eur_total(estimate.total_payment_eur_per_day)}/day")
    print(f"savings at {args.temp_reduction}°C reduction      {fmt_eur_total(estimate.total_savings_eur_per_day)}/day")
    print(f"spot price                     {fmt_price_mwh(price)}" + ("  [stale]" if stale else ""))
    for note in notes:
        print(f"note: {note}")
    return 0


def _print_comparison(rows: list[ComparisonRow]) -> None:
    width = max(len(row.label) for row in rows)
    print(
        f"{'scenario':<{width}}  payment/day  savings/day  "
        "cumulative  delta vs baseline"
    )
    for row in rows:
        print(
            f"{row.label:<{width}}  {_money(row.payment_eur_per_day)}  "
            f"{_money(row.savings_eur_per_day)}  "
            f"{_money(row.cumulative_savings_eur)}  "
            f"{_money(row.delta_vs_baseline_eur_per_day)}"
        )


def cmd_scenario(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    default_price = None
    if args.price is not None:
        default_price = FixedPrice(D(args.price))
    else:
        series = PriceStore(cfg.store_path).load()
        if series is not None:
            default_price = SeriesPrice(series, series.last_date)

    if args.file:
        scenarios = load_scenarios(
            args.file, default_price=default_price, default_stock=cfg.stock
        )
    else:
        values: dict[str, object] = {
            "temp_reduction_c": args.temp_reduction,
            "days_remaining": args.days_remaining,
            "europe_multiplier": args.europe_multiplier,
        }
        if args.national:
            values["national"] = True
            values["rounding_mode"] = args.rounding_mode
        elif args.area is not None:
            values["area_m2"] = args.area
            values["cold_showers"] = args.cold_showers
            values["persons"] = args.persons
        else:
            raise ScenarioError("give --area or --national (or --file)")
        scenarios = [
            scenario_from_mapping(
                args.label, values, default_price=default_price, default_stock=cfg.stock
            )
        ]

    results = [evaluate(s, cfg.params) for s in scenarios]
    rows = compare(scenarios[0], scenarios[1:], cfg.params)

    if args.out:
        from .scenarios import comparison_csv, comparison_dicts

        out = Path(args.out)
        if out.suffix == ".json":
            out.write_text(json.dumps(comparison_dicts(rows), indent=2) + "\n")
        else:
            out.write_text(comparison_csv(rows))
        print(f"wrote {out}")
        return 0
    if args.json:
        payload = [scenario_payload(r) for r in results]
        print(dumps(payload[0] if len(payload) == 1 else payload))
        return 0
    _print_comparison(rows)
    for result in results:
        for note in result.notes:
            print(f"note [{result.label}]: {note}")
    return 0


def cmd_export_figure(args: argparse.Namespace) -> int:
    cfg = _resolve(args)
    series = PriceStore(cfg.store_path).load()
    if series is None:
        raise PriceLookupError(f"no series stored at {cfg.store_path}")
    range_from = date.fromisoformat(args.range_from) if args.range_from else series.first_date
    range_to = date.fromisoformat(args.range_to) if args.range_to else series.last_date
    selected = [q for q in series.quotes if range_from <= q.date <= range_to]
    if not selected:
        raise PriceLookupError(
            f"empty range {range_from.isoformat()}..{range_to.isoformat()}"
        )
    window = timedelta(days=args.window - 1)
    rows = []
    for quote in selected:
        in_window = [q.price for q in series.quotes if quote.date - window <= q.date <= quote.date]
        mean = sum(in_window, start=Decimal(0)) / len(in_window)
        rows.append((quote, mean))
    if args.format == "csv":
        text = "".join(
            f"{q.date.isoformat()},{q.price},{raw(mean)}\n" for q, mean in rows
        )
    else:
        items = ",".join(
            f'{{"date":"{q.date.isoformat()}","price_eur_mwh":{q.price},'
            f'"rolling_mean":{raw(mean)}}}'
            for q, mean in rows
        )
        text = f"[{items}]"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out} ({len(rows)} rows)")
    else:
        sys.stdout.write(text)
    return 0


def build_api_state(cfg: CliConfig, refresh: bool = False) -> ApiState:
    """Snapshot the service state, optionally refreshing from the feed.

    With ``refresh`` the configured feed is fetched (through the cache for
    http sources) and replaces the store; a stale cache fallback carries
    its flag into every API response.
    """
    stale = False
    store = PriceStore(cfg.store_path)
    if refresh:
        cache = FeedCache(cfg.cache_dir) if cfg.feed.kind == "http" else None
        result = fetch(cfg.feed, cache=cache)
        series = store.replace(
            parse_price_feed(result.body, cfg.feed.format, source_label=cfg.feed.location)
        )
        stale = result.stale
    else:
        series = store.load()
    return ApiState(
        series=series,
        stale=stale,
        split_date=cfg.split_date,
        params=cfg.params,
        stock=cfg.stock,
        cors_origins=cfg.cors_origins,
        ui_dir=cfg.ui_dir,
    )


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    cfg = _resolve(args, bind=args.bind, split_date=args.split_date, ui_dir=args.ui)
    state = build_api_state(cfg, refresh=args.refresh)
    host, _, port = cfg.bind.partition(":")
    uvicorn.run(create_app(state), host=host or "127.0.0.1", port=int(port or 8000))
    return 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gastab",
        description="Daily gas payments and savings scenarios from spot prices.",
    )
    parser.add_argument("--version", action="version", version=f"gastab {__version__}")
    parser.add_argument("--config", help="path to flat key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_store(p):
        p.add_argument("--store", help="price store CSV path")

    p = sub.add_parser("ingest", help="fetch a feed into the price store")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--source", help="feed path or http(s) URL")
    group.add_argument(
        "--fixture",
        nargs="?",
        const=DEFAULT_FIXTURE,
        help=f"use a shipped fixture (default {DEFAULT_FIXTURE})",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--ttl", type=int, default=0, help="cache TTL seconds for http sources")
    p.add_argument("--json", action="store_true")
    add_store(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stats", help="pre/post split statistics")
    p.add_argument("--split-date", dest="split_date", help="YYYY-MM-DD (default 2022-02-24)")
    p.add_argument("--json", action="store_true")
    add_store(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("estimate", help="daily breakdown for one household")
    p.add_argument("--area", required=True, help="floor area in m²")
    p.add_argument("--temp-reduction", dest="temp_reduction", default="0", help="°C")
    p.add_argument("--cold-showers", dest="cold_showers", action="store_true")
    p.add_argument("--persons", type=int, default=1)
    p.add_argument("--price", help="spot price EUR/MWh (default: store's latest)")
    p.add_argument("--json", action="store_true")
    add_store(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("national", help="national aggregation report")
    p.add_argument("--price", help="spot price EUR/MWh (default: store's latest)")
    p.add_argument(
        "--rounding-mode",
        dest="rounding_mode",
        choices=("rounded", "unrounded"),
        default="rounded",
    )
    p.add_argument("--temp-reduction", dest="temp_reduction", default="2", help="°C")
    p.add_argument("--n-apartments", dest="n_apartments", type=int)
    p.add_argument("--avg-area", dest="avg_area")
    p.add_argument("--gas-share", dest="gas_share")
    p.add_argument("--json", action="store_true")
    add_store(p)
    p.set_defaults(func=cmd_national)

    p = sub.add_parser("scenario", help="evaluate/compare what-if scenarios")
    p.add_argument("--file", help="INI file, one scenario per section (first = baseline)")
    p.add_argument("--label", default="scenario")
    p.add_argument("--area", help="household floor area in m²")
    p.add_argument("--national", action="store_true")
    p.add_argument("--temp-reduction", dest="temp_reduction", default="2")
    p.add_argument("--cold-showers", dest="cold_showers", action="store_true")
    p.add_argument("--persons", type=int, default=1)
    p.add_argument("--days-remaining", dest="days_remaining", type=int, default=27)
    p.add_argument("--europe-multiplier", dest="europe_multiplier", default="1")
    p.add_argument(
        "--rounding-mode",
        dest="rounding_mode",
        choices=("rounded", "unrounded"),
        default="rounded",
    )
    p.add_argument("--price", help="spot price EUR/MWh (default: store's latest)")
    p.add_argument("--out", help="write the comparison table to a .csv or .json file")
    p.add_argument("--json", action="store_true")
    add_store(p)
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("export-figure", help="plot-ready series with rolling mean")
    p.add_argument("--from", dest="range_from", help="YYYY-MM-DD")
    p.add_argument("--to", dest="range_to", help="YYYY-MM-DD")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--window", type=int, default=7, help="rolling mean window in days")
    p.add_argument("--out", help="output path (default stdout)")
    add_store(p)
    p.set_defaults(func=cmd_export_figure)

    p = sub.add_parser("serve", help="run the JSON HTTP API")
    p.add_argument("--bind", help="host:port (default 127.0.0.1:8000)")
    p.add_argument("--split-date", dest="split_date")
    p.add_argument("--ui", help="directory of built UI assets to serve at /")
    p.add_argument(
        "--refresh",
        action="store_true",
        help="fetch the configured feed into the store before serving",
    )
    add_store(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
