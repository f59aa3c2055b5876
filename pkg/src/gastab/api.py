"""Read-only JSON HTTP API over the price store, cost model, and scenarios.

Three endpoints under /api/v1:

    GET  /api/v1/prices?from=DATE&to=DATE   series + pre/post statistics
    GET  /api/v1/estimate?area_m2=...       one household's breakdown
    POST /api/v1/scenario                   evaluate a scenario body

Every error response is ``{"code", "message", "detail"?}`` with a code
from the closed set {bad_request, no_data}. Responses are pure
projections of module outputs: same store state and query, same bytes.
Query and body values are parsed by hand (not by framework coercion) so
error shapes stay uniform and decimals never pass through binary floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date
from decimal import Decimal
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .config import DEFAULT_SPLIT_DATE
from .model import HouseholdProfile, HousingStock, ModelParams, household_breakdown
from .money import parse_decimal
from .prices import PriceLookupError, PriceSeries, price_stats
from .scenarios import ScenarioError, SeriesPrice, evaluate, scenario_from_mapping
from .serialize import (
    error_payload,
    estimate_payload,
    prices_payload,
    scenario_payload,
)


@dataclass
class ApiState:
    """Immutable-ish snapshot the handlers read from."""

    series: PriceSeries | None = None
    stale: bool = False
    split_date: date = DEFAULT_SPLIT_DATE
    params: ModelParams = field(default_factory=ModelParams)
    stock: HousingStock = field(default_factory=HousingStock)
    cors_origins: list[str] = field(default_factory=lambda: ["*"])
    ui_dir: Path | None = None


class _BadRequest(Exception):
    def __init__(self, message: str, field_name: str | None = None):
        self.message = message
        self.field_name = field_name


def _bad_request(message: str, field_name: str | None = None) -> JSONResponse:
    detail = {"field": field_name} if field_name else None
    return JSONResponse(
        status_code=400, content=error_payload("bad_request", message, detail)
    )


def _no_data(message: str) -> JSONResponse:
    return JSONResponse(status_code=404, content=error_payload("no_data", message))


def _parse_date(value: str | None, field_name: str) -> date | None:
    if value is None:
        return None
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise _BadRequest(f"bad date {value!r}", field_name) from None


def _parse_positive_decimal(value: str, field_name: str) -> Decimal:
    try:
        number = parse_decimal(value)
    except ValueError:
        raise _BadRequest(f"bad number {value!r}", field_name) from None
    if number <= 0:
        raise _BadRequest(f"{field_name} must be positive", field_name)
    return number


def _parse_bool(value: str, field_name: str) -> bool:
    text = value.strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise _BadRequest(f"bad boolean {value!r}", field_name)


def create_app(state: ApiState) -> FastAPI:
    app = FastAPI(title="gastab", version=__version__)
    if state.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=state.cors_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(_BadRequest)
    async def bad_request_handler(request: Request, exc: _BadRequest):
        return _bad_request(exc.message, exc.field_name)

    def current_price(override: Decimal | None):
        """Price from the override or the store's latest quote."""
        if override is not None:
            return override, False
        if state.series is None:
            return None, False
        return state.series.quotes[-1].price, state.stale

    @app.get("/api/v1/prices")
    async def get_prices(request: Request):
        if state.series is None:
            return _no_data("no price series loaded; ingest a feed first")
        params = request.query_params
        range_from = _parse_date(params.get("from"), "from")
        range_to = _parse_date(params.get("to"), "to")
        try:
            stats = price_stats(state.series, state.split_date)
        except PriceLookupError:
            stats = None
        return JSONResponse(
            content=prices_payload(
                state.series,
                stats,
                stale=state.stale,
                range_from=range_from,
                range_to=range_to,
            )
        )

    @app.get("/api/v1/estimate")
    async def get_estimate(request: Request):
        params = request.query_params
        area_text = params.get("area_m2")
        if area_text is None:
            raise _BadRequest("area_m2 is required", "area_m2")
        area = _parse_positive_decimal(area_text, "area_m2")

        reduction = Decimal(0)
        if params.get("temp_reduction_c") is not None:
            try:
                reduction = parse_decimal(params["temp_reduction_c"])
            except ValueError:
                raise _BadRequest(
                    f"bad number {params['temp_reduction_c']!r}", "temp_reduction_c"
                ) from None
            if reduction < 0:
                raise _BadRequest("temp_reduction_c must be >= 0", "temp_reduction_c")

        cold_showers = False
        if params.get("cold_showers") is not None:
            cold_showers = _parse_bool(params["cold_showers"], "cold_showers")

        persons = 1
        if params.get("persons") is not None:
            try:
                persons = int(params["persons"])
            except ValueError:
                raise _BadRequest(f"bad integer {params['persons']!r}", "persons") from None
            if persons < 1:
                raise _BadRequest("persons must be >= 1", "persons")

        override = None
        if params.get("price_eur_mwh") is not None:
            override = _parse_positive_decimal(params["price_eur_mwh"], "price_eur_mwh")

        price, stale = current_price(override)
        if price is None:
            return _no_data("no price available; ingest a feed or pass price_eur_mwh")

        profile = HouseholdProfile(
            area_m2=area,
            temp_reduction_c=reduction,
            cold_showers=cold_showers,
            persons=persons,
        )
        breakdown = household_breakdown(profile, price, state.params)
        return JSONResponse(
            content=estimate_payload(profile, price, breakdown, stale=stale)
        )

    @app.post("/api/v1/scenario")
    async def post_scenario(request: Request):
        body = await request.body()
        try:
            # parse_float=Decimal: scenario numbers never touch binary floats.
            payload = json.loads(body, parse_float=Decimal)
        except json.JSONDecodeError as exc:
            raise _BadRequest(f"malformed JSON body: {exc.msg}") from None
        if not isinstance(payload, dict):
            raise _BadRequest("scenario body must be a JSON object")

        default_price = None
        if state.series is not None:
            default_price = SeriesPrice(
                state.series, state.series.last_date, stale=state.stale
            )
        label = str(payload.get("label", "scenario"))
        try:
            scenario = scenario_from_mapping(
                label,
                payload,
                default_price=default_price,
                default_stock=state.stock,
            )
        except ScenarioError as exc:
            if "no price" in str(exc):
                return _no_data(str(exc))
            raise _BadRequest(str(exc)) from None
        except (ValueError, ArithmeticError) as exc:
            raise _BadRequest(str(exc)) from None

        result = evaluate(scenario, state.params)
        return JSONResponse(content=scenario_payload(result))

    if state.ui_dir is not None:
        app.mount("/", StaticFiles(directory=state.ui_dir, html=True), name="ui")

    return app
