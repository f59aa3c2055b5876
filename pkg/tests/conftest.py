import pytest

from gastab.fetch import fixture_path
from gastab.model import ModelParams
from gastab.prices import parse_price_feed, validate_series


@pytest.fixture(scope="session")
def fixture_text():
    return fixture_path("the_spot_2022.csv").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def fixture_series(fixture_text):
    return validate_series(parse_price_feed(fixture_text, "csv", source_label="fixture"))


@pytest.fixture(scope="session")
def params():
    return ModelParams()
