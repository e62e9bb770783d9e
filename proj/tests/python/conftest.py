import json
import os
import pathlib

import pytest

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent.parent
FIXTURES = HERE.parent / "fixtures"
TITLE = "Valley towns split over plan to raise the Harlow Dam"


@pytest.fixture(scope="session")
def article():
    return (FIXTURES / "article" / "river_dam.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def expected_json():
    return (FIXTURES / "article" / "river_dam.expected.json").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "schema" / "analysis.schema.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("SIRENLESS_CLI")
    if not path or not pathlib.Path(path).exists():
        pytest.skip("SIRENLESS_CLI not set")
    return path
