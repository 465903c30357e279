import json
import os
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def benchmarks():
    return Path(os.environ.get("WPX_BENCHMARKS", ROOT / "benchmarks"))


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "schema" / "report.schema.json").read_text())


@pytest.fixture(scope="session")
def sub_schema(schema):
    def pick(name):
        return {"$schema": schema["$schema"], "$defs": schema["$defs"], "$ref": f"#/$defs/{name}"}

    return pick
