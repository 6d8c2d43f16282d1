from __future__ import annotations

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from knotile.tiles import KnotMosaic, Mosaic

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=100
)
settings.register_profile("thorough", parent=settings.get_profile("default"), max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

MOSAICS = Path(__file__).resolve().parents[1] / "src" / "knotile" / "data" / "mosaics"


def read_fixture(path: Path) -> tuple[KnotMosaic, dict[str, str]]:
    """The mosaic of a bundled ``.mosaic`` file and its ``# key: value`` header lines."""
    text = path.read_text()
    header = {}
    for line in text.splitlines():
        if line.startswith("#") and ":" in line:
            k, _, v = line[1:].partition(":")
            header[k.strip()] = v.strip()
    return KnotMosaic.of(Mosaic.parse(text)), header


def fixture(name: str) -> KnotMosaic:
    return read_fixture(MOSAICS / f"{name}.mosaic")[0]


@pytest.fixture
def circle() -> KnotMosaic:
    return KnotMosaic.of(Mosaic.parse("21/34"))


@pytest.fixture
def trefoil() -> KnotMosaic:
    return fixture("trefoil-t12")
