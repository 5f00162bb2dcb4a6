from pathlib import Path

import pytest

from foldfront.engine.design_loader import load_design
from foldfront.engine.exporters import read_polyline_csv
from foldfront.engine.report import analyze_design

DATA_DIR = Path(__file__).parent / "data"

SAMPLE_DESIGNS = [
    "decaying_single",
    "straight_pass",
    "uniform_pair",
    "growing_pair",
    "zigzag_asymmetric",
    "straight_quad",
    "curved_quad",
]


@pytest.fixture
def load_named_design():
    def _load(name: str):
        return load_design(DATA_DIR / "designs" / f"{name}.json")
    return _load


@pytest.fixture
def design_path():
    def _path(name: str) -> Path:
        return DATA_DIR / "designs" / f"{name}.json"
    return _path


@pytest.fixture
def polyline_path():
    def _path(name: str) -> Path:
        return DATA_DIR / "polylines" / f"{name}.csv"
    return _path


@pytest.fixture
def load_named_polyline(polyline_path):
    def _load(name: str):
        return read_polyline_csv(polyline_path(name))
    return _load


@pytest.fixture
def analyze_named_design(load_named_design):
    def _analyze(name: str):
        return analyze_design(load_named_design(name))
    return _analyze
