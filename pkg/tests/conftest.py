import json
from importlib import resources

import pytest

from ncmorse import chain_lattice, complex_from_dict, morse_from_dict

FIXTURES = resources.files("ncmorse") / "fixtures"


def load_fixture(name: str):
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


@pytest.fixture
def interval():
    return complex_from_dict(load_fixture("interval.json"))


@pytest.fixture
def torus():
    return complex_from_dict(load_fixture("torus.json"))


@pytest.fixture
def circle():
    return complex_from_dict(load_fixture("circle.json"))


@pytest.fixture
def point():
    return complex_from_dict(load_fixture("point.json"))


@pytest.fixture
def interval_lattice(interval):
    return chain_lattice(interval)


@pytest.fixture
def torus_lattice(torus):
    return chain_lattice(torus)


@pytest.fixture
def circle_lattice(circle):
    return chain_lattice(circle)


@pytest.fixture
def point_lattice(point):
    return chain_lattice(point)


@pytest.fixture
def f012():
    return morse_from_dict(load_fixture("interval-f012.json"))


@pytest.fixture
def f021():
    return morse_from_dict(load_fixture("interval-f021.json"))


@pytest.fixture
def torus_order():
    return morse_from_dict(load_fixture("torus-order.json"))


@pytest.fixture
def circle_collapse_f():
    return morse_from_dict(load_fixture("circle-collapse.json"))
