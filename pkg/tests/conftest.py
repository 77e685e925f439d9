import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../')))

import pytest
from fastapi.testclient import TestClient

from main import app
from src.services.invpoly import parse_polynomial


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive grids over n in {2, 3, 4} and exponents 2..6')


@pytest.fixture(scope="module")
def client():
    yield TestClient(app)


@pytest.fixture(scope="module")
def chain345():
    return {"polynomial": "x1^3*x2 + x2^4*x3 + x3^5"}


@pytest.fixture(scope="module")
def mixed_example():
    # c = 1 for f, c^T = 2 for the transpose
    return {"polynomial": "x1^5*x2 + x2^2 + x3^3"}


@pytest.fixture(scope="module")
def e6_tilde():
    return parse_polynomial("x1^2*x2 + x2^3 + x3^3")
