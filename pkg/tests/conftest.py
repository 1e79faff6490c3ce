import pytest

from ssgenus4 import BACKEND
from ssgenus4.field import make_field


def pytest_report_header(config):
    return f"ssgenus4 backend: {BACKEND}"


@pytest.fixture(scope="session")
def f8():
    """GF(8) with modulus x^3 + x + 1."""
    return make_field(3)


@pytest.fixture(scope="session")
def f2048():
    """GF(2048) with modulus x^11 + x^2 + 1; x is primitive."""
    return make_field(11)
