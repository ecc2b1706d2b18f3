from fractions import Fraction

import pytest

from metaplectic.characters import UnitarySymbolTable


@pytest.fixture(scope="session")
def table():
    """u generic, xi quadratic, eta of order 2 (e.g. F = Q_3)."""
    return UnitarySymbolTable((("u", None), ("xi", 2)), eta_order=2)


@pytest.fixture(scope="session")
def split_table():
    """-1 is a square in F, so eta is trivial (e.g. F = Q_5)."""
    return UnitarySymbolTable((("u", None),), eta_order=1)


def q(x):
    return Fraction(x)
