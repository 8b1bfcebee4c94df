"""Shared fixtures."""

from pathlib import Path

import pytest

from nlie.core.algebra import abelian, direct_sum, heisenberg
from nlie.core.fileformat import load_algebra

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def h21():
    return heisenberg(2, 1)


@pytest.fixture
def perturbed_h21():
    return load_algebra(FIXTURES / "perturbed_heisenberg_2_1.json")


@pytest.fixture
def fixture_algebras():
    """Every algebra fixture that satisfies the axioms."""
    return {
        "heisenberg_2_1": load_algebra(FIXTURES / "heisenberg_2_1.json"),
        "abelian_3": load_algebra(FIXTURES / "abelian_3.json"),
        "h21_plus_f2": direct_sum(heisenberg(2, 1), abelian(2, 2)),
        "h31_plus_h31": direct_sum(heisenberg(3, 1), heisenberg(3, 1)),
    }
