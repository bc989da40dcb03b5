import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from triform import enumerate_spectrum

import oracles


@pytest.fixture(scope="session")
def spectrum_2700():
    return enumerate_spectrum(2700)


@pytest.fixture(scope="session")
def naive_2700():
    return oracles.naive_levels(2700)


@pytest.fixture(scope="session")
def oracle_reps_5000():
    return oracles.all_reps_by_product(5000)
