import random

import pytest

from app_settings import AppSettings
from scl import SclFlavorFactory
from symplectic import standard_form, transvection, chain_curves


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def settings():
    return AppSettings(log_level="WARNING", n_jobs=1, default_seed=7)


@pytest.fixture(autouse=True)
def _fresh_flavor_cache():
    SclFlavorFactory.clear_cache()
    yield
    SclFlavorFactory.clear_cache()


@pytest.fixture
def torus_twists():
    """Images of the twists about a and b on the torus"""
    form = standard_form(1)
    a, b, _ = chain_curves(1)
    return transvection(form, a), transvection(form, b)


def random_positive_text(rng: random.Random, genus: int, max_length: int, separating: bool = True) -> str:
    """Random vanishing-cycle word over chain letters and, for genus >= 2, separating letters"""
    letters = []
    for _ in range(rng.randint(0, max_length)):
        if separating and genus >= 2 and rng.random() < 0.15:
            letters.append(f"S{{{rng.randint(1, genus - 1)}}}")
        else:
            letters.append(f"c{rng.randint(1, 2 * genus + 1)}")
    return " ".join(letters)


@pytest.fixture
def positive_text():
    return random_positive_text
