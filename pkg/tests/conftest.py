import os

import pytest
from hypothesis import HealthCheck, settings

from radalign import enumerate_stable, examples

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "data")

# Acceptance corpus: markings n <= 4, at most 5 edges.
CORPUS_N = (1, 2, 3, 4)
CORPUS_EDGES = 5


@pytest.fixture(scope="session")
def corpus():
    curves = []
    for n in CORPUS_N:
        curves.extend(enumerate_stable(n, CORPUS_EDGES).curves)
    return curves


@pytest.fixture
def three_edge():
    return examples.three_edge_curve()


@pytest.fixture
def four_spoke():
    return examples.four_spoke_curve()


@pytest.fixture
def three_spoke():
    return examples.three_spoke_curve()


@pytest.fixture
def data_path():
    return lambda name: os.path.join(DATA, name)
