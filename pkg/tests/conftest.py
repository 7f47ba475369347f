import random

import pytest

from nonrep.corpus import all_connected_graphs


@pytest.fixture(scope="session")
def small_connected_graphs():
    """Every connected graph on at most 7 vertices, up to isomorphism."""
    return all_connected_graphs(7)


@pytest.fixture()
def rng():
    return random.Random(20240817)
