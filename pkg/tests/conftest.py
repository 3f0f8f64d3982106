import pytest

from app.cycles.space import CycleSystem, enumerate_isometric_cycles
from app.embed.rotation import Embedding
from app.io.formats import parse_grf
from tests.graphs import SEVEN_GRF, complete, g10, g12


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def k5_cycles(k5) -> CycleSystem:
    return enumerate_isometric_cycles(k5)


@pytest.fixture
def seven():
    return parse_grf(SEVEN_GRF)


@pytest.fixture
def g10_embedding():
    g, kept, rim = g10()
    return Embedding.from_cycles(g, kept, rim)


@pytest.fixture
def g12_embedding():
    g, kept, rim = g12()
    return Embedding.from_cycles(g, kept, rim)
