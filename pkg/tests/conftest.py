import pytest

from utils.config import Config
from utils.ff import make_extension, prime_field
from utils.lsv import build_spec, gens_S
from utils.matgrp import generate_group, selberg_pair
from utils.spectra import cayley_graph

@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.delenv("EXPANDER_SEED", raising=False)
    Config.reset()
    yield
    Config.reset()

@pytest.fixture(scope="session")
def F2():
    return prime_field(2)

@pytest.fixture(scope="session")
def F4(F2):
    return make_extension(F2, 2)

@pytest.fixture(scope="session")
def F16_over_F4(F4):
    return make_extension(F4, 2)

@pytest.fixture(scope="session")
def F9():
    return make_extension(prime_field(3), 2)

@pytest.fixture(scope="session")
def psl2_3_graph():
    A, B = selberg_pair(prime_field(3))
    G = generate_group([A, B])
    return cayley_graph(G, [A, B])

@pytest.fixture(scope="session")
def psl2_5():
    A, B = selberg_pair(prime_field(5))
    return generate_group([A, B]), A, B

@pytest.fixture(scope="session")
def spec_223():
    return build_spec(2, 2, 3)

@pytest.fixture(scope="session")
def gens_223(spec_223):
    return gens_S(spec_223)
