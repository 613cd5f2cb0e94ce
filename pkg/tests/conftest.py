import pytest

import cluspat as cp

A2_B = [[0, 1], [-1, 0]]
A3_B = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
MARKOV_B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


@pytest.fixture(scope="session")
def a2_cf():
    return cp.explore(cp.Seed.root(A2_B, [(), ()]), max_depth=10)


@pytest.fixture(scope="session")
def a3_cf():
    return cp.explore(cp.Seed.root(A3_B, [(), (), ()]), max_depth=16)


@pytest.fixture(scope="session")
def a2_principal():
    return cp.explore(cp.Seed.principal(A2_B), max_depth=6)


@pytest.fixture(scope="session")
def a3_principal():
    return cp.explore(cp.Seed.principal(A3_B), max_depth=10)


@pytest.fixture(scope="session")
def markov5():
    return cp.explore(cp.Seed.root(MARKOV_B, [(), (), ()]), max_depth=5)
