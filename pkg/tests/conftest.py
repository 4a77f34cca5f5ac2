import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from midmatch.enumeration import (
    all_connected_graphs,
    all_trees,
    random_connected_corpus,
)


@pytest.fixture(scope="session")
def connected_graphs_upto_6():
    return [g for n in range(1, 7) for g in all_connected_graphs(n)]


@pytest.fixture(scope="session")
def connected_graphs_upto_5():
    return [g for n in range(1, 6) for g in all_connected_graphs(n)]


@pytest.fixture(scope="session")
def trees_3_to_12():
    return [t for n in range(3, 13) for t in all_trees(n)]


@pytest.fixture(scope="session")
def chain_random_corpus():
    # 500 seeded random connected graphs alternating 7 and 8 vertices
    return list(random_connected_corpus(500, (7, 8), 0))


@pytest.fixture(scope="session")
def equality_random_corpus():
    # 500 seeded random connected graphs on 8 vertices
    return list(random_connected_corpus(500, (8,), 1000))


@pytest.fixture(scope="session")
def procedure_random_corpus():
    # 200 seeded random connected graphs on 7 vertices
    return list(random_connected_corpus(200, (7,), 2000))
