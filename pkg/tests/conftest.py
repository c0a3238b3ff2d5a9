import pytest

from src.buildset.building_set import (
    graphical_building_set,
    hochschild_building_set,
    maximal_building_set,
    validate_building_set,
)
from src.buildset.element_set import ElementSet
from src.buildset.graph import SimpleGraph, path_graph
from tests.builders import EXAMPLE_FAMILY, family


@pytest.fixture
def example_building_set():
    """The 9-member connected chordal building set on [4]"""
    return validate_building_set(family(*EXAMPLE_FAMILY), ElementSet.interval(1, 4))


@pytest.fixture
def hoch_2_4():
    return hochschild_building_set(2, 4)


@pytest.fixture
def path4():
    return graphical_building_set(path_graph(4))


@pytest.fixture
def bad_path4():
    """Path labelled 2-3-1-4"""
    return graphical_building_set(SimpleGraph([1, 2, 3, 4], [(2, 3), (3, 1), (1, 4)]))


@pytest.fixture
def twisted_cycle5():
    """Cycle 4-1-3-2-5-4; the induced paths on {1,2,3,4} and {1,2,3,5} break the alternating count"""
    return SimpleGraph([1, 2, 3, 4, 5], [(4, 1), (1, 3), (3, 2), (2, 5), (5, 4)])


@pytest.fixture
def maximal4():
    return maximal_building_set(ElementSet.interval(1, 4))


@pytest.fixture
def triangle_set():
    """{{1},{2},{3},{1,2,3}}"""
    return validate_building_set(family((1,), (2,), (3,), (1, 2, 3)), ElementSet.interval(1, 3))
