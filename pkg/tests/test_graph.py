import networkx as nx
import pytest

from src.buildset.building_set import graphical_building_set, is_chordal
from src.buildset.element_set import ElementSet
from src.buildset.graph import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    is_perfect_elimination_ordering,
    path_graph,
    star_graph,
)
from src.errors import InvalidGraph, LoopEdge
from tests.builders import all_graphs


def test_edges_are_normalized():
    g = SimpleGraph([1, 2, 3], [(3, 1), (2, 1)])
    assert g.edges == [(1, 2), (1, 3)]
    assert g.has_edge(1, 3) and g.has_edge(3, 1)
    assert g.neighbor_mask(1) == ElementSet.of(2, 3).mask


def test_invalid_edges():
    with pytest.raises(LoopEdge):
        SimpleGraph([1, 2], [(2, 2)])
    with pytest.raises(InvalidGraph):
        SimpleGraph([1, 2], [(1, 3)])


def test_standard_families():
    assert path_graph(4).edges == [(1, 2), (2, 3), (3, 4)]
    assert cycle_graph(4).edges == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert star_graph(4).edges == [(1, 4), (2, 4), (3, 4)]
    assert len(complete_graph(5).edges) == 10
    with pytest.raises(InvalidGraph):
        cycle_graph(2)


def test_connected_vertex_sets_match_networkx():
    g = cycle_graph(5)
    nxg = g.to_networkx()
    expected = set()
    for mask in range(1, 1 << 5):
        nodes = ElementSet(mask).labels
        if nx.is_connected(nxg.subgraph(nodes)):
            expected.add(mask)
    assert set(g.connected_vertex_sets()) == expected


def test_component_masks_by_smallest_label():
    g = SimpleGraph([1, 2, 3, 4], [(1, 4), (2, 3)])
    assert g.component_masks() == [ElementSet.of(1, 4).mask, ElementSet.of(2, 3).mask]
    assert g.is_connected_mask(ElementSet.of(2, 3).mask)
    assert not g.is_connected_mask(0)


def test_perfect_elimination_examples():
    assert is_perfect_elimination_ordering(path_graph(5))
    assert is_perfect_elimination_ordering(star_graph(5))
    assert not is_perfect_elimination_ordering(SimpleGraph([1, 2, 3, 4], [(2, 3), (3, 1), (1, 4)]))
    assert not is_perfect_elimination_ordering(cycle_graph(4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chordal_building_set_iff_perfect_elimination(n):
    for graph in all_graphs(n):
        assert bool(is_chordal(graphical_building_set(graph))) == is_perfect_elimination_ordering(graph)


@pytest.mark.slow
def test_chordal_building_set_iff_perfect_elimination_on_six_vertices():
    for graph in all_graphs(6):
        assert bool(is_chordal(graphical_building_set(graph))) == is_perfect_elimination_ordering(graph)
