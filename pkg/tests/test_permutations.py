from itertools import permutations
from math import factorial

import pytest

from src.buildset.building_set import graphical_building_set, maximal_building_set, restrict
from src.buildset.element_set import ElementSet
from src.buildset.graph import path_graph
from src.errors import InputError, LabelOutsideGround, NotChordal
from src.perms.permutations import (
    alternating_b_permutations,
    count_312_avoiding_alternating,
    count_alternating_b_permutations,
    count_alternating_with_max_first,
    count_b_permutations,
    descent_histogram_of_b_permutations,
    descents,
    is_312_avoiding,
    is_alternating,
    is_b_permutation,
)
from tests.builders import all_building_sets, brute_alternating_count, catalan


def test_alternation_and_descents():
    assert is_alternating(())
    assert is_alternating((2, 1, 4, 3))
    assert not is_alternating((1, 2))
    assert descents((3, 1, 2)) == [1]
    assert descents((4, 3, 2, 1)) == [1, 2, 3]


def test_b_permutation_rejects_bad_input(path4):
    with pytest.raises(InputError):
        is_b_permutation((1, 1, 2, 3), path4)
    with pytest.raises(LabelOutsideGround):
        is_b_permutation((1, 5), path4)


def test_path_witnesses(path4):
    assert list(alternating_b_permutations(path4)) == [(2, 1, 4, 3), (3, 2, 4, 1)]
    assert count_alternating_b_permutations(path4) == 2
    assert not is_b_permutation((3, 1, 4, 2), path4)


@pytest.mark.parametrize("n, expected", [(2, 1), (4, 5), (6, 61)])
def test_maximal_building_sets_give_zigzag_numbers(n, expected):
    b = maximal_building_set(ElementSet.interval(1, n))
    assert count_alternating_b_permutations(b) == expected
    assert brute_alternating_count(n) == expected


def test_odd_and_empty_grounds(maximal4):
    assert count_alternating_b_permutations(maximal4, within=ElementSet.of(1, 2, 3)) == 0
    assert count_alternating_b_permutations(maximal4, within=ElementSet(0)) == 1
    assert list(alternating_b_permutations(maximal4, within=ElementSet.of(1, 2, 3))) == []


def test_counters_agree_with_brute_force_on_even_grounds():
    for n in (2, 4):
        for b in all_building_sets(n):
            labels = b.ground.labels
            b_perms = [x for x in permutations(labels) if is_b_permutation(x, b, cross_check=True)]
            assert count_b_permutations(b) == len(b_perms)
            alternating = [x for x in b_perms if is_alternating(x)]
            assert list(alternating_b_permutations(b)) == sorted(alternating)
            assert count_alternating_b_permutations(b) == len(alternating)


def test_within_counts_the_restriction(example_building_set):
    subset = ElementSet.of(1, 3, 4)
    for x in (ElementSet.of(3, 4), ElementSet.of(1, 4), ElementSet.of(1, 3)):
        assert (count_alternating_b_permutations(example_building_set, within=x)
                == count_alternating_b_permutations(restrict(example_building_set, x)))
    assert count_b_permutations(example_building_set, within=subset) == count_b_permutations(
        restrict(example_building_set, subset))


def test_descent_histograms(maximal4, path4, bad_path4):
    assert descent_histogram_of_b_permutations(maximal4).counts == (1, 11, 11, 1)
    path = descent_histogram_of_b_permutations(path4)
    assert path.counts == (1, 6, 6, 1)
    assert path.total == count_b_permutations(path4)
    assert path[7] == 0
    with pytest.raises(NotChordal):
        descent_histogram_of_b_permutations(bad_path4)


def test_312_avoidance():
    assert not is_312_avoiding((3, 1, 2))
    assert is_312_avoiding((2, 1, 3))
    assert is_312_avoiding((3, 2, 4, 1))
    assert not is_312_avoiding((4, 1, 3, 2))


@pytest.mark.parametrize("k", range(0, 7))
def test_312_avoiding_alternating_are_catalan(k):
    assert count_312_avoiding_alternating(2 * k) == catalan(k)


@pytest.mark.slow
@pytest.mark.parametrize("k", [7, 8])
def test_312_avoiding_alternating_are_catalan_large(k):
    assert count_312_avoiding_alternating(2 * k) == catalan(k)


def test_312_counter_rejects_odd_lengths():
    with pytest.raises(ValueError):
        count_312_avoiding_alternating(3)


def test_alternating_with_max_first():
    assert count_alternating_with_max_first(0) == 0
    assert count_alternating_with_max_first(2) == 1
    assert count_alternating_with_max_first(4) == 2
    assert count_alternating_with_max_first(4) == sum(
        1 for x in permutations(range(1, 5)) if x[0] == 4 and is_alternating(x))


@pytest.mark.parametrize("n", range(1, 8))
def test_every_permutation_is_a_b_permutation_of_the_maximal_set(n):
    assert count_b_permutations(maximal_building_set(ElementSet.interval(1, n))) == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_maximal_descent_histograms_are_symmetric_eulerian_numbers(n):
    counts = descent_histogram_of_b_permutations(maximal_building_set(ElementSet.interval(1, n))).counts
    assert counts == counts[::-1]
    eulerian = [0] * n
    for x in permutations(range(1, n + 1)):
        eulerian[len(descents(x))] += 1
    assert list(counts) == eulerian


@pytest.mark.parametrize("k", range(1, 5))
def test_path_witnesses_are_the_312_avoiding_alternating_permutations(k):
    n = 2 * k
    expected = [x for x in permutations(range(1, n + 1)) if is_alternating(x) and is_312_avoiding(x)]
    assert list(alternating_b_permutations(graphical_building_set(path_graph(n)))) == expected
    assert len(expected) == count_312_avoiding_alternating(n) == catalan(k)
