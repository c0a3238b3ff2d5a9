import pytest

from src.buildset.building_set import hochschild_building_set
from src.buildset.element_set import ElementSet
from src.perms.hochschild import alt_hoch_permutations, count_alt_hoch
from src.perms.permutations import count_alternating_b_permutations


@pytest.mark.parametrize("s, r, expected", [
    (2, 2, 3),
    (1, 3, 1),
    (0, 4, 0),
    (0, 0, 1),
    (3, 0, 0),
    (4, 0, 5),
])
def test_known_counts(s, r, expected):
    assert count_alt_hoch(s, r) == expected


def test_counter_matches_enumeration():
    for length in range(0, 9, 2):
        for r in range(0, length + 1):
            s = length - r
            assert count_alt_hoch(s, r) == len(list(alt_hoch_permutations(s, r)))


def test_witnesses_keep_top_values_decreasing():
    for x in alt_hoch_permutations(2, 2):
        assert x.index(4) < x.index(3)
    assert list(alt_hoch_permutations(1, 3)) == [(4, 1, 3, 2)]


def test_counter_matches_building_set_restrictions():
    # restricting to s lights and the top r shades gives B_{s,r}
    m, n = 3, 3
    b = hochschild_building_set(m, n)
    for s in range(0, m + 1):
        for r in range(0, n + 1):
            if (s + r) % 2:
                continue
            within = ElementSet.interval(1, s) | ElementSet.interval(m + n - r + 1, m + n)
            assert count_alternating_b_permutations(b, within=within) == count_alt_hoch(s, r)


def test_rejects_negative_arguments():
    with pytest.raises(ValueError):
        count_alt_hoch(-1, 2)


def _pairs(low, high):
    return [(s, total - s) for total in range(low, high + 1) for s in range(0, total + 1)]


@pytest.mark.parametrize("s, r", _pairs(1, 8))
def test_counter_matches_the_generic_count(s, r):
    assert count_alt_hoch(s, r) == count_alternating_b_permutations(hochschild_building_set(s, r))


@pytest.mark.slow
@pytest.mark.parametrize("s, r", _pairs(9, 10))
def test_counter_matches_the_generic_count_on_larger_grounds(s, r):
    assert count_alt_hoch(s, r) == count_alternating_b_permutations(hochschild_building_set(s, r))


@pytest.mark.parametrize("s", range(0, 5))
def test_too_many_shades_leave_no_alternating_permutation(s):
    r = s + 4
    assert count_alternating_b_permutations(hochschild_building_set(s, r)) == 0
    assert count_alt_hoch(s, r) == 0
    assert list(alt_hoch_permutations(s, r)) == []
