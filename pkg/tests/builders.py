"""Instance generators shared by the test modules"""
import random
from itertools import combinations, permutations
from typing import Iterator, List

from src.buildset.building_set import BuildingSet, graphical_building_set, is_chordal, maximal_building_set
from src.buildset.element_set import ElementSet, iter_submasks, popcount, sort_key
from src.buildset.graph import SimpleGraph, path_graph

EXAMPLE_FAMILY = [(1,), (2,), (3,), (4,), (1, 4), (3, 4), (1, 3, 4), (2, 3, 4), (1, 2, 3, 4)]


def family(*members) -> List[ElementSet]:
    return [ElementSet.from_labels(m) for m in members]


def building_set(*members, ground=None) -> BuildingSet:
    """Unvalidated building set from label tuples; the ground defaults to their union"""
    masks = [ElementSet.from_labels(m).mask for m in members]
    if ground is None:
        union = 0
        for mask in masks:
            union |= mask
        ground_set = ElementSet(union)
    else:
        ground_set = ElementSet.from_labels(ground)
    return BuildingSet(ground_set, masks)


def _is_union_closed(masks) -> bool:
    present = set(masks)
    return all(a | b in present for a in present for b in present if a & b)


def all_building_sets(n: int) -> Iterator[BuildingSet]:
    """Every building set on [n]"""
    ground = ElementSet.interval(1, n)
    singletons = [1 << i for i in range(n)]
    larger = [m for m in iter_submasks(ground.mask) if popcount(m) >= 2]
    larger.sort(key=sort_key)
    for choice in range(1 << len(larger)):
        masks = singletons + [m for i, m in enumerate(larger) if choice >> i & 1]
        if _is_union_closed(masks):
            yield BuildingSet(ground, masks)


def connected_chordal_building_sets(n: int) -> List[BuildingSet]:
    return [b for b in all_building_sets(n) if b.is_connected and is_chordal(b)]


def _close(masks: set) -> set:
    """Close under overlapping unions and upper tails"""
    changed = True
    while changed:
        changed = False
        for a in list(masks):
            tail = a
            while popcount(tail) > 1:
                tail &= tail - 1
                if tail not in masks:
                    masks.add(tail)
                    changed = True
            for b in list(masks):
                if a & b and a | b not in masks:
                    masks.add(a | b)
                    changed = True
    return masks


def random_connected_chordal(n: int, rng: random.Random, extra: int = 3) -> BuildingSet:
    ground = ElementSet.interval(1, n)
    masks = {1 << i for i in range(n)} | {ground.mask}
    candidates = [m for m in iter_submasks(ground.mask) if popcount(m) >= 2]
    for _ in range(rng.randint(0, extra)):
        masks.add(rng.choice(candidates))
    return BuildingSet(ground, _close(masks))


def random_connected_chordal_sample(n: int, count: int, seed: int = 2024) -> List[BuildingSet]:
    rng = random.Random(seed)
    return [random_connected_chordal(n, rng) for _ in range(count)]


def six_label_instances(count: int = 4, seed: int = 31) -> List[BuildingSet]:
    """Maximal set and path on [6] plus a random connected chordal sample"""
    ground = ElementSet.interval(1, 6)
    return ([maximal_building_set(ground), graphical_building_set(path_graph(6))]
            + random_connected_chordal_sample(6, count, seed=seed))


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    pairs = list(combinations(range(1, n + 1), 2))
    for choice in range(1 << len(pairs)):
        yield SimpleGraph(range(1, n + 1), [p for i, p in enumerate(pairs) if choice >> i & 1])


def brute_alternating_count(n: int) -> int:
    """Zigzag numbers by direct enumeration"""
    return sum(1 for x in permutations(range(1, n + 1))
               if all((x[i] > x[i + 1]) == (i % 2 == 0) for i in range(n - 1)))


def catalan(k: int) -> int:
    values = [1]
    for i in range(k):
        values.append(sum(values[j] * values[i - j] for j in range(i + 1)))
    return values[k]
