"""Mod-2 characteristic map of a connected building set on [n+1]"""
from typing import List, Tuple

from src.buildset.building_set import BuildingSet
from src.buildset.element_set import ElementSet, popcount
from src.errors import NotConnected, PreconditionError


def _check_standard_ground(building_set: BuildingSet) -> int:
    size = len(building_set.ground)
    if size < 1 or building_set.ground != ElementSet.interval(1, size):
        raise PreconditionError(f"characteristic map needs the ground [n+1], got {building_set.ground}")
    if not building_set.is_connected:
        raise NotConnected()
    return size - 1


def nested_vertices(building_set: BuildingSet) -> List[ElementSet]:
    """Members other than the ground set, in member order"""
    ground = building_set.ground.mask
    return [ElementSet(m) for m in building_set.member_masks if m != ground]


def mod2_characteristic_map(building_set: BuildingSet) -> List[Tuple[ElementSet, int]]:
    """
    lambda(I) = sum of e_i over i in I, where e_1..e_n are the standard basis
    of Z_2^n and e_{n+1} = e_1 + ... + e_n.

    Returns (vertex, column) pairs; bit r-1 of the column is row r.
    """
    n = _check_standard_ground(building_set)
    all_rows = (1 << n) - 1
    columns = []
    for vertex in nested_vertices(building_set):
        column = 0
        for label in vertex.labels:
            column ^= all_rows if label == n + 1 else 1 << (label - 1)
        columns.append((vertex, column))
    return columns


def characteristic_matrix_rows(building_set: BuildingSet) -> List[str]:
    """The n x |V| matrix as 0/1 strings, one per row"""
    n = _check_standard_ground(building_set)
    columns = mod2_characteristic_map(building_set)
    return ["".join(str(column >> row & 1) for _, column in columns) for row in range(n)]


def omega_vertices(building_set: BuildingSet, omega: ElementSet) -> List[ElementSet]:
    """Vertices where the sum of the omega rows of the characteristic matrix is 1"""
    n = _check_standard_ground(building_set)
    rows = omega.mask
    if rows & ~((1 << n) - 1):
        raise PreconditionError(f"row indices {omega} must lie in [1, {n}]")
    return [vertex for vertex, column in mod2_characteristic_map(building_set)
            if popcount(column & rows) % 2 == 1]


__all__ = [
    "characteristic_matrix_rows",
    "mod2_characteristic_map",
    "nested_vertices",
    "omega_vertices",
]
