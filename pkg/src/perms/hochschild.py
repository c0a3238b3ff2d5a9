"""Specialized counter for alternating permutations of Hochschild building sets"""
from functools import lru_cache
from typing import Iterator, List, Tuple

from src.buildset.element_set import popcount


def count_alt_hoch(s: int, r: int) -> int:
    """
    Alternating permutations of [s+r] in which the top r values appear in
    decreasing order along the sequence.

    Values are placed from largest to smallest into positions 1..s+r. An odd
    position is a peak and needs both neighbours still empty; an even position
    is a valley and needs both neighbours already filled. The first r values
    placed (the top ones) must go to increasing positions.
    """
    if s < 0 or r < 0:
        raise ValueError(f"s and r must be non-negative, got ({s}, {r})")
    length = s + r
    if length % 2:
        return 0
    if length == 0:
        return 1
    # no alternating permutation keeps more than s + 2 top values in order
    if r > s + 2:
        return 0
    return _count_placements(length, r)


@lru_cache(maxsize=None)
def _count_placements(length: int, top: int) -> int:
    full = (1 << length) - 1

    @lru_cache(maxsize=None)
    def place(filled: int, last: int) -> int:
        if filled == full:
            return 1
        placed = popcount(filled)
        ordered = placed < top
        total = 0
        for position in range(1, length + 1):
            bit = 1 << (position - 1)
            if filled & bit:
                continue
            if ordered and position <= last:
                continue
            if not _neighbours_ok(filled, position, length):
                continue
            grown = filled | bit
            # once the top block is placed the last position no longer matters
            total += place(grown, position if placed + 1 < top else 0)
        return total

    return place(0, 0)


def _neighbours_ok(filled: int, position: int, length: int) -> bool:
    peak = position % 2 == 1
    for neighbour in (position - 1, position + 1):
        if neighbour < 1 or neighbour > length:
            continue
        occupied = bool(filled >> (neighbour - 1) & 1)
        if occupied == peak:
            return False
    return True


def alt_hoch_permutations(s: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Brute-force witnesses, lexicographic; only for small s + r"""
    length = s + r
    if length % 2:
        return
    top_values = list(range(length, s, -1))
    entries: List[int] = []

    def backtrack(used: int) -> Iterator[Tuple[int, ...]]:
        if len(entries) == length:
            yield tuple(entries)
            return
        for value in range(1, length + 1):
            if used >> (value - 1) & 1:
                continue
            if entries and (value < entries[-1]) != (len(entries) % 2 == 1):
                continue
            if value > s:
                # top values appear as length, length-1, ..., s+1
                expected = top_values[sum(1 for x in entries if x > s)]
                if value != expected:
                    continue
            entries.append(value)
            yield from backtrack(used | (1 << (value - 1)))
            entries.pop()

    yield from backtrack(0)
