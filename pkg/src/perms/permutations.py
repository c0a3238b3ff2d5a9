"""B-permutations, alternation, descents and pattern avoidance"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.buildset.building_set import BuildingSet, is_chordal
from src.buildset.element_set import ElementSet, labels_of, max_label, popcount
from src.errors import InputError, LabelOutsideGround, NotChordal, NotConnected, VerificationFailure

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class DescentHistogram:
    """counts[d] is the number of permutations with exactly d descents"""

    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, descents: int) -> int:
        return self.counts[descents] if 0 <= descents < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)


def is_alternating(x: Sequence[int]) -> bool:
    """x_1 > x_2 < x_3 > ...; the empty permutation counts as alternating"""
    for i in range(len(x) - 1):
        if (x[i] > x[i + 1]) != (i % 2 == 0):
            return False
    return True


def descents(x: Sequence[int]) -> List[int]:
    """1-based positions i with x_i > x_{i+1}"""
    return [i + 1 for i in range(len(x) - 1) if x[i] > x[i + 1]]


def _ground_mask(building_set: BuildingSet, within: Optional[ElementSet]) -> int:
    if within is None:
        return building_set.ground.mask
    outside = within - building_set.ground
    if outside:
        raise LabelOutsideGround(outside.min(), building_set.ground)
    return within.mask


def _extends(building_set: BuildingSet, prefix: int, label: int) -> bool:
    """Appending `label` keeps it in the component of the new prefix maximum"""
    grown = prefix | (1 << (label - 1))
    top = 1 << (max_label(grown) - 1)
    return bool(building_set.component_of(label, grown) & top)


def is_b_permutation(x: Sequence[int], building_set: BuildingSet, cross_check: bool = False) -> bool:
    """
    Every prefix keeps its last entry and its maximum in one component of the
    building set restricted to the prefix.

    Args:
        x: One-line notation; its entries must be distinct labels of the ground set.
        building_set: The building set B.
        cross_check: Also evaluate the "some member contains both" formulation
            and fail loudly if the two disagree.
    """
    if len(set(x)) != len(x):
        raise InputError(f"permutation {tuple(x)} repeats an entry")
    prefix = 0
    result = True
    for label in x:
        if label not in building_set.ground:
            raise LabelOutsideGround(label, building_set.ground)
        ok = _extends(building_set, prefix, label)
        prefix |= 1 << (label - 1)
        if cross_check:
            other = building_set.same_component(label, max_label(prefix), prefix)
            if other != ok:
                raise VerificationFailure(f"component tests disagree on prefix {ElementSet(prefix)}")
        if not ok:
            result = False
            if not cross_check:
                break
    return result


# ============================================================================
# COUNTING AND ENUMERATION
# ============================================================================

def count_alternating_b_permutations(building_set: BuildingSet, within: Optional[ElementSet] = None) -> int:
    """
    Number of alternating B-permutations of the ground set (or of `within`,
    which is the same as counting for the restriction B|_within).

    Memoized over (prefix set, last entry): both the alternation test and the
    B-permutation test of the next entry depend on nothing else.
    """
    ground = _ground_mask(building_set, within)
    size = popcount(ground)
    if size % 2:
        return 0
    if size == 0:
        return 1
    labels = labels_of(ground)
    memo: Dict[Tuple[int, int], int] = {}

    def extend(prefix: int, last: int) -> int:
        if prefix == ground:
            return 1
        key = (prefix, last)
        if key in memo:
            return memo[key]
        go_down = popcount(prefix) % 2 == 1
        total = 0
        for label in labels:
            if prefix >> (label - 1) & 1:
                continue
            if prefix and (label < last) != go_down:
                continue
            if _extends(building_set, prefix, label):
                total += extend(prefix | (1 << (label - 1)), label)
        memo[key] = total
        return total

    return extend(0, 0)


def alternating_b_permutations(building_set: BuildingSet,
                               within: Optional[ElementSet] = None) -> Iterator[Permutation]:
    """Witnesses in lexicographic order (entries chosen in ascending label order)"""
    ground = _ground_mask(building_set, within)
    if popcount(ground) % 2:
        return
    labels = labels_of(ground)
    entries: List[int] = []

    def backtrack(prefix: int) -> Iterator[Permutation]:
        if prefix == ground:
            yield tuple(entries)
            return
        go_down = len(entries) % 2 == 1
        for label in labels:
            if prefix >> (label - 1) & 1:
                continue
            if entries and (label < entries[-1]) != go_down:
                continue
            if not _extends(building_set, prefix, label):
                continue
            entries.append(label)
            yield from backtrack(prefix | (1 << (label - 1)))
            entries.pop()

    yield from backtrack(0)


def count_b_permutations(building_set: BuildingSet, within: Optional[ElementSet] = None) -> int:
    ground = _ground_mask(building_set, within)
    labels = labels_of(ground)
    memo: Dict[int, int] = {}

    def extend(prefix: int) -> int:
        if prefix == ground:
            return 1
        if prefix not in memo:
            memo[prefix] = sum(
                extend(prefix | (1 << (label - 1)))
                for label in labels
                if not prefix >> (label - 1) & 1 and _extends(building_set, prefix, label)
            )
        return memo[prefix]

    return extend(0)


def descent_histogram_of_b_permutations(building_set: BuildingSet) -> DescentHistogram:
    """Descent counts over all B-permutations of a connected chordal B"""
    if not building_set.is_connected:
        raise NotConnected([ElementSet(c) for c in building_set.component_masks()])
    check = is_chordal(building_set)
    if not check:
        raise NotChordal(check.member, check.tail)

    ground = building_set.ground.mask
    labels = labels_of(ground)
    memo: Dict[Tuple[int, int], List[int]] = {}

    def extend(prefix: int, last: int) -> List[int]:
        if prefix == ground:
            return [1]
        key = (prefix, last)
        if key in memo:
            return memo[key]
        counts: List[int] = []
        for label in labels:
            if prefix >> (label - 1) & 1 or not _extends(building_set, prefix, label):
                continue
            sub = extend(prefix | (1 << (label - 1)), label)
            shift = 1 if prefix and last > label else 0
            if len(counts) < len(sub) + shift:
                counts.extend([0] * (len(sub) + shift - len(counts)))
            for d, value in enumerate(sub):
                counts[d + shift] += value
        memo[key] = counts
        return counts

    counts = extend(0, 0)
    width = max(len(labels), 1)
    counts = counts + [0] * (width - len(counts))
    return DescentHistogram(tuple(counts[:width]))


# ============================================================================
# PATTERN AVOIDANCE AND CLOSED-FORM COUNTERS
# ============================================================================

def is_312_avoiding(x: Sequence[int]) -> bool:
    """No i < j < l with x_j < x_l < x_i"""
    prefix_max = []
    running = None
    for value in x:
        prefix_max.append(running)
        running = value if running is None else max(running, value)
    for l in range(len(x)):
        for j in range(l):
            if x[j] < x[l] and prefix_max[j] is not None and prefix_max[j] > x[l]:
                return False
    return True


def count_312_avoiding_alternating(length: int) -> int:
    """
    Alternating 312-avoiding permutations of [length].

    Appending v below the running maximum M forbids every later value strictly
    between v and M; a branch dies as soon as an unused value is forbidden.
    """
    if length < 0 or length % 2:
        raise ValueError(f"length must be even and non-negative, got {length}")
    full = (1 << length) - 1
    memo: Dict[Tuple[int, int, int], int] = {}

    def extend(used: int, last: int, forbidden: int) -> int:
        if used == full:
            return 1
        key = (used, last, forbidden)
        if key in memo:
            return memo[key]
        top = max_label(used)
        go_down = popcount(used) % 2 == 1
        total = 0
        for value in range(1, length + 1):
            bit = 1 << (value - 1)
            if used & bit or forbidden & bit:
                continue
            if used and (value < last) != go_down:
                continue
            blocked = forbidden
            if value < top:
                # values value+1 .. top-1
                blocked |= ((1 << (top - 1)) - 1) & ~((1 << value) - 1)
            if blocked & ~(used | bit):
                continue
            total += extend(used | bit, value, blocked)
        memo[key] = total
        return total

    return extend(0, 0, 0)


def count_alternating_with_max_first(size: int) -> int:
    """Alternating permutations of [size] whose first entry is size"""
    if size < 1:
        return 0
    full = (1 << size) - 1
    memo: Dict[Tuple[int, int], int] = {}

    def extend(used: int, last: int) -> int:
        if used == full:
            return 1
        key = (used, last)
        if key not in memo:
            go_down = popcount(used) % 2 == 1
            memo[key] = sum(
                extend(used | (1 << (value - 1)), value)
                for value in range(1, size + 1)
                if not used >> (value - 1) & 1 and (value < last) == go_down
            )
        return memo[key]

    return extend(1 << (size - 1), size)
