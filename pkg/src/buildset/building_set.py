"""Building sets: construction, validation and queries"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from src.buildset.element_set import (
    ElementSet,
    iter_submasks,
    labels_of,
    max_label,
    popcount,
    sort_key,
)
from src.buildset.graph import SimpleGraph
from src.config.logging import get_logger
from src.config.settings import MAX_ENUMERATION_GROUND
from src.errors import (
    EmptyMember,
    GroundTooLarge,
    LabelOutsideGround,
    MissingSingleton,
    UnionAxiomViolated,
    VerificationFailure,
)

logger = get_logger(__name__)


class BuildingSet:
    """
    A validated building set on a finite ground set.

    Members are kept as a frozenset of masks for membership tests, a tuple in
    deterministic order (ascending cardinality, then lexicographic), and a
    per-label index used by component queries. Instances are immutable; the
    component cache only memoizes pure lookups.
    """

    __slots__ = ("ground", "_masks", "_ordered", "_by_label", "_component_cache")

    def __init__(self, ground: ElementSet, member_masks: Iterable[int]):
        self.ground = ground
        self._masks: FrozenSet[int] = frozenset(member_masks)
        self._ordered: Tuple[int, ...] = tuple(sorted(self._masks, key=sort_key))
        by_label: Dict[int, List[int]] = {label: [] for label in ground.labels}
        for mask in self._ordered:
            for label in labels_of(mask):
                by_label[label].append(mask)
        self._by_label = {label: tuple(masks) for label, masks in by_label.items()}
        self._component_cache: Dict[Tuple[int, int], int] = {}

    def __getstate__(self):
        return {"ground": self.ground.mask, "members": self._ordered}

    def __setstate__(self, state):
        self.__init__(ElementSet(state["ground"]), state["members"])

    # ------------------------------------------------------------------
    # Membership
    # ------------------------------------------------------------------

    @property
    def members(self) -> Tuple[ElementSet, ...]:
        return tuple(ElementSet(m) for m in self._ordered)

    @property
    def member_masks(self) -> Tuple[int, ...]:
        return self._ordered

    def contains_mask(self, mask: int) -> bool:
        return mask in self._masks

    def __contains__(self, member: ElementSet) -> bool:
        return isinstance(member, ElementSet) and member.mask in self._masks

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BuildingSet) and self.ground == other.ground
                and self._masks == other._masks)

    def __hash__(self) -> int:
        return hash((self.ground.mask, self._masks))

    def __repr__(self) -> str:
        return f"BuildingSet(ground={self.ground}, members={len(self)})"

    # ------------------------------------------------------------------
    # Components
    # ------------------------------------------------------------------

    @property
    def is_connected(self) -> bool:
        return self.ground.mask != 0 and self.ground.mask in self._masks

    def component_of(self, label: int, within: Optional[int] = None) -> int:
        """Mask of the component of B|_within containing `label`"""
        within = self.ground.mask if within is None else within
        key = (label, within)
        cached = self._component_cache.get(key)
        if cached is not None:
            return cached
        component = 0
        for mask in self._by_label.get(label, ()):
            if mask & ~within == 0:
                component |= mask
        self._component_cache[key] = component
        return component

    def component_masks(self, within: Optional[int] = None) -> List[int]:
        """Components of B|_within, in order of their smallest label"""
        remaining = self.ground.mask if within is None else within & self.ground.mask
        components = []
        while remaining:
            low = (remaining & -remaining).bit_length()
            component = self.component_of(low, remaining)
            components.append(component)
            remaining &= ~component
        return components

    def has_odd_component(self, within: Optional[int] = None) -> bool:
        return any(popcount(c) % 2 for c in self.component_masks(within))

    def odd_component(self, within: Optional[int] = None) -> Optional[int]:
        for component in self.component_masks(within):
            if popcount(component) % 2:
                return component
        return None

    def same_component(self, a: int, b: int, within: int) -> bool:
        """True iff some member inside `within` contains both labels"""
        both = (1 << (a - 1)) | (1 << (b - 1))
        return any(mask & both == both and mask & ~within == 0 for mask in self._by_label.get(a, ()))


# ============================================================================
# CONSTRUCTION
# ============================================================================

def validate_building_set(family: Iterable[ElementSet], ground: ElementSet) -> BuildingSet:
    """
    Validate a family against the building-set axioms.

    Violations are reported in a fixed order: empty or out-of-ground members,
    then the smallest missing singleton, then the first overlapping pair (in
    member order) whose union is absent.
    """
    masks = set()
    for member in family:
        if not member:
            raise EmptyMember()
        outside = member - ground
        if outside:
            raise LabelOutsideGround(outside.min(), ground)
        masks.add(member.mask)

    for label in ground.labels:
        if 1 << (label - 1) not in masks:
            raise MissingSingleton(label)

    ordered = sorted(masks, key=sort_key)
    for i, first in enumerate(ordered):
        for second in ordered[i + 1:]:
            if first & second and (first | second) not in masks:
                raise UnionAxiomViolated(ElementSet(first), ElementSet(second))

    return BuildingSet(ground, masks)


def restrict(building_set: BuildingSet, subset: ElementSet) -> BuildingSet:
    """B|_I: the members of B contained in I, as a building set on I"""
    outside = subset - building_set.ground
    if outside:
        raise LabelOutsideGround(outside.min(), building_set.ground)
    inside = subset.mask
    return BuildingSet(subset, (m for m in building_set.member_masks if m & ~inside == 0))


def connected_components(building_set: BuildingSet) -> List[ElementSet]:
    """Inclusion-maximal members, by descending maximum label"""
    components = building_set.component_masks()
    components.sort(key=max_label, reverse=True)
    return [ElementSet(c) for c in components]


@dataclass(frozen=True)
class ChordalityCheck:
    is_chordal: bool
    member: Optional[ElementSet] = None
    tail: Optional[ElementSet] = None

    def __bool__(self) -> bool:
        return self.is_chordal


def is_chordal(building_set: BuildingSet) -> ChordalityCheck:
    """Every member {i_1<...<i_r} must contain all its upper tails {i_s..i_r}"""
    for mask in building_set.member_masks:
        tail = mask
        # drop the smallest label until two labels are left
        while popcount(tail) > 2:
            tail &= tail - 1
            if not building_set.contains_mask(tail):
                return ChordalityCheck(False, ElementSet(mask), ElementSet(tail))
    return ChordalityCheck(True)


def maximal_building_set(ground: ElementSet, max_ground: int = MAX_ENUMERATION_GROUND) -> BuildingSet:
    """All non-empty subsets of the ground set"""
    if len(ground) > max_ground:
        raise GroundTooLarge(len(ground), max_ground)
    return BuildingSet(ground, (m for m in iter_submasks(ground.mask) if m))


def graphical_building_set(graph: SimpleGraph, max_ground: int = MAX_ENUMERATION_GROUND) -> BuildingSet:
    """B(G): vertex sets of connected induced subgraphs"""
    if len(graph) > max_ground:
        raise GroundTooLarge(len(graph), max_ground)
    return BuildingSet(graph.vertices, graph.connected_vertex_sets())


def graph_of(building_set: BuildingSet) -> SimpleGraph:
    """The graph whose edges are the 2-element members"""
    edges = [labels_of(m) for m in building_set.member_masks if popcount(m) == 2]
    return SimpleGraph(building_set.ground.labels, edges)


def is_graphical(building_set: BuildingSet) -> bool:
    reconstructed = graphical_building_set(graph_of(building_set), max_ground=len(building_set.ground))
    return reconstructed == building_set


def hochschild_building_set(m: int, n: int) -> BuildingSet:
    """
    B_{m,n} on [m+n]: members of size >= 2 meet the shade [m+1, m+n] either
    not at all or in a suffix [m+r, m+n].
    """
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"hochschild_building_set needs m, n >= 0 and m + n >= 1, got ({m}, {n})")
    ground = ElementSet.interval(1, m + n)
    lights = ElementSet.interval(1, m).mask
    suffixes = [0] + [ElementSet.interval(m + r, m + n).mask for r in range(1, n + 1)]
    masks = {1 << (i - 1) for i in ground.labels}
    for head in iter_submasks(lights):
        for suffix in suffixes:
            member = head | suffix
            if popcount(member) >= 2:
                masks.add(member)
    result = BuildingSet(ground, masks)
    if not result.is_connected or not is_chordal(result):
        raise VerificationFailure(f"B_{{{m},{n}}} should be connected and chordal")
    logger.debug("Built B_{%d,%d} with %d members", m, n, len(result))
    return result


def omega_to_subset(row_indices: ElementSet, n: int) -> ElementSet:
    """I_omega: the rows themselves when even, with n + 1 appended when odd"""
    if n < 1:
        raise ValueError("n must be positive")
    outside = row_indices - ElementSet.interval(1, n)
    if outside:
        raise LabelOutsideGround(outside.min(), ElementSet.interval(1, n))
    if len(row_indices) % 2 == 0:
        return row_indices
    return row_indices | ElementSet.of(n + 1)
