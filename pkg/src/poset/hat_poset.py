"""The poset of subsets without odd components, with its edge labeling"""
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.buildset.building_set import BuildingSet
from src.buildset.element_set import ElementSet, iter_submasks, labels_of, max_label, min_label, sort_key
from src.config.settings import MAX_ENUMERATION_GROUND
from src.errors import EmptyInterval, GroundTooLarge, VerificationFailure
from src.poset.labels import Comparison, EdgeLabel, OmegaLabel, compare_labels

Chain = Tuple[ElementSet, ...]


class HatPoset:
    """
    Elements are the I whose restriction has no odd-order component, ordered by
    inclusion. A cover adds two labels lying in one component of the larger
    restriction and is labeled (max of that component, (max, min) of the pair).
    """

    def __init__(self, building_set: BuildingSet, max_ground: int = MAX_ENUMERATION_GROUND):
        ground = building_set.ground
        if len(ground) > max_ground:
            raise GroundTooLarge(len(ground), max_ground)
        self.building_set = building_set
        self.ground = ground
        elements = [m for m in iter_submasks(ground.mask) if not building_set.has_odd_component(m)]
        elements.sort(key=sort_key)
        self.element_masks: Tuple[int, ...] = tuple(elements)
        self._elements = frozenset(elements)
        self._covers: Dict[int, List[Tuple[int, EdgeLabel]]] = {m: [] for m in elements}
        self._labels: Dict[Tuple[int, int], EdgeLabel] = {}
        for lower in elements:
            free = labels_of(ground.mask & ~lower)
            for i, x in enumerate(free):
                for y in free[i + 1:]:
                    pair = (1 << (x - 1)) | (1 << (y - 1))
                    upper = lower | pair
                    if upper not in self._elements:
                        continue
                    label = self._label(lower, upper)
                    self._covers[lower].append((upper, label))
                    self._labels[(lower, upper)] = label
        for lower in elements:
            self._covers[lower].sort(key=lambda item: sort_key(item[0]))

    def _label(self, lower: int, upper: int) -> EdgeLabel:
        added = upper & ~lower
        a, b = max_label(added), min_label(added)
        component = self.building_set.component_of(a, upper)
        if not component & (1 << (b - 1)):
            raise VerificationFailure(f"cover {ElementSet(lower)} < {ElementSet(upper)} adds labels in two components")
        return EdgeLabel(max_label(component), OmegaLabel(a, b))

    # ------------------------------------------------------------------

    @property
    def elements(self) -> Tuple[ElementSet, ...]:
        return tuple(ElementSet(m) for m in self.element_masks)

    @property
    def bottom(self) -> ElementSet:
        return ElementSet(0)

    @property
    def top(self) -> Optional[ElementSet]:
        return self.ground if self.is_bounded else None

    @property
    def is_bounded(self) -> bool:
        return self.ground.mask in self._elements

    @property
    def rank(self) -> int:
        return len(self.ground) // 2

    def __contains__(self, element: ElementSet) -> bool:
        return isinstance(element, ElementSet) and element.mask in self._elements

    def __len__(self) -> int:
        return len(self.element_masks)

    def edges(self) -> List[Tuple[ElementSet, ElementSet, EdgeLabel]]:
        return [(ElementSet(lo), ElementSet(hi), label)
                for lo in self.element_masks for hi, label in self._covers[lo]]

    def label(self, lower: ElementSet, upper: ElementSet) -> EdgeLabel:
        try:
            return self._labels[(lower.mask, upper.mask)]
        except KeyError:
            raise EmptyInterval(f"{lower} is not covered by {upper}") from None

    def upper_covers(self, element: ElementSet) -> List[Tuple[ElementSet, EdgeLabel]]:
        return [(ElementSet(hi), label) for hi, label in self._covers.get(element.mask, [])]

    def precedes(self, a: ElementSet, b: ElementSet) -> bool:
        """Strict order: proper inclusion"""
        return a != b and a.issubset(b)

    def proper_part(self) -> List[ElementSet]:
        """Elements other than the bottom and the top"""
        top = self.ground.mask if self.is_bounded else None
        return [ElementSet(m) for m in self.element_masks if m and m != top]

    # ------------------------------------------------------------------

    def chain_masks(self, bottom: int, top: int) -> Iterator[Tuple[int, ...]]:
        """Saturated chains from bottom to top as mask tuples"""
        path = [bottom]

        def walk(current: int) -> Iterator[Tuple[int, ...]]:
            if current == top:
                yield tuple(path)
                return
            for upper, _ in self._covers[current]:
                if upper & ~top:
                    continue
                path.append(upper)
                yield from walk(upper)
                path.pop()

        yield from walk(bottom)

    def chain_labels(self, chain: Sequence[int]) -> List[EdgeLabel]:
        return [self._labels[(chain[i], chain[i + 1])] for i in range(len(chain) - 1)]


def build_hat_poset(building_set: BuildingSet, max_ground: int = MAX_ENUMERATION_GROUND) -> HatPoset:
    return HatPoset(building_set, max_ground=max_ground)


def maximal_chains(poset: HatPoset, bottom: ElementSet, top: ElementSet) -> Iterator[Chain]:
    """All maximal chains of [bottom, top], deterministic order"""
    if bottom not in poset or top not in poset or not bottom.issubset(top):
        raise EmptyInterval(f"[{bottom}, {top}] is not an interval of the poset")
    return (tuple(ElementSet(m) for m in chain) for chain in poset.chain_masks(bottom.mask, top.mask))


def label_steps(labels: Sequence[EdgeLabel]) -> List[Comparison]:
    """Comparison of each label with the next one"""
    return [compare_labels(labels[i], labels[i + 1]) for i in range(len(labels) - 1)]


def decreasing_positions(chain: Sequence[ElementSet], poset: HatPoset) -> List[int]:
    """1-based i where mu(I_{i-1}, I_i) strictly succeeds mu(I_i, I_{i+1})"""
    labels = poset.chain_labels([element.mask for element in chain])
    return [i + 1 for i, step in enumerate(label_steps(labels)) if step is Comparison.GREATER]


__all__ = [
    "Chain",
    "HatPoset",
    "build_hat_poset",
    "decreasing_positions",
    "label_steps",
    "maximal_chains",
]
