"""Finite sets of positive integer labels stored as bit masks"""
from typing import Iterable, Iterator, Tuple

from src.config.settings import MAX_LABEL
from src.errors import LabelOutOfRange

# Label L lives in bit L - 1.


def mask_of(labels: Iterable[int], max_label: int = MAX_LABEL) -> int:
    """Bit mask of an iterable of labels"""
    mask = 0
    for label in labels:
        if not isinstance(label, int) or isinstance(label, bool) or label < 1 or label > max_label:
            raise LabelOutOfRange(label, max_label)
        mask |= 1 << (label - 1)
    return mask


def labels_of(mask: int) -> Tuple[int, ...]:
    """Ascending labels of a mask"""
    labels = []
    while mask:
        low = mask & -mask
        labels.append(low.bit_length())
        mask ^= low
    return tuple(labels)


def max_label(mask: int) -> int:
    return mask.bit_length()


def min_label(mask: int) -> int:
    return (mask & -mask).bit_length()


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of mask in increasing numeric order, including 0 and mask"""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def iter_submasks_of_size(mask: int, size: int) -> Iterator[int]:
    """Submasks with exactly `size` bits, in lexicographic order of their labels"""
    labels = labels_of(mask)
    if size > len(labels) or size < 0:
        return

    def extend(start: int, chosen: int, remaining: int) -> Iterator[int]:
        if remaining == 0:
            yield chosen
            return
        for i in range(start, len(labels) - remaining + 1):
            yield from extend(i + 1, chosen | (1 << (labels[i] - 1)), remaining - 1)

    yield from extend(0, 0, size)


def sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Deterministic order: ascending cardinality, then lexicographic labels"""
    return popcount(mask), labels_of(mask)


class ElementSet:
    """Immutable set of labels; iteration is ascending by label"""

    __slots__ = ("mask",)

    def __init__(self, mask: int = 0):
        object.__setattr__(self, "mask", int(mask))

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    def __reduce__(self):
        return (ElementSet, (self.mask,))

    @classmethod
    def of(cls, *labels: int) -> "ElementSet":
        return cls(mask_of(labels))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "ElementSet":
        return cls(mask_of(labels))

    @classmethod
    def interval(cls, low: int, high: int) -> "ElementSet":
        """The labels low..high inclusive ([n] is interval(1, n))"""
        if high < low:
            return cls(0)
        return cls(mask_of(range(low, high + 1)))

    @property
    def labels(self) -> Tuple[int, ...]:
        return labels_of(self.mask)

    def max(self) -> int:
        if not self.mask:
            raise ValueError("max of the empty set")
        return max_label(self.mask)

    def min(self) -> int:
        if not self.mask:
            raise ValueError("min of the empty set")
        return min_label(self.mask)

    def issubset(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "ElementSet") -> bool:
        return self.mask & other.mask == 0

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return sort_key(self.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask & ~other.mask)

    def __contains__(self, label: int) -> bool:
        return isinstance(label, int) and label >= 1 and bool(self.mask >> (label - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ElementSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(("ElementSet", self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(str(x) for x in self.labels) + "}"


EMPTY = ElementSet(0)
