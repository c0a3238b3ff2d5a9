"""EL-shellability checks, chain statistics and the chain/permutation bijection"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.buildset.building_set import BuildingSet, is_chordal
from src.buildset.element_set import ElementSet, max_label, min_label
from src.complexes.simplicial import order_complex
from src.config.logging import get_logger
from src.config.settings import VERIFY_EL_MAX_GROUND
from src.errors import (
    ChainHasDecreasingPosition,
    EmptyInterval,
    GroundTooLarge,
    NotAlternatingBPermutation,
    NotChordal,
    OddGround,
    Unbounded,
    VerificationFailure,
)
from src.homology.betti import euler_characteristic
from src.perms.permutations import Permutation, is_alternating, is_b_permutation
from src.poset.hat_poset import Chain, HatPoset, build_hat_poset, label_steps
from src.poset.labels import Comparison, EdgeLabel, compare_labels

logger = get_logger(__name__)

WEAKLY_DECREASING = (Comparison.GREATER, Comparison.EQUAL)


def _require_bounded(poset: HatPoset) -> None:
    if not poset.is_bounded:
        odd = poset.building_set.odd_component()
        raise Unbounded(ElementSet(odd) if odd else None)


def _is_weakly_decreasing(labels: Sequence[EdgeLabel]) -> bool:
    return all(step in WEAKLY_DECREASING for step in label_steps(labels))


@dataclass(frozen=True)
class ELFailure:
    bottom: ElementSet
    top: ElementSet
    reason: str


@dataclass(frozen=True)
class ELCertificate:
    """Decreasing chain of every interval, or the first failing interval"""

    ok: bool
    decreasing_chains: Dict[Tuple[ElementSet, ElementSet], Chain] = field(default_factory=dict)
    failure: Optional[ELFailure] = None
    intervals_checked: int = 0

    def __bool__(self) -> bool:
        return self.ok

    def chain_for(self, bottom: ElementSet, top: ElementSet) -> Chain:
        return self.decreasing_chains[(bottom, top)]


def _check_interval(poset: HatPoset, bottom: int, top: int) -> Tuple[Optional[Tuple[int, ...]], Optional[str]]:
    chains = list(poset.chain_masks(bottom, top))
    labelled = [(chain, poset.chain_labels(chain)) for chain in chains]
    decreasing = [(c, labels) for c, labels in labelled if _is_weakly_decreasing(labels)]
    if len(decreasing) != 1:
        return None, f"{len(decreasing)} chains with decreasing labels"
    winner, winner_labels = decreasing[0]
    for chain, labels in labelled:
        if chain == winner:
            continue
        first = next(i for i in range(len(labels)) if labels[i] != winner_labels[i])
        step = compare_labels(winner_labels[first], labels[first])
        if step is not Comparison.GREATER:
            return None, (f"decreasing chain does not succeed {[str(ElementSet(m)) for m in chain]} "
                          f"at step {first + 1} ({step.value})")
    return winner, None


def verify_el(building_set: BuildingSet, max_ground: int = VERIFY_EL_MAX_GROUND) -> ELCertificate:
    """
    Check the edge labeling on every interval: exactly one maximal chain with
    weakly decreasing labels, and it succeeds every other chain strictly at
    the first label where they differ (incomparable counts as failure).
    """
    if len(building_set.ground) > max_ground:
        raise GroundTooLarge(len(building_set.ground), max_ground, what="verify-el")
    poset = build_hat_poset(building_set)
    _require_bounded(poset)
    chains: Dict[Tuple[ElementSet, ElementSet], Chain] = {}
    checked = 0
    for bottom in poset.element_masks:
        for top in poset.element_masks:
            if top == bottom or bottom & ~top:
                continue
            checked += 1
            winner, reason = _check_interval(poset, bottom, top)
            if winner is None:
                logger.info("EL check failed on [%s, %s]: %s", ElementSet(bottom), ElementSet(top), reason)
                return ELCertificate(False, chains, ELFailure(ElementSet(bottom), ElementSet(top), reason), checked)
            chains[(ElementSet(bottom), ElementSet(top))] = tuple(ElementSet(m) for m in winner)
    logger.info("✅ EL labeling verified on %d intervals", checked)
    return ELCertificate(True, chains, None, checked)


def full_chains(poset: HatPoset) -> List[Tuple[int, ...]]:
    _require_bounded(poset)
    return list(poset.chain_masks(0, poset.ground.mask))


def alt_histogram(poset: HatPoset, check: bool = True) -> Tuple[int, ...]:
    """
    alt_N = number of maximal chains of the whole poset with N decreasing
    positions, N = 0 .. k-1 where |ground| = 2k.
    """
    _require_bounded(poset)
    k = poset.rank
    if k < 1:
        raise EmptyInterval("the poset of the empty ground set has no edges")
    counts = [0] * k
    for chain in full_chains(poset):
        steps = label_steps(poset.chain_labels(chain))
        counts[sum(1 for s in steps if s is Comparison.GREATER)] += 1
    if check and counts[k - 1] != 1:
        raise VerificationFailure(f"expected one chain with {k - 1} decreasing positions, found {counts[k - 1]}")
    return tuple(counts)


def chains_without_decreasing_positions(poset: HatPoset) -> List[Chain]:
    result = []
    for chain in full_chains(poset):
        steps = label_steps(poset.chain_labels(chain))
        if Comparison.GREATER not in steps:
            result.append(tuple(ElementSet(m) for m in chain))
    return result


def chain_to_permutation(chain: Sequence[ElementSet], poset: HatPoset) -> Permutation:
    """Read off (max, min) of each added pair along a chain with no decreasing position"""
    masks = [element.mask for element in chain]
    if not masks or masks[0] != 0 or masks[-1] != poset.ground.mask:
        raise EmptyInterval("expected a maximal chain from the empty set to the ground set")
    labels = [poset.label(lower, upper) for lower, upper in zip(chain, chain[1:])]
    if Comparison.GREATER in label_steps(labels):
        raise ChainHasDecreasingPosition(f"chain {list(chain)} has a decreasing position")
    entries: List[int] = []
    for lower, upper in zip(masks, masks[1:]):
        added = upper & ~lower
        entries.extend((max_label(added), min_label(added)))
    return tuple(entries)


def permutation_to_chain(x: Sequence[int], building_set: BuildingSet) -> Chain:
    """I_i = {x_1, ..., x_2i} for an alternating B-permutation x"""
    if sorted(x) != list(building_set.ground.labels) or len(x) % 2:
        raise NotAlternatingBPermutation(f"{tuple(x)} is not a permutation of {building_set.ground} of even length")
    if not is_alternating(x) or not is_b_permutation(x, building_set):
        raise NotAlternatingBPermutation(f"{tuple(x)} is not an alternating B-permutation")
    chain = [ElementSet(0)]
    for i in range(2, len(x) + 1, 2):
        chain.append(ElementSet.from_labels(x[:i]))
    return tuple(chain)


@dataclass(frozen=True)
class EulerIdentity:
    chi: int
    alt_top: int
    alt_zero: int
    k: int

    @property
    def expected(self) -> int:
        return self.alt_top + (1 if self.k % 2 == 0 else -1) * self.alt_zero

    @property
    def holds(self) -> bool:
        return self.chi == self.expected

    def __bool__(self) -> bool:
        return self.holds


def euler_identity_check(building_set: BuildingSet) -> EulerIdentity:
    """chi(Delta(P_B)) against alt_{k-1} + (-1)^(k-2) alt_0, both computed independently"""
    check = is_chordal(building_set)
    if not check:
        raise NotChordal(check.member, check.tail)
    size = len(building_set.ground)
    if size % 2 or size < 4:
        raise OddGround(f"the identity needs |ground| = 2k with k >= 2, got {size}")
    poset = build_hat_poset(building_set)
    _require_bounded(poset)
    delta = order_complex(poset.proper_part(), poset.precedes)
    histogram = alt_histogram(poset)
    return EulerIdentity(euler_characteristic(delta), histogram[-1], histogram[0], poset.rank)
