"""Real and complex Betti numbers of toric manifolds of building sets"""
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Sequence, Tuple, TypeVar

from src.buildset.building_set import BuildingSet, is_chordal
from src.buildset.element_set import ElementSet, iter_submasks_of_size, labels_of
from src.complexes.nested import induced_parity_subcomplex
from src.config.logging import get_logger
from src.config.settings import (
    DEFAULT_THREADS,
    DENSE_RANK_LIMIT,
    HOMOLOGY_FAST_PATH,
    MAX_COMPLEX_FACES,
    MAX_HOMOLOGY_GROUND,
)
from src.errors import GroundTooLarge, MethodMismatch, NotChordal, NotConnected
from src.homology.betti import reduced_betti
from src.perms.permutations import count_alternating_b_permutations, descent_histogram_of_b_permutations
from src.pipeline.reports import (
    BettiReport,
    ComplexBettiReport,
    Contribution,
    MethodComparison,
    SequenceShape,
    SubsetComparison,
    trim_betti,
)

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


# ============================================================================
# SUBSET ITERATION
# ============================================================================

def even_subsets(ground: ElementSet) -> List[int]:
    """Non-empty even subsets, by size then lexicographically"""
    size = len(ground)
    return [mask for k in range(1, size // 2 + 1) for mask in iter_submasks_of_size(ground.mask, 2 * k)]


def map_subsets(worker: Callable[[T], R], tasks: Sequence[T], threads: int = DEFAULT_THREADS) -> List[R]:
    """Apply a module-level worker to every task; results keep task order"""
    if threads <= 1 or len(tasks) < 2:
        return [worker(task) for task in tasks]
    chunksize = max(1, len(tasks) // (threads * 4))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, tasks, chunksize=chunksize))


def _require_connected(building_set: BuildingSet) -> None:
    if not building_set.is_connected:
        raise NotConnected([ElementSet(c) for c in building_set.component_masks()])


def _require_chordal(building_set: BuildingSet) -> None:
    check = is_chordal(building_set)
    if not check:
        raise NotChordal(check.member, check.tail)


def _empty_contribution() -> Contribution:
    return Contribution(subset=[], k=0, count=1)


def _totals(breakdown: List[Contribution]) -> List[int]:
    totals: List[int] = []
    for c in breakdown:
        _add(totals, c.k, c.count)
    return trim_betti(totals)


# ============================================================================
# WORKERS (module level so the process pool can pickle them)
# ============================================================================

def _alternating_worker(task: Tuple[BuildingSet, int]) -> int:
    building_set, mask = task
    if building_set.has_odd_component(mask):
        return 0
    return count_alternating_b_permutations(building_set, ElementSet(mask))


def _homology_worker(task: Tuple[BuildingSet, int, bool, int, int]) -> Dict[int, int]:
    building_set, mask, fast, dense_limit, max_faces = task
    complex_ = induced_parity_subcomplex(building_set, ElementSet(mask), max_faces=max_faces)
    betti = reduced_betti(complex_, fast=fast, dense_limit=dense_limit)
    # reduced degree d contributes to beta_{d+1}
    return {degree + 1: value for degree, value in betti.as_dict().items()}


def _alternating_counts(building_set: BuildingSet, threads: int) -> List[Tuple[int, int]]:
    subsets = even_subsets(building_set.ground)
    counts = map_subsets(_alternating_worker, [(building_set, m) for m in subsets], threads)
    return list(zip(subsets, counts))


def _homology_counts(building_set: BuildingSet, threads: int, fast: bool, dense_limit: int,
                     max_faces: int) -> List[Tuple[int, Dict[int, int]]]:
    subsets = even_subsets(building_set.ground)
    tasks = [(building_set, m, fast, dense_limit, max_faces) for m in subsets]
    return list(zip(subsets, map_subsets(_homology_worker, tasks, threads)))


# ============================================================================
# REAL BETTI NUMBERS
# ============================================================================

def real_betti_alternating(building_set: BuildingSet, threads: int = DEFAULT_THREADS,
                           source: str = "") -> BettiReport:
    """
    beta_k as the number of alternating B|_I-permutations summed over the
    2k-subsets I. Subsets whose restriction has an odd component are skipped.

    Args:
        building_set: A connected chordal building set.
        threads: Worker processes used for the subset loop.
        source: Label carried into the report.

    Returns:
        BettiReport with the per-subset breakdown (the empty subset gives beta_0 = 1).
    """
    _require_connected(building_set)
    _require_chordal(building_set)
    start = time.perf_counter()
    breakdown = [_empty_contribution()]
    for mask, count in _alternating_counts(building_set, threads):
        if count:
            breakdown.append(Contribution(subset=list(labels_of(mask)), k=len(labels_of(mask)) // 2, count=count))
    elapsed = time.perf_counter() - start
    logger.info("🧮 Alternating count over %d subsets in %.3fs", len(breakdown), elapsed)
    return BettiReport(source=source, method="alternating", betti=_totals(breakdown),
                       breakdown=breakdown, elapsed_seconds=elapsed)


def real_betti_homology_oracle(building_set: BuildingSet, threads: int = DEFAULT_THREADS,
                               max_ground: int = MAX_HOMOLOGY_GROUND, fast: bool = HOMOLOGY_FAST_PATH,
                               dense_limit: int = DENSE_RANK_LIMIT, max_faces: int = MAX_COMPLEX_FACES,
                               source: str = "") -> BettiReport:
    """beta_k as the sum of reduced beta_{k-1} of (K_B)_I over even subsets I; no chordality needed"""
    _require_connected(building_set)
    size = len(building_set.ground)
    if size > max_ground:
        raise GroundTooLarge(size, max_ground, what="homology")
    start = time.perf_counter()
    breakdown = [_empty_contribution()]
    for mask, by_k in _homology_counts(building_set, threads, fast, dense_limit, max_faces):
        for k in sorted(by_k):
            breakdown.append(Contribution(subset=list(labels_of(mask)), k=k, count=by_k[k]))
    elapsed = time.perf_counter() - start
    logger.info("🧮 Homology oracle over %d subsets in %.3fs", 2 ** max(size - 1, 0) - 1, elapsed)
    return BettiReport(source=source, method="homology", betti=_totals(breakdown),
                       breakdown=breakdown, elapsed_seconds=elapsed)


def compare_methods(building_set: BuildingSet, threads: int = DEFAULT_THREADS,
                    max_ground: int = MAX_HOMOLOGY_GROUND, fast: bool = HOMOLOGY_FAST_PATH,
                    dense_limit: int = DENSE_RANK_LIMIT, max_faces: int = MAX_COMPLEX_FACES,
                    source: str = "") -> MethodComparison:
    """
    Run both counts subset by subset. Chordal inputs must agree everywhere
    (MethodMismatch otherwise); other inputs report the disagreeing subsets.
    """
    _require_connected(building_set)
    size = len(building_set.ground)
    if size > max_ground:
        raise GroundTooLarge(size, max_ground, what="homology")
    chordal = bool(is_chordal(building_set))
    alternating = dict(_alternating_counts(building_set, threads))
    homology = dict(_homology_counts(building_set, threads, fast, dense_limit, max_faces))

    alt_totals, hom_totals = [1], [1]
    mismatches = []
    for mask in even_subsets(building_set.ground):
        row = SubsetComparison(subset=list(labels_of(mask)), alternating=alternating[mask], homology=homology[mask])
        k = len(row.subset) // 2
        _add(alt_totals, k, row.alternating)
        for degree_k, value in row.homology.items():
            _add(hom_totals, degree_k, value)
        if not row.agrees:
            mismatches.append(row)

    result = MethodComparison(source=source, chordal=chordal, alternating=trim_betti(alt_totals),
                              homology=trim_betti(hom_totals), mismatches=mismatches)
    if chordal and not result.agree:
        raise MethodMismatch(f"methods disagree on a chordal building set: {result.alternating} vs {result.homology}",
                             mismatches=[m.subset for m in mismatches])
    logger.info("%s Methods compared: %d mismatching subsets", "✅" if result.agree else "⚠️", len(mismatches))
    return result


def _add(totals: List[int], k: int, value: int) -> None:
    if k >= len(totals):
        totals.extend([0] * (k + 1 - len(totals)))
    totals[k] += value


# ============================================================================
# COMPLEX BETTI NUMBERS AND SHAPE
# ============================================================================

def complex_betti(building_set: BuildingSet, source: str = "") -> ComplexBettiReport:
    """beta_{2d} = number of B-permutations with d descents; odd degrees vanish"""
    histogram = descent_histogram_of_b_permutations(building_set)
    betti = [0] * (2 * len(histogram) - 1)
    for d in range(len(histogram)):
        betti[2 * d] = histogram[d]
    return ComplexBettiReport(source=source, betti=betti)


def sequence_shape(values: Sequence[int]) -> SequenceShape:
    """Unimodality and log-concavity of a non-negative sequence"""
    values = list(values)
    peak = values.index(max(values)) if values else 0
    unimodal = (all(a <= b for a, b in zip(values[:peak], values[1:peak + 1]))
                and all(a >= b for a, b in zip(values[peak:], values[peak + 1:])))
    log_concave = all(values[i] ** 2 >= values[i - 1] * values[i + 1] for i in range(1, len(values) - 1))
    return SequenceShape(unimodal=unimodal, log_concave=log_concave)
