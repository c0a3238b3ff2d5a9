"""a-numbers of graphs and the graph form of the real Betti formula"""
import time
from functools import lru_cache
from typing import Callable

from src.buildset.element_set import iter_submasks, labels_of, popcount
from src.buildset.graph import SimpleGraph
from src.config.logging import get_logger
from src.config.settings import A_NUMBER_MAX_VERTICES
from src.errors import TooLarge
from src.pipeline.real_betti import even_subsets
from src.pipeline.reports import BettiReport, Contribution, trim_betti

logger = get_logger(__name__)


def _signed_table(graph: SimpleGraph, max_vertices: int) -> Callable[[int], int]:
    """sa over vertex masks of the graph, memoized"""
    if len(graph) > max_vertices:
        raise TooLarge(f"a-numbers are bounded to {max_vertices} vertices, got {len(graph)}",
                       size=len(graph), limit=max_vertices)

    @lru_cache(maxsize=None)
    def sa(mask: int) -> int:
        if mask == 0:
            return 1
        components = graph.component_masks(mask)
        if len(components) > 1:
            product = 1
            for component in components:
                product *= sa(component)
                if product == 0:
                    break
            return product
        if popcount(mask) % 2:
            return 0
        return -sum(sa(sub) for sub in iter_submasks(mask) if sub != mask)

    return sa


def signed_a_number(graph: SimpleGraph, max_vertices: int = A_NUMBER_MAX_VERTICES) -> int:
    return _signed_table(graph, max_vertices)(graph.vertices.mask)


def a_number(graph: SimpleGraph, max_vertices: int = A_NUMBER_MAX_VERTICES) -> int:
    """a(G) = |sa(G)|; sa(empty) = 1 and sa is multiplicative over components"""
    return abs(signed_a_number(graph, max_vertices))


def real_betti_graph(graph: SimpleGraph, max_vertices: int = A_NUMBER_MAX_VERTICES,
                     source: str = "") -> BettiReport:
    """beta_k of the graphical toric manifold as the sum of a(G|_I) over 2k-subsets I"""
    start = time.perf_counter()
    sa = _signed_table(graph, max_vertices)
    breakdown = [Contribution(subset=[], k=0, count=1)]
    totals = [1]
    for mask in even_subsets(graph.vertices):
        value = abs(sa(mask))
        if not value:
            continue
        k = popcount(mask) // 2
        breakdown.append(Contribution(subset=list(labels_of(mask)), k=k, count=value))
        if k >= len(totals):
            totals.extend([0] * (k + 1 - len(totals)))
        totals[k] += value
    elapsed = time.perf_counter() - start
    logger.info("🧮 a-numbers over %d vertices in %.3fs", len(graph), elapsed)
    return BettiReport(source=source, method="graph", betti=trim_betti(totals),
                       breakdown=breakdown, elapsed_seconds=elapsed)
