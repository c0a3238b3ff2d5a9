"""Engine orchestrating sources, methods and verification"""
from typing import Dict, List, Optional, Union

from src.buildset.building_set import BuildingSet
from src.config.logging import get_logger
from src.config.settings import EngineSettings
from src.errors import InputError
from src.pipeline.graphs import a_number, signed_a_number
from src.pipeline.hochschild import hochschild_table
from src.pipeline.real_betti import compare_methods, complex_betti, sequence_shape
from src.pipeline.registry import MethodRegistry
from src.pipeline.reports import (
    BettiReport,
    BothMethodsReport,
    ComplexBettiReport,
    HochschildTableRow,
    MethodComparison,
)
from src.poset.shelling import ELCertificate, verify_el
from src.system.sources import Source

logger = get_logger(__name__)

METHODS = ("alternating", "homology", "both", "graph")


class BettiEngine:
    """Runs the registered methods against resolved sources under one set of settings"""

    def __init__(self, settings: Optional[EngineSettings] = None):
        self.settings = settings or EngineSettings()
        self.registry = MethodRegistry()
        logger.info("🧮 Betti engine initialized | Methods: %d | Threads: %d",
                    len(self.registry.list_methods()), self.settings.threads)

    def use_threads(self, threads: Optional[int]) -> None:
        """Override the worker count for subsequent calls (None keeps the setting)"""
        if threads is not None:
            self.settings = self.settings.model_copy(update={"threads": threads})

    # ========================================================================
    # REAL BETTI NUMBERS
    # ========================================================================

    def betti(self, source: Source, method: str = "alternating",
              unimodality: bool = False) -> Union[BettiReport, BothMethodsReport]:
        """Real Betti numbers of a source by one method or by both; aliases resolve through the registry"""
        method = self.registry.resolve_name(method)
        if method not in METHODS:
            raise InputError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
        if method == "both":
            report = BothMethodsReport(source=source.name,
                                       alternating=self._run(source, "alternating", unimodality),
                                       homology=self._run(source, "homology", unimodality))
            logger.info("%s Methods %s on %s", "✅" if report.agree else "⚠️",
                        "agree" if report.agree else "disagree", source.name)
            return report
        return self._run(source, method, unimodality)

    def _run(self, source: Source, method: str, unimodality: bool) -> BettiReport:
        report = self._dispatch(source, method)
        if unimodality:
            report = report.model_copy(update={"shape": sequence_shape(report.betti)})
        return report

    def _dispatch(self, source: Source, method: str) -> BettiReport:
        s = self.settings
        if method == "graph":
            if source.graph is None:
                raise InputError("the graph method needs a graph source")
            return self.registry.get_method("graph")(source.graph, max_vertices=s.a_number_max_vertices,
                                                     source=source.name)
        if method == "alternating" and source.hochschild is not None:
            m, n = source.hochschild
            return self.registry.get_method("hochschild")(m, n, source=source.name)
        if method == "alternating":
            return self.registry.get_method("alternating")(source.building_set, threads=s.threads,
                                                           source=source.name)
        max_ground = s.max_homology_ground
        if source.hochschild is not None:
            max_ground = min(max_ground, s.hochschild_homology_max)
        return self.registry.get_method("homology")(source.building_set, threads=s.threads,
                                                    max_ground=max_ground, fast=s.homology_fast_path,
                                                    dense_limit=s.dense_rank_limit,
                                                    max_faces=s.max_complex_faces, source=source.name)

    # ========================================================================
    # OTHER COMPUTATIONS
    # ========================================================================

    def complex_betti(self, source: Source) -> ComplexBettiReport:
        return complex_betti(source.building_set, source=source.name)

    def verify_el(self, building_set: BuildingSet, max_ground: Optional[int] = None) -> ELCertificate:
        if max_ground is None:
            max_ground = self.settings.verify_el_max_ground
        return verify_el(building_set, max_ground=max_ground)

    def a_numbers(self, source: Source) -> Dict[str, object]:
        if source.graph is None:
            raise InputError("a-numbers need a graph source")
        limit = self.settings.a_number_max_vertices
        return {
            "source": source.name,
            "a": a_number(source.graph, max_vertices=limit),
            "sa": signed_a_number(source.graph, max_vertices=limit),
        }

    def compare(self, source: Source) -> MethodComparison:
        s = self.settings
        return compare_methods(source.building_set, threads=s.threads, max_ground=s.max_homology_ground,
                               fast=s.homology_fast_path, dense_limit=s.dense_rank_limit,
                               max_faces=s.max_complex_faces, source=source.name)

    def hochschild_table(self, max_m: int) -> List[HochschildTableRow]:
        return hochschild_table(max_m)
