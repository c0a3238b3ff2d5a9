"""Input sources: building-set text, graph text, Hochschild pairs and graph families"""
from dataclasses import dataclass
from typing import Optional, Tuple

from src.buildset.building_set import BuildingSet, graphical_building_set, hochschild_building_set
from src.buildset.graph import SimpleGraph, complete_graph, cycle_graph, path_graph, star_graph
from src.cli.formats import parse_building_set_file, parse_graph_file
from src.config.settings import MAX_ENUMERATION_GROUND
from src.errors import GroundTooLarge, InputError

GRAPH_FAMILIES = {
    "complete": complete_graph,
    "path": path_graph,
    "star": star_graph,
    "cycle": cycle_graph,
}


@dataclass(frozen=True)
class Source:
    """A resolved input; graph and Hochschild sources keep their structure"""

    name: str
    building_set: BuildingSet
    graph: Optional[SimpleGraph] = None
    hochschild: Optional[Tuple[int, int]] = None


def resolve_source(building_set_text: Optional[str] = None, graph_text: Optional[str] = None,
                   hochschild: Optional[Tuple[int, int]] = None, complete: Optional[int] = None,
                   path: Optional[int] = None, star: Optional[int] = None, cycle: Optional[int] = None,
                   add_singletons: bool = False, name: Optional[str] = None,
                   max_ground: int = MAX_ENUMERATION_GROUND) -> Source:
    """Exactly one of the source arguments must be given"""
    families = {"complete": complete, "path": path, "star": star, "cycle": cycle}
    given = [k for k, v in (("building_set", building_set_text), ("graph", graph_text),
                            ("hochschild", hochschild), *families.items()) if v is not None]
    if len(given) != 1:
        raise InputError(f"exactly one input source is required, got {len(given)}", sources=given)
    kind = given[0]

    if kind == "building_set":
        building_set = parse_building_set_file(building_set_text, add_singletons=add_singletons)
        if len(building_set.ground) > max_ground:
            raise GroundTooLarge(len(building_set.ground), max_ground)
        return Source(name or "building-set", building_set)

    if kind == "hochschild":
        m, n = hochschild
        if m < 0 or n < 0 or m + n < 1:
            raise InputError(f"Hochschild parameters need m, n >= 0 and m + n >= 1, got ({m}, {n})")
        # members are enumerated over subsets of the m lights only
        if m > max_ground:
            raise GroundTooLarge(m, max_ground)
        return Source(name or f"hochschild({m},{n})", hochschild_building_set(m, n), hochschild=(m, n))

    if kind == "graph":
        graph = parse_graph_file(graph_text)
        label = name or "graph"
    else:
        size = families[kind]
        if size < 1:
            raise InputError(f"--{kind} needs a positive vertex count, got {size}")
        graph = GRAPH_FAMILIES[kind](size)
        label = name or f"{kind}({size})"
    return Source(label, graphical_building_set(graph, max_ground=max_ground), graph=graph)
