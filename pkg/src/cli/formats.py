"""Flat-file formats for building sets and graphs"""
from typing import Dict, Iterator, List, Optional, Set, Tuple

from src.buildset.building_set import BuildingSet, validate_building_set
from src.buildset.element_set import ElementSet, labels_of
from src.buildset.graph import SimpleGraph
from src.config.settings import MAX_LABEL
from src.errors import (
    BuildingSetError,
    LabelOutsideGround,
    LoopEdge,
    ParseError,
    UnionAxiomViolated,
)

GROUND_KEY = "ground:"
VERTICES_KEY = "vertices:"


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    """(line number, content) of non-blank lines with comments stripped"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _labels(fields: List[str], line: int, max_label: int) -> List[int]:
    labels = []
    for field in fields:
        try:
            label = int(field)
        except ValueError:
            raise ParseError(f"expected a positive integer, got {field!r}", line) from None
        if label < 1 or label > max_label:
            raise ParseError(f"label {label} outside 1..{max_label}", line, label=label)
        labels.append(label)
    if len(set(labels)) != len(labels):
        raise ParseError("repeated label", line)
    return labels


def _with_line(error: BuildingSetError, line: Optional[int]) -> BuildingSetError:
    if line is not None:
        error.message = f"line {line}: {error.message}"
        error.args = (error.message,)
        error.details["line"] = line
    return error


def parse_building_set_file(text: str, add_singletons: bool = False, max_label: int = MAX_LABEL) -> BuildingSet:
    """
    Parse one member per line with an optional `ground: ...` line.

    The ground defaults to the union of the members. Axiom violations are
    raised as the usual building-set errors with the offending line attached.
    """
    ground: Optional[ElementSet] = None
    line_of: Dict[int, int] = {}
    for number, line in _lines(text):
        if line.lower().startswith(GROUND_KEY):
            if ground is not None:
                raise ParseError("ground declared twice", number)
            ground = ElementSet.from_labels(_labels(line[len(GROUND_KEY):].split(), number, max_label))
            continue
        member = ElementSet.from_labels(_labels(line.split(), number, max_label))
        line_of.setdefault(member.mask, number)

    if ground is None:
        union = 0
        for mask in line_of:
            union |= mask
        ground = ElementSet(union)
    family = [ElementSet(m) for m in line_of]
    if add_singletons:
        family.extend(ElementSet.of(label) for label in ground.labels if (1 << (label - 1)) not in line_of)

    try:
        return validate_building_set(family, ground)
    except UnionAxiomViolated as e:
        raise _with_line(e, max(line_of.get(e.first.mask, 0), line_of.get(e.second.mask, 0)) or None)
    except LabelOutsideGround as e:
        lines = [n for mask, n in line_of.items() if mask >> (e.label - 1) & 1]
        raise _with_line(e, min(lines) if lines else None)


def parse_graph_file(text: str, max_label: int = MAX_LABEL) -> SimpleGraph:
    """Edges `u v`, one per line; isolated vertices only through a `vertices: ...` line"""
    declared: Optional[Set[int]] = None
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    for number, line in _lines(text):
        if line.lower().startswith(VERTICES_KEY):
            if declared is not None:
                raise ParseError("vertices declared twice", number)
            declared = set(_labels(line[len(VERTICES_KEY):].split(), number, max_label))
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"an edge line needs two labels, got {len(fields)}", number)
        u, v = (_labels([field], number, max_label)[0] for field in fields)
        if u == v:
            raise LoopEdge(u)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", number)
        seen.add(key)
        edges.append((u, v))

    endpoints = {x for edge in edges for x in edge}
    if declared is not None:
        outside = sorted(endpoints - declared)
        if outside:
            raise ParseError(f"edge endpoint {outside[0]} is not a declared vertex")
        vertices = declared
    else:
        vertices = endpoints
    return SimpleGraph(sorted(vertices), edges)


def emit_building_set(building_set: BuildingSet) -> str:
    """Canonical text: the ground line, then members by size and labels"""
    lines = [f"{GROUND_KEY} " + " ".join(str(x) for x in building_set.ground.labels)]
    lines.extend(" ".join(str(x) for x in labels_of(mask)) for mask in building_set.member_masks)
    return "\n".join(lines) + "\n"


def emit_graph(graph: SimpleGraph) -> str:
    lines = [f"{VERTICES_KEY} " + " ".join(str(x) for x in graph.vertices.labels)]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


__all__ = [
    "emit_building_set",
    "emit_graph",
    "parse_building_set_file",
    "parse_graph_file",
]
