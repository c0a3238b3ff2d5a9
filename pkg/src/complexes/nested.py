"""Nested set complexes K_B and their parity-induced subcomplexes"""
from typing import Callable, Iterable, List, Optional, Sequence

from src.buildset.building_set import BuildingSet
from src.buildset.element_set import ElementSet, popcount
from src.complexes.simplicial import SimplicialComplex, clique_faces
from src.config.logging import get_logger
from src.config.settings import MAX_COMPLEX_FACES
from src.errors import OddGround, VertexNotInBuildingSet

logger = get_logger(__name__)


def _compatible(building_set: BuildingSet, a: int, b: int) -> bool:
    if a & b:
        return a & b == a or a & b == b
    return not building_set.contains_mask(a | b)


def _unions_avoid_members(building_set: BuildingSet, others: Sequence[int], new: int) -> bool:
    """No pairwise-disjoint sub-collection of `others`, together with `new`, unions into B"""
    disjoint = [m for m in others if not m & new]

    def search(start: int, union: int) -> bool:
        for i in range(start, len(disjoint)):
            m = disjoint[i]
            if m & union:
                continue
            grown = union | m
            if building_set.contains_mask(grown):
                return False
            if not search(i + 1, grown):
                return False
        return True

    return search(0, new)


def is_nested_set(collection: Iterable[ElementSet], building_set: BuildingSet) -> bool:
    """
    Pairwise nested-or-disjoint, and no pairwise-disjoint sub-collection of
    size >= 2 has its union in B.
    """
    masks = []
    for member in collection:
        if member not in building_set:
            raise VertexNotInBuildingSet(member)
        if member == building_set.ground:
            raise VertexNotInBuildingSet(member, "is the ground set, not a vertex")
        masks.append(member.mask)
    masks = sorted(set(masks))
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b and a & b not in (a, b):
                return False
    for i, a in enumerate(masks):
        if not _unions_avoid_members(building_set, masks[i + 1:], a):
            return False
    return True


def complex_vertices(building_set: BuildingSet, exclude_components: bool = False) -> List[int]:
    """
    Vertex masks of K_B in member order: every member except the ground set,
    or except every connected component when `exclude_components` is set.
    """
    excluded = {building_set.ground.mask}
    if exclude_components:
        excluded.update(building_set.component_masks())
    return [m for m in building_set.member_masks if m not in excluded]


def _nested_complex_on(building_set: BuildingSet, vertices: List[int],
                       max_faces: int) -> SimplicialComplex:
    adjacency = [0] * len(vertices)
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if _compatible(building_set, a, vertices[j]):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i

    def accept(face: int, v: int) -> bool:
        members = []
        rest = face
        while rest:
            low = rest & -rest
            members.append(vertices[low.bit_length() - 1])
            rest ^= low
        return _unions_avoid_members(building_set, members, vertices[v])

    faces = clique_faces(adjacency, max_faces=max_faces, accept=accept)
    logger.debug("Nested set complex on %d vertices has %d faces", len(vertices), len(faces))
    return SimplicialComplex([ElementSet(m) for m in vertices], faces)


def nested_set_complex(building_set: BuildingSet, exclude_components: bool = False,
                       vertex_filter: Optional[Callable[[int], bool]] = None,
                       max_faces: int = MAX_COMPLEX_FACES) -> SimplicialComplex:
    """
    K_B, the complex of nested sets. With `vertex_filter` the full
    subcomplex on the accepted vertex masks is built directly.
    """
    vertices = complex_vertices(building_set, exclude_components)
    if vertex_filter is not None:
        vertices = [m for m in vertices if vertex_filter(m)]
    return _nested_complex_on(building_set, vertices, max_faces)


def induced_parity_subcomplex(building_set: BuildingSet, subset: ElementSet,
                              max_faces: int = MAX_COMPLEX_FACES) -> SimplicialComplex:
    """(K_B)_I: full subcomplex on the vertices J with |J & I| odd; void for I empty"""
    if len(subset) % 2:
        raise OddGround(f"parity subcomplexes need an even subset, got {subset}")
    if not subset:
        return SimplicialComplex.void()
    inside = subset.mask
    return nested_set_complex(building_set, vertex_filter=lambda m: popcount(m & inside) % 2 == 1,
                              max_faces=max_faces)


def odd_complex(building_set: BuildingSet, max_faces: int = MAX_COMPLEX_FACES) -> SimplicialComplex:
    """K^odd: full subcomplex on the odd-cardinality vertices"""
    return nested_set_complex(building_set, vertex_filter=lambda m: popcount(m) % 2 == 1,
                              max_faces=max_faces)


def even_complex(building_set: BuildingSet, max_faces: int = MAX_COMPLEX_FACES) -> SimplicialComplex:
    """K^even: full subcomplex on the even-cardinality vertices"""
    return nested_set_complex(building_set, vertex_filter=lambda m: popcount(m) % 2 == 0,
                              max_faces=max_faces)
