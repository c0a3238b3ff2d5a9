"""Finite abstract simplicial complexes with explicit face lists"""
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from src.config.settings import MAX_COMPLEX_FACES
from src.errors import TooLarge


def face_indices(face: int) -> Tuple[int, ...]:
    out = []
    while face:
        low = face & -face
        out.append(low.bit_length() - 1)
        face ^= low
    return tuple(out)


class SimplicialComplex:
    """
    A complex on an ordered vertex list; faces are bit masks over vertex
    positions. The void complex has no faces at all; the empty complex has
    only the empty face.
    """

    __slots__ = ("vertices", "faces", "_index")

    def __init__(self, vertices: Sequence[Hashable], faces: Iterable[int]):
        self.vertices: Tuple[Hashable, ...] = tuple(vertices)
        self.faces: FrozenSet[int] = frozenset(faces)
        self._index: Dict[Hashable, int] = {v: i for i, v in enumerate(self.vertices)}

    @classmethod
    def void(cls, vertices: Sequence[Hashable] = ()) -> "SimplicialComplex":
        return cls(vertices, ())

    @classmethod
    def from_facets(cls, vertices: Sequence[Hashable], facets: Iterable[Iterable[Hashable]],
                    max_faces: int = MAX_COMPLEX_FACES) -> "SimplicialComplex":
        """Downward closure of the given facets (always contains the empty face)"""
        index = {v: i for i, v in enumerate(vertices)}
        faces = {0}
        for facet in facets:
            positions = [index[v] for v in facet]
            for size in range(1, len(positions) + 1):
                for subset in combinations(positions, size):
                    mask = 0
                    for p in subset:
                        mask |= 1 << p
                    faces.add(mask)
            if len(faces) > max_faces:
                raise TooLarge(f"complex exceeds {max_faces} faces")
        return cls(vertices, faces)

    # ------------------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_empty(self) -> bool:
        return self.faces == frozenset({0})

    @property
    def dimension(self) -> int:
        """-1 for the empty complex, -2 for the void complex"""
        if not self.faces:
            return -2
        return max(face.bit_count() for face in self.faces) - 1

    def face_vertices(self, face: int) -> Tuple[Hashable, ...]:
        return tuple(self.vertices[i] for i in face_indices(face))

    def face_mask(self, vertices: Iterable[Hashable]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self._index[v]
        return mask

    def has_face(self, vertices: Iterable[Hashable]) -> bool:
        return self.face_mask(vertices) in self.faces

    def faces_of_dimension(self, dim: int) -> List[int]:
        """Faces with dim + 1 vertices, sorted by their vertex positions"""
        return sorted((f for f in self.faces if f.bit_count() == dim + 1), key=face_indices)

    def f_vector(self) -> Tuple[int, ...]:
        """Face counts f_{-1}, f_0, ..., f_dim"""
        if not self.faces:
            return ()
        counts = [0] * (self.dimension + 2)
        for face in self.faces:
            counts[face.bit_count()] += 1
        return tuple(counts)

    def facets(self) -> List[int]:
        """Maximal faces"""
        used = self.used_vertex_mask()
        facets = []
        for face in self.faces:
            free = used & ~face
            maximal = True
            while free:
                bit = free & -free
                free ^= bit
                if face | bit in self.faces:
                    maximal = False
                    break
            if maximal:
                facets.append(face)
        return sorted(facets, key=face_indices)

    def used_vertex_mask(self) -> int:
        mask = 0
        for face in self.faces:
            mask |= face
        return mask

    def adjacency(self) -> List[int]:
        """Neighbour masks of the 1-skeleton"""
        adjacency = [0] * len(self.vertices)
        for face in self.faces:
            if face.bit_count() == 2:
                a, b = face_indices(face)
                adjacency[a] |= 1 << b
                adjacency[b] |= 1 << a
        return adjacency

    def is_downward_closed(self) -> bool:
        for face in self.faces:
            rest = face
            while rest:
                bit = rest & -rest
                rest ^= bit
                if face & ~bit not in self.faces:
                    return False
        return True

    def full_subcomplex(self, keep: Callable[[Hashable], bool]) -> "SimplicialComplex":
        """Faces whose vertices all satisfy `keep`, on the kept vertices"""
        kept = [i for i, v in enumerate(self.vertices) if keep(v)]
        position = {old: new for new, old in enumerate(kept)}
        allowed = 0
        for i in kept:
            allowed |= 1 << i
        faces = []
        for face in self.faces:
            if face & ~allowed:
                continue
            mask = 0
            for i in face_indices(face):
                mask |= 1 << position[i]
            faces.append(mask)
        return SimplicialComplex([self.vertices[i] for i in kept], faces)

    def relabeled(self, mapping: Callable[[Hashable], Hashable],
                  order: Optional[Sequence[int]] = None) -> "SimplicialComplex":
        """Rename vertices; `order` optionally permutes vertex positions"""
        order = list(range(len(self.vertices))) if order is None else list(order)
        new_position = {old: new for new, old in enumerate(order)}
        faces = []
        for face in self.faces:
            mask = 0
            for i in face_indices(face):
                mask |= 1 << new_position[i]
            faces.append(mask)
        return SimplicialComplex([mapping(self.vertices[i]) for i in order], faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return False
        mine = {frozenset(self.face_vertices(f)) for f in self.faces}
        theirs = {frozenset(other.face_vertices(f)) for f in other.faces}
        return mine == theirs

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={len(self.vertices)}, f_vector={self.f_vector()})"


# ============================================================================
# CLIQUE-BASED CONSTRUCTIONS
# ============================================================================

def clique_faces(adjacency: Sequence[int], max_faces: int = MAX_COMPLEX_FACES,
                 accept: Optional[Callable[[int, int], bool]] = None) -> List[int]:
    """
    All cliques (as position masks, including the empty one) of a graph given
    by neighbour masks. `accept(face, v)` can veto adding vertex v to face.
    """
    faces = [0]

    def grow(face: int, candidates: int) -> None:
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            v = bit.bit_length() - 1
            if accept is not None and not accept(face, v):
                continue
            new = face | bit
            faces.append(new)
            if len(faces) > max_faces:
                raise TooLarge(f"complex exceeds {max_faces} faces")
            grow(new, candidates & adjacency[v])

    grow(0, (1 << len(adjacency)) - 1)
    return faces


def order_complex(elements: Sequence[Hashable], precedes: Callable[[Hashable, Hashable], bool],
                  max_faces: int = MAX_COMPLEX_FACES) -> SimplicialComplex:
    """Delta(P): faces are the chains of the strict order `precedes`"""
    adjacency = [0] * len(elements)
    for i, a in enumerate(elements):
        for j in range(i + 1, len(elements)):
            b = elements[j]
            if precedes(a, b) or precedes(b, a):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return SimplicialComplex(elements, clique_faces(adjacency, max_faces))


@dataclass(frozen=True)
class FlagCheck:
    is_flag: bool
    witness: Optional[Tuple[Hashable, ...]] = None

    def __bool__(self) -> bool:
        return self.is_flag


def is_flag(complex_: SimplicialComplex) -> FlagCheck:
    """Every clique of the 1-skeleton is a face; witness is a minimal non-face"""
    if complex_.is_void:
        return FlagCheck(True)
    adjacency = complex_.adjacency()
    used = complex_.used_vertex_mask()
    best: Optional[int] = None
    # a minimal non-face clique C is F + v with v = max(C) and F a face
    for face in complex_.faces:
        if not face:
            continue
        common = used
        for i in face_indices(face):
            common &= adjacency[i]
        common &= ~((1 << face.bit_length()) - 1)
        while common:
            bit = common & -common
            common ^= bit
            candidate = face | bit
            if candidate in complex_.faces:
                continue
            if best is None or (candidate.bit_count(), face_indices(candidate)) < (best.bit_count(), face_indices(best)):
                best = candidate
    if best is None:
        return FlagCheck(True)
    return FlagCheck(False, complex_.face_vertices(best))
