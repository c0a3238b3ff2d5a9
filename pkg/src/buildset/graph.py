"""Simple graphs on labeled vertices and their standard families"""
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from src.buildset.element_set import ElementSet, labels_of, mask_of
from src.errors import InvalidGraph, LoopEdge


class SimpleGraph:
    """
    Undirected graph without loops or multi-edges.

    The vertex labels carry meaning: chordality of the graphical building set
    and the perfect elimination test both read the numeric order of labels.
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[Tuple[int, int]] = ()):
        self.vertices = ElementSet.from_labels(vertices)
        self._graph = nx.Graph()
        self._graph.add_nodes_from(self.vertices.labels)
        for u, v in edges:
            if u == v:
                raise LoopEdge(u)
            if u not in self.vertices or v not in self.vertices:
                raise InvalidGraph(f"edge {u}-{v} has an endpoint outside the vertex set {self.vertices}")
            self._graph.add_edge(u, v)
        self._adjacency: Dict[int, int] = {
            v: mask_of(self._graph.neighbors(v)) for v in self.vertices.labels
        }

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        return cls(graph.nodes, graph.edges)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (smaller, larger) label pairs, sorted"""
        return sorted((min(u, v), max(u, v)) for u, v in self._graph.edges)

    def to_networkx(self) -> nx.Graph:
        return self._graph.copy()

    def has_edge(self, u: int, v: int) -> bool:
        return self._graph.has_edge(u, v)

    def neighbor_mask(self, v: int) -> int:
        return self._adjacency[v]

    def induced(self, subset: ElementSet) -> "SimpleGraph":
        """Induced subgraph G|_I"""
        keep = [v for v in subset.labels if v in self.vertices]
        return SimpleGraph(keep, self._graph.subgraph(keep).edges)

    def component_masks(self, mask: Optional[int] = None) -> List[int]:
        """Connected components of the subgraph induced on `mask`, by smallest label"""
        remaining = self.vertices.mask if mask is None else mask & self.vertices.mask
        components = []
        while remaining:
            low = remaining & -remaining
            component = frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = self._adjacency[bit.bit_length()] & remaining & ~component
                component |= new
                frontier |= new
            components.append(component)
            remaining &= ~component
        return components

    def is_connected_mask(self, mask: int) -> bool:
        return mask != 0 and len(self.component_masks(mask)) == 1

    def connected_vertex_sets(self) -> List[int]:
        """Masks of all non-empty vertex sets inducing a connected subgraph"""
        found = set()
        stack = [1 << (v - 1) for v in self.vertices.labels]
        found.update(stack)
        while stack:
            mask = stack.pop()
            boundary = 0
            for v in labels_of(mask):
                boundary |= self._adjacency[v]
            boundary &= ~mask
            while boundary:
                bit = boundary & -boundary
                boundary ^= bit
                grown = mask | bit
                if grown not in found:
                    found.add(grown)
                    stack.append(grown)
        return list(found)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimpleGraph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __repr__(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"SimpleGraph(vertices={self.vertices}, edges=[{edges}])"


def is_perfect_elimination_ordering(graph: SimpleGraph) -> bool:
    """True iff for all i < j < k, edges ij and ik force the edge jk"""
    for i in graph.vertices.labels:
        larger = [v for v in labels_of(graph.neighbor_mask(i)) if v > i]
        for j, k in combinations(larger, 2):
            if not graph.has_edge(j, k):
                return False
    return True


# ============================================================================
# STANDARD FAMILIES (vertices 1..n)
# ============================================================================

def _relabeled(graph: nx.Graph) -> SimpleGraph:
    return SimpleGraph.from_networkx(nx.convert_node_labels_to_integers(graph, first_label=1))


def complete_graph(n: int) -> SimpleGraph:
    return _relabeled(nx.complete_graph(n))


def path_graph(n: int) -> SimpleGraph:
    """Path 1-2-...-n"""
    return _relabeled(nx.path_graph(n))


def cycle_graph(n: int) -> SimpleGraph:
    """Cycle 1-2-...-n-1"""
    if n < 3:
        raise InvalidGraph(f"a cycle needs at least 3 vertices, got {n}")
    return _relabeled(nx.cycle_graph(n))


def star_graph(n: int) -> SimpleGraph:
    """Star on n vertices with center n (K_{1,n-1})"""
    if n < 1:
        raise InvalidGraph("a star needs at least one vertex")
    return SimpleGraph(range(1, n + 1), [(leaf, n) for leaf in range(1, n)])
