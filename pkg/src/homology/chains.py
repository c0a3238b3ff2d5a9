"""Integer boundary matrices of a simplicial complex, augmentation included"""
from dataclasses import dataclass
from typing import Dict, List

from src.complexes.simplicial import SimplicialComplex, face_indices
from src.homology.linalg import SparseVector, to_dense


@dataclass(frozen=True)
class BoundaryMatrix:
    """
    The map C_d -> C_{d-1}, stored column-wise: columns[j] is the boundary of
    the j-th d-face as {row: coefficient}.
    """

    degree: int
    n_rows: int
    columns: List[SparseVector]

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    def to_dense(self) -> List[List[int]]:
        """Row-major dense matrix"""
        transposed = to_dense(self.columns, self.n_rows)
        return [list(row) for row in zip(*transposed)] if transposed else [[] for _ in range(self.n_rows)]


@dataclass(frozen=True)
class ChainComplexMatrices:
    """bases[d] lists the d-faces (d >= -1) in sorted order; boundaries[d] is C_d -> C_{d-1}"""

    bases: Dict[int, List[int]]
    boundaries: Dict[int, BoundaryMatrix]

    @property
    def top_degree(self) -> int:
        return max(self.bases) if self.bases else -2

    def is_chain_complex(self) -> bool:
        """Every composite boundary of boundaries vanishes"""
        for degree, outer in self.boundaries.items():
            inner = self.boundaries.get(degree - 1)
            if inner is None:
                continue
            for column in outer.columns:
                image: Dict[int, int] = {}
                for row, coefficient in column.items():
                    for target, value in inner.columns[row].items():
                        image[target] = image.get(target, 0) + coefficient * value
                if any(image.values()):
                    return False
        return True


def boundary_matrices(complex_: SimplicialComplex) -> ChainComplexMatrices:
    """Signed boundaries with the augmentation C_0 -> C_{-1} = Z (the empty face)"""
    if complex_.is_void:
        return ChainComplexMatrices({}, {})
    top = complex_.dimension
    bases = {d: complex_.faces_of_dimension(d) for d in range(-1, top + 1)}
    boundaries: Dict[int, BoundaryMatrix] = {}
    for d in range(0, top + 1):
        row_of = {face: i for i, face in enumerate(bases[d - 1])}
        columns: List[SparseVector] = []
        for face in bases[d]:
            column: SparseVector = {}
            for position, vertex in enumerate(face_indices(face)):
                column[row_of[face & ~(1 << vertex)]] = -1 if position % 2 else 1
            columns.append(column)
        boundaries[d] = BoundaryMatrix(d, len(bases[d - 1]), columns)
    return ChainComplexMatrices(bases, boundaries)
