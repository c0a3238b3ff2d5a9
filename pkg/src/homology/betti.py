"""Reduced rational Betti numbers and Euler characteristics"""
import random
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.complexes.simplicial import SimplicialComplex
from src.config.logging import get_logger
from src.config.settings import DENSE_RANK_LIMIT, HOMOLOGY_FAST_PATH
from src.errors import VerificationFailure
from src.homology.chains import BoundaryMatrix, boundary_matrices
from src.homology.linalg import bareiss_rank, modular_rank, random_prime, sparse_integer_rank

logger = get_logger(__name__)


def _sign(degree: int) -> int:
    return -1 if degree % 2 else 1


@dataclass(frozen=True)
class BettiVector:
    """
    values[i] is the reduced Betti number in degree i - 1, trailing zeros
    trimmed. The void complex is all zeros with `void` set.
    """

    values: Tuple[int, ...] = ()
    void: bool = False

    @classmethod
    def from_degrees(cls, by_degree: Dict[int, int], void: bool = False) -> "BettiVector":
        if not by_degree:
            return cls((), void)
        top = max(by_degree)
        values = [by_degree.get(d, 0) for d in range(-1, top + 1)]
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values), void)

    def __getitem__(self, degree: int) -> int:
        index = degree + 1
        return self.values[index] if 0 <= index < len(self.values) else 0

    def nonzero_degrees(self) -> Tuple[int, ...]:
        return tuple(i - 1 for i, v in enumerate(self.values) if v)

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_concentrated_in(self, degree: int) -> bool:
        return all(d == degree for d in self.nonzero_degrees())

    def euler_characteristic(self) -> int:
        """Alternating sum; equals the reduced Euler characteristic"""
        return sum(_sign(i - 1) * v for i, v in enumerate(self.values))

    def as_dict(self) -> Dict[int, int]:
        return {d: self[d] for d in self.nonzero_degrees()}


def _exact_rank(matrix: BoundaryMatrix, dense_limit: int) -> int:
    if matrix.n_rows * matrix.n_cols <= dense_limit:
        return bareiss_rank(matrix.to_dense())
    return sparse_integer_rank(matrix.columns)


def _fast_rank(matrix: BoundaryMatrix, dense_limit: int, rng: Optional[random.Random]) -> int:
    first = modular_rank(matrix.columns, random_prime(rng))
    second = modular_rank(matrix.columns, random_prime(rng))
    if first == second:
        return first
    logger.info("Modular ranks disagree (%d vs %d); recomputing exactly", first, second)
    return _exact_rank(matrix, dense_limit)


def boundary_ranks(complex_: SimplicialComplex, fast: bool = HOMOLOGY_FAST_PATH,
                   dense_limit: int = DENSE_RANK_LIMIT, cross_check: bool = False,
                   rng: Optional[random.Random] = None) -> Dict[int, int]:
    """Rank of each boundary map, keyed by source degree"""
    chains = boundary_matrices(complex_)
    ranks = {}
    for degree, matrix in chains.boundaries.items():
        if fast:
            rank = _fast_rank(matrix, dense_limit, rng)
        else:
            rank = _exact_rank(matrix, dense_limit)
        if cross_check:
            other = modular_rank(matrix.columns, random_prime(rng)) if not fast else _exact_rank(matrix, dense_limit)
            if other != rank:
                raise VerificationFailure(f"rank paths disagree in degree {degree}: {rank} vs {other}")
        ranks[degree] = rank
    return ranks


def reduced_betti(complex_: SimplicialComplex, fast: bool = HOMOLOGY_FAST_PATH,
                  dense_limit: int = DENSE_RANK_LIMIT, cross_check: bool = False,
                  rng: Optional[random.Random] = None) -> BettiVector:
    """
    Reduced Betti numbers over Q: dim ker d_i - rank d_{i+1}, with the
    augmentation as d_0.

    Args:
        complex_: The complex; the void complex gives the zero vector flagged void.
        fast: Use two random 62-bit primes, falling back to exact rank when they differ.
        dense_limit: Largest rows*cols handled by dense Bareiss elimination.
        cross_check: Recompute every rank by the other path and fail on mismatch.
        rng: Source of randomness for prime selection.
    """
    if complex_.is_void:
        return BettiVector((), void=True)
    f_vector = complex_.f_vector()
    ranks = boundary_ranks(complex_, fast=fast, dense_limit=dense_limit, cross_check=cross_check, rng=rng)
    by_degree = {}
    for degree in range(-1, complex_.dimension + 1):
        faces = f_vector[degree + 1]
        kernel = faces - ranks.get(degree, 0)
        by_degree[degree] = kernel - ranks.get(degree + 1, 0)
    betti = BettiVector.from_degrees(by_degree)
    if betti.euler_characteristic() != euler_characteristic(complex_, reduced=True):
        raise VerificationFailure("Betti numbers disagree with the face-count Euler characteristic")
    return betti


def euler_characteristic(complex_: SimplicialComplex, reduced: bool = False) -> int:
    """Alternating face count; the reduced variant includes the empty face"""
    total = 0
    for size, count in enumerate(complex_.f_vector()):
        dimension = size - 1
        if dimension < 0 and not reduced:
            continue
        total += _sign(dimension) * count
    return total
