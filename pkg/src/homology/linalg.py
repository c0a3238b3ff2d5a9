"""Exact and modular rank of integer matrices"""
import random
from math import gcd
from typing import Dict, List, Optional, Sequence

from sympy import nextprime, randprime

SparseVector = Dict[int, int]

PRIME_LOW = 2 ** 61
PRIME_HIGH = 2 ** 62


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination on a dense integer matrix"""
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col]
            row = rows[r]
            top = rows[rank]
            for c in range(col, n_cols):
                # exact by Sylvester's identity
                row[c] = (pivot * row[c] - factor * top[c]) // previous
        previous = pivot
        rank += 1
    return rank


def _primitive(vector: SparseVector) -> SparseVector:
    content = 0
    for value in vector.values():
        content = gcd(content, value)
        if content == 1:
            return vector
    if content > 1:
        return {c: v // content for c, v in vector.items()}
    return vector


def sparse_integer_rank(vectors: Sequence[SparseVector]) -> int:
    """
    Rank over Q of sparse integer vectors.

    Each vector is reduced against stored pivot rows by leading coordinate with
    gcd-scaled integer row operations, then divided by its content.
    """
    pivots: Dict[int, SparseVector] = {}
    for vector in vectors:
        row = {c: v for c, v in vector.items() if v}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = _primitive(row)
                break
            a, p = row[lead], pivot[lead]
            g = gcd(a, p)
            scale_row, scale_pivot = p // g, a // g
            new = {c: v * scale_row for c, v in row.items()}
            for c, v in pivot.items():
                value = new.get(c, 0) - scale_pivot * v
                if value:
                    new[c] = value
                else:
                    new.pop(c, None)
            row = _primitive(new)
    return len(pivots)


def modular_rank(vectors: Sequence[SparseVector], prime: int) -> int:
    """Rank over GF(prime); never larger than the rank over Q"""
    pivots: Dict[int, SparseVector] = {}
    for vector in vectors:
        row = {c: v % prime for c, v in vector.items() if v % prime}
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inverse = pow(row[lead], -1, prime)
                pivots[lead] = {c: v * inverse % prime for c, v in row.items()}
                break
            factor = row[lead]
            for c, v in pivot.items():
                value = (row.get(c, 0) - factor * v) % prime
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
    return len(pivots)


def random_prime(rng: Optional[random.Random] = None) -> int:
    """A random 62-bit prime"""
    if rng is None:
        return randprime(PRIME_LOW, PRIME_HIGH)
    return nextprime(rng.randrange(PRIME_LOW, PRIME_HIGH))


def to_dense(vectors: Sequence[SparseVector], length: int) -> List[List[int]]:
    """Sparse vectors as the rows of a dense matrix"""
    return [[vector.get(c, 0) for c in range(length)] for vector in vectors]
