"""Edge labels in Z x Omega and their partial orders"""
from enum import Enum
from typing import NamedTuple


class Comparison(Enum):
    """Outcome of comparing a to b"""
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class OmegaLabel(NamedTuple):
    """(max, min) of the pair added along a cover edge"""
    a: int
    b: int


class EdgeLabel(NamedTuple):
    component_max: int
    omega: OmegaLabel

    def __str__(self) -> str:
        return f"({self.component_max},({self.omega.a},{self.omega.b}))"


def omega_geq(alpha: OmegaLabel, beta: OmegaLabel) -> bool:
    """alpha >= beta iff x1 >= x2 >= y1 >= y2, or x1 = y1 >= x2 >= y2"""
    x1, x2 = alpha
    y1, y2 = beta
    return (x1 >= x2 >= y1 >= y2) or (x1 == y1 and y1 >= x2 >= y2)


def compare_omega(alpha: OmegaLabel, beta: OmegaLabel) -> Comparison:
    if tuple(alpha) == tuple(beta):
        return Comparison.EQUAL
    if omega_geq(alpha, beta):
        return Comparison.GREATER
    if omega_geq(beta, alpha):
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def compare_labels(first: EdgeLabel, second: EdgeLabel) -> Comparison:
    """Lexicographic: component maximum first, then the Omega order"""
    if first.component_max > second.component_max:
        return Comparison.GREATER
    if first.component_max < second.component_max:
        return Comparison.LESS
    return compare_omega(first.omega, second.omega)
