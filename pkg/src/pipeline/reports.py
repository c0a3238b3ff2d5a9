"""Report models shared by the pipeline, the CLI and the HTTP surface"""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

Method = Literal["alternating", "homology", "graph", "hochschild", "both"]


class Contribution(BaseModel):
    """Count contributed by one subset I to beta_k"""

    model_config = ConfigDict(frozen=True)

    subset: List[int]
    k: int = Field(ge=0)
    count: int


class SequenceShape(BaseModel):
    unimodal: bool
    log_concave: bool


class HochschildTerm(BaseModel):
    """C(m, s) * |Alt_Hoch(s, r)| with s + r = 2k"""

    s: int = Field(ge=0)
    r: int = Field(ge=0)
    multiplicity: int
    alt: int

    @property
    def k(self) -> int:
        return (self.s + self.r) // 2

    @property
    def value(self) -> int:
        return self.multiplicity * self.alt


class BettiReport(BaseModel):
    source: str = ""
    method: Method
    betti: List[int]
    breakdown: Optional[List[Contribution]] = None
    terms: Optional[List[HochschildTerm]] = None
    shape: Optional[SequenceShape] = None
    elapsed_seconds: float = 0.0

    @model_validator(mode="after")
    def _breakdown_sums_to_totals(self) -> "BettiReport":
        if self.breakdown is not None:
            totals = _sum_by_k((c.k, c.count) for c in self.breakdown)
            if _trimmed(totals) != self.betti:
                raise ValueError(f"breakdown sums to {_trimmed(totals)}, not {self.betti}")
        if self.terms is not None:
            totals = _sum_by_k((t.k, t.value) for t in self.terms)
            if _trimmed(totals) != self.betti:
                raise ValueError(f"Hochschild terms sum to {_trimmed(totals)}, not {self.betti}")
        return self

    def beta(self, k: int) -> int:
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def contribution_of(self, subset: List[int]) -> Dict[int, int]:
        """k -> count for one subset (empty when it contributes nothing)"""
        wanted = sorted(subset)
        return {c.k: c.count for c in self.breakdown or () if c.subset == wanted}


class ComplexBettiReport(BaseModel):
    """Betti numbers of the complex toric manifold, indexed by degree 0 .. 2n"""

    source: str = ""
    betti: List[int]

    @property
    def even(self) -> List[int]:
        return self.betti[::2]

    def is_palindromic(self) -> bool:
        return self.betti == self.betti[::-1]


class SubsetComparison(BaseModel):
    subset: List[int]
    alternating: int
    homology: Dict[int, int]

    @property
    def agrees(self) -> bool:
        k = len(self.subset) // 2
        expected = {k: self.alternating} if self.alternating else {}
        return self.homology == expected


class MethodComparison(BaseModel):
    source: str = ""
    chordal: bool
    alternating: List[int]
    homology: List[int]
    mismatches: List[SubsetComparison] = Field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.alternating == self.homology and not self.mismatches


class BothMethodsReport(BaseModel):
    source: str = ""
    method: Literal["both"] = "both"
    alternating: BettiReport
    homology: BettiReport

    @property
    def agree(self) -> bool:
        return self.alternating.betti == self.homology.betti


class HochschildTableRow(BaseModel):
    """One row of the Hochschild table; stable rows stand for every n >= m + 2"""

    m: int = Field(ge=0)
    n: int = Field(ge=0)
    stable: bool = False
    betti: List[int]

    @property
    def n_label(self) -> str:
        return f">={self.n}" if self.stable else str(self.n)


def _sum_by_k(pairs) -> List[int]:
    totals: List[int] = []
    for k, value in pairs:
        if k >= len(totals):
            totals.extend([0] * (k + 1 - len(totals)))
        totals[k] += value
    return totals


def _trimmed(values: List[int]) -> List[int]:
    values = list(values)
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return values


def trim_betti(values: List[int]) -> List[int]:
    """Drop trailing zeros, keeping beta_0"""
    return _trimmed(values) if values else [0]
