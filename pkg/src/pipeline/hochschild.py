"""Real Betti numbers of Hochschild toric manifolds by the closed form"""
import time
from math import comb
from typing import List, Optional

from src.config.logging import get_logger
from src.errors import VerificationFailure
from src.perms.hochschild import count_alt_hoch
from src.pipeline.reports import BettiReport, HochschildTableRow, HochschildTerm, trim_betti

logger = get_logger(__name__)


def hochschild_terms(m: int, n: int) -> List[HochschildTerm]:
    """Every (s, r) with s <= m, r <= n and s + r even, by k then s"""
    terms = []
    for total in range(0, m + n + 1, 2):
        for s in range(max(0, total - n), min(m, total) + 1):
            r = total - s
            terms.append(HochschildTerm(s=s, r=r, multiplicity=comb(m, s), alt=count_alt_hoch(s, r)))
    return terms


def hochschild_betti(m: int, n: int, source: Optional[str] = None) -> BettiReport:
    """
    beta_k = sum over s + r = 2k of C(m, s) |Alt_Hoch(s, r)|.

    Args:
        m: Number of lights (m >= 0).
        n: Number of shades (n >= 0, m + n >= 1).
        source: Report label; defaults to "hochschild(m,n)".
    """
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"hochschild_betti needs m, n >= 0 and m + n >= 1, got ({m}, {n})")
    start = time.perf_counter()
    terms = hochschild_terms(m, n)
    totals = [0] * ((m + n) // 2 + 1)
    for term in terms:
        totals[term.k] += term.value
    elapsed = time.perf_counter() - start
    logger.debug("Hochschild closed form for (%d, %d) in %.3fs", m, n, elapsed)
    return BettiReport(source=source or f"hochschild({m},{n})", method="hochschild",
                       betti=trim_betti(totals), terms=terms, elapsed_seconds=elapsed)


def hochschild_stability_check(m: int, k_max: Optional[int] = None) -> bool:
    """beta_k(m, n) agrees for n = m+2, m+3, m+4 on every k (up to k_max when given)"""
    rows = [hochschild_betti(m, n).betti for n in range(m + 2, m + 5)]
    if k_max is not None:
        rows = [row[:k_max + 1] for row in rows]
    return all(row == rows[0] for row in rows)


def hochschild_table(max_m: int) -> List[HochschildTableRow]:
    """
    Rows (m, n) for n = 2 .. m+1 followed by one stable row standing for all
    n >= m+2; m = 0 has only the stable row. Stability is verified first.
    """
    if max_m < 0:
        raise ValueError(f"max_m must be non-negative, got {max_m}")
    rows = []
    for m in range(max_m + 1):
        for n in range(2, m + 2):
            rows.append(HochschildTableRow(m=m, n=n, betti=hochschild_betti(m, n).betti))
        if not hochschild_stability_check(m):
            raise VerificationFailure(f"Hochschild Betti numbers are not stable from n = {m + 2} at m = {m}")
        rows.append(HochschildTableRow(m=m, n=m + 2, stable=True, betti=hochschild_betti(m, m + 2).betti))
        logger.info("✅ Hochschild row m=%d", m)
    return rows
