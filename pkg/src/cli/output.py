"""TSV and JSON emitters for reports"""
from typing import Any, Dict, Iterable, List, Sequence

import orjson
from pydantic import BaseModel

from src.pipeline.reports import (
    BettiReport,
    BothMethodsReport,
    ComplexBettiReport,
    HochschildTableRow,
    MethodComparison,
)
from src.poset.shelling import ELCertificate

FORMATS = ("tsv", "json")


def _tsv(rows: Iterable[Sequence[Any]]) -> str:
    return "".join("\t".join(str(cell) for cell in row) + "\n" for row in rows)


def to_json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json", exclude_none=True)
    return orjson.dumps(payload, option=orjson.OPT_NON_STR_KEYS).decode("utf-8") + "\n"


def _without_breakdown(report: BettiReport) -> Dict[str, Any]:
    return report.model_dump(mode="json", exclude_none=True, exclude={"breakdown"})


def _shape_rows(report: BettiReport) -> List[List[Any]]:
    if report.shape is None:
        return []
    return [["unimodal", str(report.shape.unimodal).lower()],
            ["log_concave", str(report.shape.log_concave).lower()]]


def _breakdown_rows(report: BettiReport) -> List[List[Any]]:
    rows: List[List[Any]] = [["subset", "k", "count"]]
    rows.extend([",".join(map(str, c.subset)) or "-", c.k, c.count] for c in report.breakdown or ())
    return rows


def render_betti(report: BettiReport, fmt: str = "tsv", breakdown: bool = False) -> str:
    """`k<TAB>beta` rows; the breakdown and shape notes follow after a blank line"""
    if fmt == "json":
        return to_json(report.model_dump(mode="json", exclude_none=True) if breakdown else _without_breakdown(report))
    text = _tsv([["k", "beta"], *([k, b] for k, b in enumerate(report.betti))])
    if breakdown:
        text += "\n" + _tsv(_breakdown_rows(report))
    if report.shape is not None:
        text += "\n" + _tsv(_shape_rows(report))
    return text


def render_both(report: BothMethodsReport, fmt: str = "tsv", breakdown: bool = False) -> str:
    if fmt == "json":
        payload = {
            "source": report.source,
            "method": report.method,
            "agree": report.agree,
            "alternating": report.alternating.model_dump(mode="json", exclude_none=True)
            if breakdown else _without_breakdown(report.alternating),
            "homology": report.homology.model_dump(mode="json", exclude_none=True)
            if breakdown else _without_breakdown(report.homology),
        }
        return to_json(payload)
    width = max(len(report.alternating.betti), len(report.homology.betti))
    rows = [["k", "alternating", "homology"]]
    rows.extend([k, report.alternating.beta(k), report.homology.beta(k)] for k in range(width))
    text = _tsv(rows)
    if breakdown:
        for part in (report.alternating, report.homology):
            text += f"\n# {part.method}\n" + _tsv(_breakdown_rows(part))
    if report.alternating.shape is not None:
        text += "\n" + _tsv(_shape_rows(report.alternating))
    return text


def render_complex(report: ComplexBettiReport, fmt: str = "tsv") -> str:
    if fmt == "json":
        return to_json(report)
    return _tsv([["degree", "beta"], *([d, b] for d, b in enumerate(report.betti))])


def render_hochschild_table(rows: List[HochschildTableRow], fmt: str = "tsv") -> str:
    """One line per (m, n); stable rows are labelled `>=n`"""
    if fmt == "json":
        return to_json([row.model_dump(mode="json") for row in rows])
    return _tsv([["m", "n", "betti"], *([row.m, row.n_label, *row.betti] for row in rows)])


def render_comparison(report: MethodComparison, fmt: str = "tsv") -> str:
    if fmt == "json":
        payload = report.model_dump(mode="json")
        payload["agree"] = report.agree
        return to_json(payload)
    width = max(len(report.alternating), len(report.homology))

    def at(values: List[int], k: int) -> int:
        return values[k] if k < len(values) else 0

    text = _tsv([["k", "alternating", "homology"],
                 *([k, at(report.alternating, k), at(report.homology, k)] for k in range(width))])
    text += "\n" + _tsv([["subset", "alternating", "homology"],
                         *([",".join(map(str, row.subset)), row.alternating,
                            ",".join(f"{k}:{v}" for k, v in sorted(row.homology.items())) or "-"]
                           for row in report.mismatches)])
    return text


def render_certificate(certificate: ELCertificate, top_chain: Sequence[Any], fmt: str = "tsv") -> str:
    """The decreasing chain of the full interval, elements separated by spaces"""
    chain = " ".join(repr(element) for element in top_chain)
    if fmt == "json":
        return to_json({"ok": certificate.ok, "intervals": certificate.intervals_checked,
                        "top_chain": [list(element.labels) for element in top_chain]})
    return chain + "\n"


def render_a_numbers(values: Dict[str, Any], fmt: str = "tsv") -> str:
    if fmt == "json":
        return to_json(values)
    return _tsv([["a", values["a"]], ["sa", values["sa"]]])
