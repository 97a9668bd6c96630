"""JSON wire format for solve reports and single-subgraph results.

Every rational travels as ``{"exact": "p/q", "decimal": "..."}`` so exact
values survive the round trip; vertex sets travel as external labels.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .densest import DensestResult
from .errors import ParseError
from .graph import Graph, vertex_set
from .solvers import PhaseTiming, SolveReport, decimal_string

SCHEMA_VERSION = 1


def rational_to_json(x: Fraction) -> dict[str, str]:
    return {"exact": f"{x.numerator}/{x.denominator}", "decimal": decimal_string(x)}


def rational_from_json(obj: Any) -> Fraction:
    try:
        return Fraction(obj["exact"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed rational {obj!r}") from exc


def _opt(x: Fraction | None):
    return None if x is None else rational_to_json(x)


def report_to_dict(report: SolveReport, g: Graph) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "algorithm": report.algorithm_id,
        "dispatched": report.dispatched,
        "k": report.k,
        "lambda": rational_to_json(report.lam),
        "collection": [g.label_set(s) for s in report.collection],
        "densities": [rational_to_json(d) for d in report.densities],
        "pair_distances": [
            {"i": i, "j": j, "distance": rational_to_json(d)} for i, j, d in report.pair_distances
        ],
        "r_value": rational_to_json(report.r_value),
        "competing_r": _opt(report.competing_r),
        "phase_boundary": report.phase_boundary,
        "wall_time_s": report.wall_time,
        "trace": [
            {"phase": t.phase, "seconds": t.seconds, "flow_calls": t.flow_calls} for t in report.trace
        ],
    }


def report_to_json(report: SolveReport, g: Graph) -> str:
    return json.dumps(report_to_dict(report, g), indent=2) + "\n"


def report_from_json(text: str, g: Graph) -> SolveReport:
    try:
        obj = json.loads(text)
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema version {obj.get('schema_version')!r}")
        collection = tuple(vertex_set((g.vertex_id(x) for x in s), g) for s in obj["collection"])
        competing = obj["competing_r"]
        return SolveReport(
            algorithm_id=obj["algorithm"],
            collection=collection,
            densities=tuple(rational_from_json(d) for d in obj["densities"]),
            pair_distances=tuple(
                (p["i"], p["j"], rational_from_json(p["distance"])) for p in obj["pair_distances"]
            ),
            r_value=rational_from_json(obj["r_value"]),
            lam=rational_from_json(obj["lambda"]),
            phase_boundary=obj["phase_boundary"],
            wall_time=obj["wall_time_s"],
            dispatched=obj["dispatched"],
            competing_r=None if competing is None else rational_from_json(competing),
            trace=tuple(PhaseTiming(t["phase"], t["seconds"], t["flow_calls"]) for t in obj["trace"]),
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed report: {exc}") from exc


def report_to_text(report: SolveReport, g: Graph) -> str:
    lines = [
        f"algorithm: {report.algorithm_id} (dispatched: {report.dispatched})",
        f"k = {report.k}, lambda = {report.lam}",
    ]
    for i, (s, d) in enumerate(zip(report.collection, report.densities)):
        lines.append(f"W{i + 1}: density {d} ({decimal_string(d)}) {{{', '.join(g.label_set(s))}}}")
    if report.phase_boundary is not None:
        lines.append(f"phase 2 starts at subgraph {report.phase_boundary + 1}")
    if report.competing_r is not None:
        lines.append(f"competing candidate r = {report.competing_r}")
    lines.append(f"r = {report.r_value} ({report.r_value_float})")
    lines.append(f"wall time {report.wall_time:.3f}s")
    return "\n".join(lines) + "\n"


def densest_to_dict(result: DensestResult, g: Graph) -> dict[str, Any]:
    cert = result.cut_certificate
    return {
        "schema_version": SCHEMA_VERSION,
        "set": g.label_set(result.set),
        "density": rational_to_json(result.dens),
        "cut_certificate": None if cert is None else [rational_to_json(x) for x in cert],
    }


def densest_to_text(result: DensestResult, g: Graph) -> str:
    return f"density {result.dens} ({decimal_string(result.dens)}): {' '.join(g.label_set(result.set))}\n"
