"""JSON model of results (schema ``specgraph/1``) and the text view derived from it.

Dictionaries are built in a fixed key order and every list is already sorted,
so identical inputs serialize to identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .document import InputDocument
from .graphs import ConnectivityCertificate, PrimeGraph
from .ideal import MonomialPrime, SquarefreeIdeal
from .verdicts import CITATIONS, AnalysisReport, Verdict

SCHEMA = "specgraph/1"


def jsonable(value: Any) -> Any:
    if isinstance(value, (SquarefreeIdeal, MonomialPrime)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def graph_json(g: PrimeGraph) -> dict:
    return {
        "kind": g.kind.value,
        "vertices": [str(v) for v in g.vertices],
        "edges": [list(e) for e in g.edges],
    }


def certificate_json(cert: ConnectivityCertificate) -> dict:
    return {
        "status": cert.status.value,
        "components": [list(c) for c in cert.components],
        "spanning_tree": None if cert.spanning_tree is None else [list(e) for e in cert.spanning_tree],
        "bipartition": None if cert.bipartition is None else [list(s) for s in cert.bipartition],
    }


def verdict_json(v: Verdict) -> dict:
    basis = None
    if v.basis:
        label, statement = CITATIONS[v.basis]
        basis = {"id": v.basis, "label": label, "statement": statement}
    return {
        "claim": v.claim,
        "result": v.result,
        "statement": v.statement,
        "basis": basis,
        "graph": None if v.graph is None else graph_json(v.graph),
        "certificate": None if v.certificate is None else certificate_json(v.certificate),
        "side_data": jsonable(v.side_data),
        "consequences": [verdict_json(c) for c in v.consequences],
    }


def envelope(command: str, doc: InputDocument, body: dict) -> dict:
    return {"schema": SCHEMA, "command": command, "input": doc.to_json(), **body}


def report_json(report: AnalysisReport) -> dict:
    body = {
        "decomposition": {
            "c": report.c,
            "d": report.d,
            "minimal_primes": [str(p) for p in report.min_primes],
            "heights": [p.height for p in report.min_primes],
            "I": str(report.I),
            "I_d": str(report.I_d),
            "unmixed": all(p.height == report.c for p in report.min_primes),
        },
        "verdicts": [verdict_json(v) for v in report.verdicts],
    }
    if report.facet_check is not None:
        body["facet_check"] = report.facet_check
    return body


def dumps(model: dict) -> str:
    return json.dumps(model, indent=2, ensure_ascii=False) + "\n"


def _fmt_result(result: Any) -> str:
    if result is True:
        return "yes"
    if result is False:
        return "no"
    return str(result)


def _fmt_value(value: Any) -> str:
    if isinstance(value, list):
        return ", ".join(_fmt_value(v) for v in value) or "-"
    if isinstance(value, dict):
        return "; ".join(f"{k} = {_fmt_value(v)}" for k, v in value.items())
    return _fmt_result(value) if isinstance(value, bool) else str(value)


def _text_graph(g: dict, cert: dict | None, indent: str) -> list[str]:
    lines = [f"{indent}graph {g['kind']}: {len(g['vertices'])} vertices, {len(g['edges'])} edges"]
    adj: dict[int, list[int]] = {i: [] for i in range(len(g["vertices"]))}
    for a, b in g["edges"]:
        adj[a].append(b)
        adj[b].append(a)
    for i, v in enumerate(g["vertices"]):
        nbrs = ", ".join(str(j) for j in sorted(adj[i])) or "-"
        lines.append(f"{indent}  [{i}] {v}  -> {nbrs}")
    if cert is not None:
        lines.append(f"{indent}  status: {cert['status']}; components: {cert['components']}")
        if cert["spanning_tree"] is not None:
            lines.append(f"{indent}  spanning tree: {cert['spanning_tree']}")
        if cert["bipartition"] is not None:
            lines.append(f"{indent}  bipartition: {cert['bipartition'][0]} | {cert['bipartition'][1]}")
    return lines


def _text_verdict(v: dict, indent: str = "") -> list[str]:
    lines = [f"{indent}* {v['claim']}: {_fmt_result(v['result'])}", f"{indent}  {v['statement']}"]
    if v["basis"]:
        lines.append(f"{indent}  basis: {v['basis']['label']}: {v['basis']['statement']}")
    else:
        lines.append(f"{indent}  basis: none (no theorem applies)")
    if v["graph"] is not None:
        lines += _text_graph(v["graph"], v["certificate"], indent + "  ")
    for key, value in v["side_data"].items():
        lines.append(f"{indent}  {key}: {_fmt_value(value)}")
    for c in v["consequences"]:
        lines += _text_verdict(c, indent + "  ")
    return lines


def render_text(model: dict) -> str:
    """Human-readable view of any JSON model produced by this module."""
    inp = model["input"]
    lines = [f"specgraph {model['command']}", f"variables: {', '.join(inp['variables'])}"]
    if "facets" in inp:
        lines.append("facets: " + ", ".join("{" + ",".join(f) + "}" for f in inp["facets"]))
    else:
        lines.append(f"J: {inp['J'] if inp['J'] is not None else '(0)'}")
        lines.append(f"I: {inp['I']}")
    if "decomposition" in model:
        dec = model["decomposition"]
        lines += [
            "",
            "decomposition",
            f"  I = {dec['I']}",
            f"  height c = {dec['c']}, dim R/I d = {dec['d']}, unmixed: {_fmt_result(dec['unmixed'])}",
            f"  I_d = {dec['I_d']}",
            "  minimal primes:",
        ]
        lines += [
            f"    {p}  height {h}" for p, h in zip(dec["minimal_primes"], dec["heights"])
        ]
    if "minimal_primes" in model:
        lines += ["", f"height c = {model['c']}, dim d = {model['d']}", "minimal primes:"]
        lines += [f"  {p}" for p in model["minimal_primes"]]
    if "graph" in model:
        lines.append("")
        lines += _text_graph(model["graph"], model.get("certificate"), "")
    if "components" in model:
        lines += ["", "summands I_i:"] + [f"  {c}" for c in model["components"]]
    if "verdicts" in model:
        lines += ["", "verdicts"]
        for v in model["verdicts"]:
            lines += _text_verdict(v, "  ")
    if "facet_check" in model:
        fc = model["facet_check"]
        lines += ["", f"facet-ridge cross-check: {fc}"]
    if "checks" in model:
        lines += ["", "oracle cross-checks"]
        for c in model["checks"]:
            mark = "ok  " if c["ok"] else "FAIL"
            lines.append(f"  {mark} {c['name']}" + (f"  {c['detail']}" if c["detail"] else ""))
    return "\n".join(lines) + "\n"
