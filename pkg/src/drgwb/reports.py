"""Plain-data reports for every analysis, plus JSON, CSV and text rendering.

Numbers are exact strings ("p/q"); where a reader may want a magnitude, an
``approx`` decimal is attached and labelled as such.  Reports never carry
timestamps, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Context, Decimal
from fractions import Fraction

from . import graphs, params
from .feasibility import FeasibilityReport
from .sweep import SweepResult
from .talg import TerwilligerContext, TModule, local_eigenvalue_counts
from .uniform import UniformVerdict, solution_to_json

SCHEMA = 1
_CTX = Context(prec=12)


def approx(x: Fraction) -> str:
    """Twelve significant digits, computed without floats (no overflow)."""
    x = Fraction(x)
    return format(_CTX.divide(Decimal(x.numerator), Decimal(x.denominator)), "g")


def number(x) -> dict:
    x = Fraction(x)
    out = {"exact": str(x)}
    if x.denominator != 1 or abs(x.numerator) >= 10**12:
        out["approx"] = approx(x)
    return out


def _plain(obj):
    """Make values JSON-safe: Fractions become strings, tuples lists."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in obj]
        return sorted(items, key=str) if isinstance(obj, (set, frozenset)) else items
    return obj


def envelope(kind: str, body: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, **body}


# ---------------------------------------------------------------------------
# builders


def params_report(cp: params.ClassicalParams) -> dict:
    body: dict = {"params": {"D": cp.D, "q": str(cp.q), "alpha": str(cp.alpha), "beta": str(cp.beta)}}
    ia = params.intersection_array(cp)
    body["intersection_array"] = {"b": [str(x) for x in ia.b], "c": [str(x) for x in ia.c],
                                  "text": str(ia)}
    body["a"] = [str(x) for x in ia.a]
    body["valencies"] = [number(k) for k in ia.valencies]
    body["n"] = number(ia.n)
    body["spectrum"] = [
        {"theta": str(e.theta), "rational": e.rational,
         "multiplicity": None if e.multiplicity is None else number(e.multiplicity)}
        for e in params.spectrum(ia)
    ]
    eta = params.local_eig_candidates(cp)
    body["eta"] = {"values": [str(v) for v in eta.values], "eta4_eq_eta2": eta.eta4_eq_eta2,
                   "eta4_eq_eta3": eta.eta4_eq_eta3}
    try:
        srg = params.srg_from_local(cp)
        body["local_srg"] = {"n": str(srg.n), "k": str(srg.k), "lambda": str(srg.lambda_), "mu": str(srg.mu),
                             "r": str(srg.r), "s": str(srg.s), "forced_beta": str(srg.forced_beta),
                             "beta_matches": srg.beta_matches}
    except (params.AlphaZero, params.InvalidParameters) as exc:
        body["local_srg"] = {"unavailable": str(exc)}
    return envelope("params", body)


def feasibility_report(rep: FeasibilityReport) -> dict:
    cp = rep.params
    cert = rep.certificate
    return envelope("feasibility", {
        "label": rep.label,
        "params": None if cp is None else {"D": cp.D, "q": str(cp.q), "alpha": str(cp.alpha),
                                           "beta": str(cp.beta)},
        "verdict": rep.overall,
        "certificate": None if cert is None else {"check": cert.name, "statement": cert.certificate},
        "checks": [{"name": c.name, "verdict": c.verdict, "certificate": c.certificate,
                    "values": _plain(c.values)} for c in rep.checks],
    })


def sweep_report(res: SweepResult) -> dict:
    body = _plain(res.summary())
    body["cells_detail"] = [
        {"q": c.q, "D": c.D, "kD_integral": c.kD_integral, "fD_integral": c.fD_integral} for c in res.cells
    ]
    body["readings"] = {
        "both": "counterexample when k_D and f_D are both integers",
        "either": "counterexample when k_D or f_D is an integer",
    }
    return envelope("sweep", body)


def graph_report(g: graphs.Graph, full: bool = False) -> dict:
    body: dict = {"name": g.name, "n": g.n, "edges": len(g.edges()), "regular": g.is_regular(),
                  "bipartite": g.is_bipartite()}
    res = graphs.is_distance_regular(g, full=full)
    if isinstance(res, graphs.NotDistanceRegular):
        body["distance_regular"] = False
        body["witness"] = {"quantity": res.quantity, "first": list(res.first), "second": list(res.second),
                           "values": list(res.values), "text": str(res)}
        return envelope("graph", body)
    body["distance_regular"] = True
    body["intersection_array"] = {"b": [str(x) for x in res.b], "c": [str(x) for x in res.c],
                                  "text": str(res)}
    body["spectrum"] = [
        {"theta": str(e.theta), "multiplicity": None if e.multiplicity is None else str(e.multiplicity)}
        for e in params.spectrum(res)
    ]
    lg = graphs.local_graph(g, 0)
    body["local_graph_at_0"] = {"n": lg.n, "degrees": sorted({lg.degree(v) for v in range(lg.n)})}
    return envelope("graph", body)


def modules_report(ctx: TerwilligerContext, modules: list[TModule]) -> dict:
    return envelope("modules", {
        "graph": ctx.graph.name,
        "base": ctx.base,
        "mode": ctx.mode,
        "eccentricity": ctx.eccentricity,
        "n": ctx.n,
        "dimension_total": sum(W.dimension for W in modules),
        "all_thin": all(W.thin for W in modules),
        "local_eigenvalue_counts": {str(k): v for k, v in local_eigenvalue_counts(modules).items()},
        "modules": [W.summary() for W in modules],
    })


def uniform_report(g: graphs.Graph, x: int, verdict: UniformVerdict) -> dict:
    body: dict = {"graph": g.name, "base": x, "outcome": verdict.outcome, "reason": verdict.reason,
                  "checks": _plain(verdict.checks)}
    if verdict.solution is not None:
        body["solution"] = solution_to_json(verdict.solution)
    if verdict.infeasible is not None:
        w = verdict.infeasible
        body["witness"] = {"level": w.level, "column_vertex": w.column, "farkas": [str(v) for v in w.farkas]}
    return envelope("uniform", body)


# ---------------------------------------------------------------------------
# rendering


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _rows(report: dict) -> list[dict]:
    kind = report["kind"]
    if kind == "feasibility":
        return [{"check": c["name"], "verdict": c["verdict"], "certificate": c["certificate"]}
                for c in report["checks"]]
    if kind == "sweep":
        return [{"q": c["q"], "D": c["D"], "kD_int": int(c["kD_integral"]), "fD_int": int(c["fD_integral"])}
                for c in report["cells_detail"]]
    if kind == "modules":
        return [{"endpoint": m["endpoint"], "diameter": m["diameter"], "dims": " ".join(map(str, m["dims"])),
                 "thin": m["thin"], "local_eigenvalue": m["local_eigenvalue"],
                 "level_products": " ".join(m["level_products"] or []), "irreducibility": m["irreducibility"]}
                for m in report["modules"]]
    if kind == "params":
        return [{"theta": s["theta"], "multiplicity": (s["multiplicity"] or {}).get("exact")}
                for s in report["spectrum"]]
    if kind == "graph":
        return [{"theta": s["theta"], "multiplicity": s["multiplicity"]} for s in report.get("spectrum", [])]
    if kind == "uniform":
        sol = report.get("solution")
        if not sol:
            return [{"outcome": report["outcome"], "reason": report["reason"]}]
        return [{"level": i + 1, "e_minus": em, "e_plus": ep, "f": f}
                for i, (em, ep, f) in enumerate(zip(sol["e_minus"], sol["e_plus"], sol["f"]))]
    raise ValueError(f"no table layout for {kind!r}")


def to_csv(report: dict) -> str:
    rows = _rows(report)
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def _fmt_list(xs) -> str:
    return "[" + ", ".join(str(x) for x in xs) + "]"


def to_text(report: dict) -> str:
    kind = report["kind"]
    out = []
    if kind == "params":
        p = report["params"]
        out.append(f"classical parameters: D={p['D']} q={p['q']} alpha={p['alpha']} beta={p['beta']}")
        out.append(f"intersection array: {report['intersection_array']['text']}")
        out.append(f"valencies: {_fmt_list(v['exact'] for v in report['valencies'])}")
        out.append(f"n: {report['n']['exact']}")
        for s in report["spectrum"]:
            m = s["multiplicity"]
            out.append(f"  theta {s['theta']}: multiplicity {m['exact'] if m else 'n/a'}")
        out.append(f"eta: {_fmt_list(report['eta']['values'])}")
        srg = report["local_srg"]
        if "unavailable" in srg:
            out.append(f"local srg: unavailable ({srg['unavailable']})")
        else:
            out.append(f"local srg: ({srg['n']}, {srg['k']}, {srg['lambda']}, {srg['mu']}), "
                       f"r={srg['r']} s={srg['s']}, forced beta={srg['forced_beta']}")
    elif kind == "feasibility":
        out.append(f"{report['label']}: {report['verdict']}")
        for c in report["checks"]:
            out.append(f"  [{c['verdict']}] {c['name']}: {c['certificate']}")
    elif kind == "sweep":
        out.append(f"sweep q <= {report['q_max']}, D <= {report['D_max']}: {report['cells']} cells")
        out.append(f"k_D integral in {report['kD_integral']} cells, f_D integral in {report['fD_integral']} cells")
        out.append(f"counterexamples (both integral): {len(report['counterexamples_both'])}")
        out.append(f"counterexamples (either integral): {len(report['counterexamples_either'])}")
    elif kind == "graph":
        out.append(f"{report['name']}: n={report['n']} edges={report['edges']} "
                   f"regular={report['regular']} bipartite={report['bipartite']}")
        if report["distance_regular"]:
            out.append(f"distance-regular: {report['intersection_array']['text']}")
            out.append("spectrum: " + ", ".join(f"{s['theta']}^{s['multiplicity']}" for s in report["spectrum"]))
        else:
            out.append(f"not distance-regular: {report['witness']['text']}")
    elif kind == "modules":
        out.append(f"{report['graph']} at x={report['base']} ({report['mode']}): "
                   f"{len(report['modules'])} modules, dimensions sum to {report['dimension_total']}")
        out.append("  r  d  dims          thin  eta     level products")
        for m in report["modules"]:
            out.append(f"  {m['endpoint']:<2} {m['diameter']:<2} {' '.join(map(str, m['dims'])):<13} "
                       f"{'yes' if m['thin'] else 'no':<5} {m['local_eigenvalue'] or '-':<7} "
                       f"{' '.join(m['level_products'] or []) or '-'}")
    elif kind == "uniform":
        out.append(f"{report['graph']} at x={report['base']}")
        out.append(f"uniform: {'yes' if report['outcome'] == 'uniform' else 'no' if report['outcome'] == 'no_uniform' else 'undetermined'}")
        if report["reason"]:
            out.append(f"reason: {report['reason']}")
        sol = report.get("solution")
        if sol:
            out.append(f"e^-: {_fmt_list(sol['e_minus'])}")
            out.append(f"e^+: {_fmt_list(sol['e_plus'])}")
            out.append(f"f: {_fmt_list(sol['f'])}")
        if "witness" in report:
            w = report["witness"]
            vertex = "no single vertex" if w["column_vertex"] is None else f"vertex {w['column_vertex']}"
            out.append(f"witness: level {w['level']}, {vertex}, farkas {_fmt_list(w['farkas'])}")
    else:
        raise ValueError(f"no text layout for {kind!r}")
    return "\n".join(out) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")
