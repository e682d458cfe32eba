"""Per-group classification records and the check of the genus-one lists
over the catalog of groups of order at most 16."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .bounds import BoundReport, best_lower_bound, euler_lower_bound, obstruction_lower_bound
from .catalog import catalog_up_to
from .genus import (GenusCertificate, GenusResult, nonorientable_genus, orientable_genus,
                    verify_certificate)
from .graphs import SimpleGraph, build_noncyclic_graph, graph_from_json, is_complete_multipartite
from .groups import Group, cyclicizer, is_cyclic_group

SCHEMA = "noncyclic-classification/1"

PLANAR_SET = frozenset({"Z2^2", "S3", "Q8"})
GENUS_ONE_SET = frozenset({"Z3^2", "Z2^3", "Z2xZ4", "D8", "Z2xZ6"})
NONORIENTABLE_ONE_SET = frozenset({"Z2xZ4", "D8"})


@dataclass
class ClassifyLimits:
    max_edges: int = 30       # exact search only on graphs this small ...
    max_k: int = 1            # ... and only when the lower bound is at most this
    budget: float | None = 60.0
    workers: int = 1
    per_group_budget: dict = field(default_factory=dict)

    def budget_for(self, name: str):
        return self.per_group_budget.get(name, self.budget)


@dataclass
class GenusVerdict:
    orientable: bool
    status: str                 # exact | lower_bound | timeout | not_searched
    lower_bound: int
    value: int | None = None
    provenance: str = ""        # where the lower bound comes from
    certificate: GenusCertificate | None = None
    bounds: list = field(default_factory=list)   # BoundReport
    levels: list = field(default_factory=list)   # [k, outcome]

    def known_value(self):
        return self.value if self.status == "exact" else None

    def verdict(self) -> str:
        if self.status == "exact":
            return f"= {self.value}"
        suffix = " (timeout)" if self.status == "timeout" else ""
        return f">= {self.lower_bound}{suffix}"

    def to_dict(self, graph: SimpleGraph) -> dict:
        return {
            "orientable": self.orientable,
            "status": self.status,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "provenance": self.provenance,
            "certificate": None if self.certificate is None else self.certificate.to_dict(graph),
            "bounds": [b.to_dict() for b in self.bounds],
            "levels": [list(x) for x in self.levels],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GenusVerdict":
        cert = d.get("certificate")
        return cls(
            d["orientable"], d["status"], d["lower_bound"], d.get("value"), d.get("provenance", ""),
            None if cert is None else GenusCertificate.from_dict(cert),
            [BoundReport.from_dict(b) for b in d.get("bounds", [])],
            [tuple(x) for x in d.get("levels", [])],
        )


@dataclass
class ClassificationRecord:
    group_name: str
    group_order: int
    cyc_size: int
    vertex_count: int
    edge_count: int
    planar: bool | None
    orientable_genus: GenusVerdict
    nonorientable_genus: GenusVerdict
    graph: SimpleGraph
    multipartite: list | None = None   # part sizes when the graph is complete multipartite
    timings: dict = field(default_factory=dict)

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "group_name": self.group_name,
            "group_order": self.group_order,
            "cyc_size": self.cyc_size,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "planar": self.planar,
            "multipartite": self.multipartite,
            "orientable_genus": self.orientable_genus.to_dict(self.graph),
            "nonorientable_genus": self.nonorientable_genus.to_dict(self.graph),
            "graph": {"vertices": list(self.graph.labels), "edges": [list(e) for e in self.graph.edges()]},
        }
        if include_timings:
            d["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationRecord":
        return cls(
            d["group_name"], d["group_order"], d["cyc_size"], d["vertex_count"], d["edge_count"],
            d["planar"], GenusVerdict.from_dict(d["orientable_genus"]),
            GenusVerdict.from_dict(d["nonorientable_genus"]), graph_from_json(d["graph"]),
            d.get("multipartite"), d.get("timings", {}),
        )


def _from_result(res: GenusResult, extra_bounds) -> GenusVerdict:
    bounds = [res.bound_report] + [b for b in extra_bounds if b is not res.bound_report]
    if res.bound_provenance == "exhaustive_search":
        searched = BoundReport(res.lower_bound, res.orientable, "exhaustive_search", None,
                               f"no embedding of genus {res.lower_bound - 1}")
        bounds.insert(0, searched)
    return GenusVerdict(res.orientable, res.status, res.lower_bound, res.value,
                        res.bound_provenance, res.certificate, bounds, list(res.levels))


def _bound_only(best: BoundReport, extra, orientable) -> GenusVerdict:
    bounds = [best] + [b for b in extra if b is not best]
    return GenusVerdict(orientable, "lower_bound", best.bound_value, None, best.provenance, None, bounds, [])


def _verdict(graph, orientable, limits, budget, timings):
    t0 = time.perf_counter()
    best = best_lower_bound(graph, orientable)
    obstruction = obstruction_lower_bound(graph, orientable)
    extra = [b for b in (euler_lower_bound(graph, orientable), obstruction) if b.bound_value > 0]
    key = "orientable" if orientable else "nonorientable"
    timings[key + "_bounds"] = time.perf_counter() - t0
    if best.bound_value > limits.max_k or graph.edge_count > limits.max_edges:
        return _bound_only(best, extra, orientable)
    t0 = time.perf_counter()
    search = orientable_genus if orientable else nonorientable_genus
    res = search(graph, max_k=limits.max_k, budget=budget, workers=limits.workers)
    timings[key + "_search"] = time.perf_counter() - t0
    return _from_result(res, extra)


def classify_group(G: Group, limits: ClassifyLimits | None = None) -> ClassificationRecord:
    if is_cyclic_group(G):
        raise ValueError(f"{G.name} is cyclic")
    limits = limits or ClassifyLimits()
    timings: dict = {}
    t0 = time.perf_counter()
    cyc = cyclicizer(G)
    graph = build_noncyclic_graph(G)
    timings["build"] = time.perf_counter() - t0
    budget = limits.budget_for(G.name)
    ori = _verdict(graph, True, limits, budget, timings)
    if ori.status == "exact":
        planar = ori.value == 0
    elif ori.lower_bound >= 1:
        planar = False
    else:
        planar = None
    if planar:
        non = GenusVerdict(False, "exact", 0, 0, ori.provenance, ori.certificate, list(ori.bounds), [(0, "found")])
    else:
        non = _verdict(graph, False, limits, budget, timings)
    parts = is_complete_multipartite(graph)
    return ClassificationRecord(
        G.name, G.order, len(cyc), graph.vertex_count, graph.edge_count, planar, ori, non, graph,
        None if parts is None else [len(p) for p in parts], timings,
    )


def sweep(max_order: int = 16, limits: ClassifyLimits | None = None) -> list[ClassificationRecord]:
    """One record per non-cyclic catalog group of order ``<= max_order``."""
    entries = [e for e in catalog_up_to(max_order) if not e.is_cyclic]
    return [classify_group(e.group, limits) for e in entries]


def records_to_json(records, include_timings: bool = False) -> str:
    doc = {"schema": SCHEMA, "records": [r.to_dict(include_timings) for r in records]}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def records_from_json(document: str) -> list[ClassificationRecord]:
    doc = json.loads(document)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
    return [ClassificationRecord.from_dict(d) for d in doc["records"]]


# ---------------------------------------------------------------- verification

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class Claim:
    key: str
    statement: str
    status: str
    evidence: list = field(default_factory=list)


@dataclass
class PaperReport:
    claims: list

    @property
    def status(self) -> str:
        states = {c.status for c in self.claims}
        if FAIL in states:
            return FAIL
        if INCONCLUSIVE in states:
            return INCONCLUSIVE
        return PASS

    def claim(self, key) -> Claim:
        return next(c for c in self.claims if c.key == key)

    def render(self) -> str:
        lines = []
        for c in self.claims:
            lines.append(f"[{c.status}] ({c.key}) {c.statement}")
            lines.extend(f"    {e}" for e in c.evidence)
        lines.append(f"overall: {self.status}")
        return "\n".join(lines) + "\n"


def _audit_bound(graph, b: BoundReport) -> bool:
    if b.provenance == "obstruction_subgraph":
        return b.witness is not None and b.witness.validate(graph)
    if b.provenance == "euler_formula":
        return euler_lower_bound(graph, b.orientable).bound_value >= b.bound_value
    return True


def _genus_status(rec: ClassificationRecord, verdict: GenusVerdict, target: int):
    """True / False / None for "genus == target", plus an evidence line."""
    g = rec.graph
    if verdict.status == "exact":
        cert = verdict.certificate
        if cert is None:
            return None, f"{rec.group_name}: exact value without certificate"
        ok, msg = verify_certificate(g, cert, explain=True)
        if not ok:
            return None, f"{rec.group_name}: certificate rejected ({msg})"
        lb_ok = verdict.value == 0 or verdict.lower_bound >= verdict.value
        if not lb_ok:
            return None, f"{rec.group_name}: lower side of exact value unproved"
        return verdict.value == target, (f"{rec.group_name}: = {verdict.value} "
                                         f"(certificate, {cert.face_count} faces, verified)")
    proved = [b for b in verdict.bounds if b.bound_value == verdict.lower_bound and _audit_bound(g, b)]
    if verdict.provenance == "exhaustive_search":
        proved.append(None)
    if verdict.lower_bound > target and proved:
        src = verdict.provenance
        w = next((b for b in verdict.bounds if b.witness is not None and b.bound_value > target), None)
        ws = f", witness {w.detail} {w.witness.vertex_parts}" if w is not None else ""
        return False, f"{rec.group_name}: >= {verdict.lower_bound} ({src}{ws})"
    reason = "timeout" if verdict.status == "timeout" else "undecided"
    return None, f"{rec.group_name}: >= {verdict.lower_bound} only ({reason})"


def _set_claim(key, statement, records, universe, expected, decide):
    evidence = []
    missing = sorted(universe - set(records))
    if missing:
        return Claim(key, statement, INCONCLUSIVE, [f"missing records: {', '.join(missing)}"])
    members, unknown = set(), []
    for name in sorted(universe, key=lambda n: (records[n].group_order, n)):
        inside, line = decide(records[name])
        evidence.append(line)
        if inside is None:
            unknown.append(name)
        elif inside:
            members.add(name)
    if unknown:
        return Claim(key, statement, INCONCLUSIVE, evidence)
    if members != expected:
        evidence.append(f"found {sorted(members)}, expected {sorted(expected)}")
        return Claim(key, statement, FAIL, evidence)
    return Claim(key, statement, PASS, [e for e in evidence])


def verify_paper(records) -> PaperReport:
    by_name = {r.group_name: r for r in records}
    universe = {e.canonical_name for e in catalog_up_to(16) if not e.is_cyclic}
    claims = []

    def planar(rec):
        return _genus_status(rec, rec.orientable_genus, 0)

    def genus_one(rec):
        return _genus_status(rec, rec.orientable_genus, 1)

    def nonorientable_one(rec):
        v = rec.nonorientable_genus
        if v.status == "exact" and v.value == 0:
            inside, line = _genus_status(rec, rec.orientable_genus, 0)
            return (None if inside is None else False), line
        return _genus_status(rec, v, 1)

    claims.append(_set_claim("i", "planar exactly for Z2^2, S3, Q8", by_name, universe, PLANAR_SET, planar))
    claims.append(_set_claim("ii", "genus one exactly for Z3^2, Z2^3, Z2xZ4, D8, Z2xZ6",
                             by_name, universe, GENUS_ONE_SET, genus_one))
    claims.append(_set_claim("iii", "nonorientable genus one exactly for Z2xZ4, D8",
                             by_name, universe, NONORIENTABLE_ONE_SET, nonorientable_one))

    def structure(key, statement, name, check):
        rec = by_name.get(name)
        if rec is None:
            return Claim(key, statement, INCONCLUSIVE, [f"missing record {name}"])
        ok, line = check(rec)
        return Claim(key, statement, PASS if ok else FAIL, [line])

    def multipartite_is(sizes):
        def check(rec):
            parts = is_complete_multipartite(rec.graph)
            got = None if parts is None else [len(p) for p in parts]
            return got == sizes, f"{rec.group_name}: complete multipartite parts {got}"
        return check

    claims.append(structure("iv", "graph of Z3^2 is K_{2,2,2,2}", "Z3^2", multipartite_is([2, 2, 2, 2])))
    claims.append(structure("v", "graph of Z2^3 is K7", "Z2^3", multipartite_is([1] * 7)))
    claims.append(structure(
        "vi", "graph of Z2xZ6 has 9 vertices and 27 edges", "Z2xZ6",
        lambda r: (r.graph.vertex_count == 9 and r.graph.edge_count == 27,
                   f"Z2xZ6: V={r.graph.vertex_count} E={r.graph.edge_count}")))

    rec = by_name.get("Z2xZ6")
    statement = "nonorientable genus of Z2xZ6 graph is at least 2"
    if rec is None:
        claims.append(Claim("vii", statement, INCONCLUSIVE, ["missing record Z2xZ6"]))
    else:
        v = rec.nonorientable_genus
        inside, line = _genus_status(rec, v, 1)
        if v.status == "exact":
            status = PASS if inside is not None and v.value >= 2 else (FAIL if inside is not None else INCONCLUSIVE)
        elif inside is False:
            status = PASS
        else:
            status = INCONCLUSIVE
        claims.append(Claim("vii", statement, status, [line]))
    return PaperReport(claims)
