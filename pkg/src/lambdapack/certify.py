"""Inference rules over no-factor facts, and certificates that replay them.

A *fact* asserts one of five things about a concrete graph: it has no
factor, no factor containing a given edge, no factor avoiding a given edge,
no factor after deleting a given vertex, or no factor after deleting a
vertex that also avoids a given edge.  Facts are keyed by a canonical hash
of the concrete graph (vertex count plus sorted edge list), not by
isomorphism class.

Facts arise two ways:

* BASE -- an exhaustive solver run returned UNSAT (the step records the
  search statistics);
* R1..R6 -- a composition rule transported facts about the operands to a
  fact about the composite.  Each rule checks residue side conditions
  (vertex counts mod 6), cubicity, and anchor bookkeeping:

  ====  =========  ==========================  =============================
  rule  operator   side conditions              premises -> conclusion
  ====  =========  ==========================  =============================
  R1    ebridge    v(A)=v(B)=2 mod 6            -> no factor of G contains
                                                   the middle edge
  R2    ymerge     v(A)=0 mod 6                 no factor of A contains
                                                (a,a1) -> G has no factor
  R3    vsub       v(A)=v(B)=0 mod 6            no factor of A contains
                                                (a,a1) -> G - b2 has no
                                                factor avoiding (a3,b3)
  R4    esub       v(A)=0, v(B)=4 mod 6,        A-fact: contains a;
                   x not incident to b          B-fact: G-x avoiding b
                                                -> G - x has no factor
  R5    esub       v(A)=2, v(B)=4 mod 6         B - b1 has no factor
                                                -> no factor of G avoids
                                                   (a2,b2)
  R6    esub       v(A)=v(B)=0 mod 6            A-fact: contains a;
                                                B-fact: avoids b
                                                -> G has no factor
  ====  =========  ==========================  =============================

``replay_pipeline`` evaluates a construction script, derives one fact per
bound stage whose operator and residues match a rule, cross-checks every
fact whose residual search is small enough by a direct BASE run, and packs
everything into a :class:`Certificate`.  ``check_certificate`` re-validates
a certificate offline: hashes, premise linkage, side conditions, and the
construction bookkeeping are all recomputed (rule steps are re-derived by
rebuilding the composite from the stored operand graphs); BASE evidence is
accepted as recorded unless ``strict=True`` re-runs the searches.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import constructions as cons
from .dsl import BuildRecord, run_script
from .graph import Edge, Graph, GraphError, is_cubic, norm_edge
from .packing import Budget, Mode, PackingProblem, PackingResult, Seam, solve
from .pipeline import DEFAULT_SCRIPT, find_seams

KIND_NO_FACTOR = "no_factor"
KIND_CONTAINING = "no_factor_containing"
KIND_AVOIDING = "no_factor_avoiding"
KIND_MINUS_VERTEX = "no_factor_minus_vertex"
KIND_MINUS_VERTEX_AVOIDING = "no_factor_minus_vertex_avoiding"

FACT_KINDS = (
    KIND_NO_FACTOR,
    KIND_CONTAINING,
    KIND_AVOIDING,
    KIND_MINUS_VERTEX,
    KIND_MINUS_VERTEX_AVOIDING,
)

#: corrected readings applied by the rule engine, recorded in certificates
NOTES = (
    "R2 reads its hypothesis as: the operand graph (not the removed vertex) "
    "has no factor containing the edge from the removed vertex to its first "
    "port.",
    "R2 accepts an edge-specified merge anchor as the vertex form with the "
    "other endpoint placed first in the port order.",
    "The middle-edge argument pins the crossing edge set to the two "
    "subdivision edges at the new vertices.",
)


class CertificateError(ValueError):
    """Malformed certificate or an inapplicable rule application."""


class FactRefuted(ValueError):
    """A base search found a factor that a claimed fact says cannot exist."""

    def __init__(self, fact: "Fact", result: PackingResult):
        super().__init__(f"fact refuted by a witness: {fact}")
        self.fact = fact
        self.result = result


def graph_hash(g: Graph) -> str:
    payload = f"{g.n}|" + ";".join(f"{u},{v}" for u, v in g.sorted_edges())
    return hashlib.sha256(payload.encode()).hexdigest()


@dataclass(frozen=True)
class Fact:
    """A no-factor claim about a concrete graph."""

    kind: str
    graph_hash: str
    n: int
    vertex: int | None = None
    edge: Edge | None = None
    vertex_label: str = ""
    edge_labels: tuple[str, str] | None = None

    def __post_init__(self) -> None:
        if self.kind not in FACT_KINDS:
            raise CertificateError(f"unknown fact kind {self.kind!r}")
        needs_vertex = self.kind in (KIND_MINUS_VERTEX, KIND_MINUS_VERTEX_AVOIDING)
        needs_edge = self.kind in (
            KIND_CONTAINING,
            KIND_AVOIDING,
            KIND_MINUS_VERTEX_AVOIDING,
        )
        if needs_vertex != (self.vertex is not None):
            raise CertificateError(f"fact kind {self.kind} vertex parameter mismatch")
        if needs_edge != (self.edge is not None):
            raise CertificateError(f"fact kind {self.kind} edge parameter mismatch")

    @property
    def residue(self) -> int:
        return self.n % 6

    @property
    def key(self) -> tuple:
        return (self.kind, self.graph_hash, self.vertex, self.edge)

    def residual_size(self) -> int:
        """Live vertex count of the search that grounds this fact."""
        return self.n - (1 if self.vertex is not None else 0)

    def to_problem(self, g: Graph) -> PackingProblem:
        if graph_hash(g) != self.graph_hash:
            raise CertificateError("fact does not describe this graph")
        kw: dict = {}
        if self.vertex is not None:
            kw["deleted_vertices"] = frozenset({self.vertex})
        if self.kind == KIND_CONTAINING:
            kw["forced_edges"] = frozenset({self.edge})
        elif self.kind in (KIND_AVOIDING, KIND_MINUS_VERTEX_AVOIDING):
            kw["forbidden_edges"] = frozenset({self.edge})
        return PackingProblem(g, Mode.FACTOR, **kw)


def make_fact(
    g: Graph, kind: str, vertex: int | None = None, edge: Edge | None = None
) -> Fact:
    if edge is not None:
        edge = norm_edge(*edge)
        if edge not in g.edges:
            raise CertificateError(f"fact edge {edge} not in graph")
    if vertex is not None:
        g.check_vertex(vertex)
        if edge is not None and vertex in edge:
            raise CertificateError("fact edge must not touch the deleted vertex")
    return Fact(
        kind,
        graph_hash(g),
        g.n,
        vertex,
        edge,
        g.labels[vertex] if vertex is not None else "",
        (g.labels[edge[0]], g.labels[edge[1]]) if edge is not None else None,
    )


@dataclass(frozen=True)
class CertStep:
    step_id: str
    rule: str  # "BASE" or "R1".."R6"
    premises: tuple[str, ...]
    conclusion: Fact
    side_conditions: dict
    evidence: dict


@dataclass
class Certificate:
    graphs: dict[str, Graph]  # hash -> graph
    graph_names: dict[str, str]  # hash -> human name from the script
    steps: tuple[CertStep, ...]
    final_facts: tuple[Fact, ...]
    notes: tuple[str, ...] = NOTES

    def fact_for(self, name: str) -> Fact | None:
        """The strongest fact concluded about the graph bound to ``name``."""
        wanted = {h for h, n in self.graph_names.items() if n == name}
        for fact in reversed(self.final_facts):
            if fact.graph_hash in wanted:
                return fact
        for step in reversed(self.steps):
            if step.conclusion.graph_hash in wanted:
                return step.conclusion
        return None


# ----------------------------------------------------------------------
# Rule applications
# ----------------------------------------------------------------------


@dataclass
class _FactStore:
    by_key: dict[tuple, tuple[Fact, str]] = field(default_factory=dict)

    def add(self, fact: Fact, step_id: str) -> None:
        self.by_key.setdefault(fact.key, (fact, step_id))

    def get(self, kind: str, ghash: str, vertex=None, edge=None):
        return self.by_key.get((kind, ghash, vertex, edge))

    def find_minus_vertex_avoiding(self, ghash: str, edge: Edge):
        for (kind, h, _v, e), entry in self.by_key.items():
            if kind == KIND_MINUS_VERTEX_AVOIDING and h == ghash and e == edge:
                return entry
        return None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CertificateError(message)


def _vertex_anchor_payload(a: cons.PortedVertex) -> dict:
    return {
        "graph": graph_hash(a.graph),
        "vertex": a.v,
        "ports": list(a.ports),
    }


def _edge_anchor_payload(a: cons.PortedEdge) -> dict:
    return {"graph": graph_hash(a.graph), "edge": [a.e1, a.e2]}


def apply_rule(
    record: BuildRecord, store: _FactStore, step_id: str
) -> CertStep | None:
    """Derive the fact (if any) that a construction step supports.

    Returns None when the operator/residue signature matches no rule.
    Raises CertificateError when a rule matches but its premises are
    missing or a side condition fails.
    """
    if record.op is None or record.detail is None:
        return None
    if record.op == "ebridge":
        return _apply_r1(record, step_id)
    if record.op == "ymerge":
        return _apply_r2(record, store, step_id)
    if record.op == "vsub":
        return _apply_r3(record, store, step_id)
    if record.op == "esub":
        a, b = record.anchors
        ra, rb = a.graph.n % 6, b.graph.n % 6
        if (ra, rb) == (0, 4):
            return _apply_r4(record, store, step_id)
        if (ra, rb) == (2, 4):
            return _apply_r5(record, store, step_id)
        if (ra, rb) == (0, 0):
            return _apply_r6(record, store, step_id)
        return None
    return None


def _cubic_sides(*graphs: Graph) -> None:
    for g in graphs:
        _require(is_cubic(g), "rule requires cubic operands")


def _apply_r1(record: BuildRecord, step_id: str) -> CertStep | None:
    a, b = record.anchors
    detail = record.detail
    if a.graph.n % 6 != 2 or b.graph.n % 6 != 2:
        return None
    _cubic_sides(a.graph, b.graph)
    fact = make_fact(record.graph, KIND_CONTAINING, edge=detail.middle_edge)
    side = {
        "op": "ebridge",
        "a": _edge_anchor_payload(a),
        "b": _edge_anchor_payload(b),
        "residues": [a.graph.n % 6, b.graph.n % 6],
        "middle_edge": list(detail.middle_edge),
    }
    return CertStep(step_id, "R1", (), fact, side, {})


def _apply_r2(record: BuildRecord, store: _FactStore, step_id: str) -> CertStep | None:
    (a,) = record.anchors
    if a.graph.n % 6 != 0:
        return None
    _cubic_sides(a.graph)
    marked = norm_edge(a.v, a.ports[0])
    premise = store.get(KIND_CONTAINING, graph_hash(a.graph), edge=marked)
    _require(
        premise is not None,
        f"R2 premise missing: no-factor-containing {marked} on the merged graph",
    )
    fact = make_fact(record.graph, KIND_NO_FACTOR)
    side = {
        "op": "ymerge",
        "a": _vertex_anchor_payload(a),
        "residues": [a.graph.n % 6],
        "marked_edge": list(marked),
    }
    return CertStep(step_id, "R2", (premise[1],), fact, side, {})


def _apply_r3(record: BuildRecord, store: _FactStore, step_id: str) -> CertStep | None:
    a, b = record.anchors
    detail = record.detail
    if a.graph.n % 6 != 0 or b.graph.n % 6 != 0:
        return None
    _cubic_sides(a.graph, b.graph)
    marked = norm_edge(a.v, a.ports[0])
    premise = store.get(KIND_CONTAINING, graph_hash(a.graph), edge=marked)
    _require(
        premise is not None,
        f"R3 premise missing: no-factor-containing {marked} on the first operand",
    )
    out_vertex = detail.map_b[b.ports[1]]
    out_edge = norm_edge(detail.map_a[a.ports[2]], detail.map_b[b.ports[2]])
    fact = make_fact(
        record.graph, KIND_MINUS_VERTEX_AVOIDING, vertex=out_vertex, edge=out_edge
    )
    side = {
        "op": "vsub",
        "a": _vertex_anchor_payload(a),
        "b": _vertex_anchor_payload(b),
        "residues": [0, 0],
        "marked_edge": list(marked),
    }
    return CertStep(step_id, "R3", (premise[1],), fact, side, {})


def _apply_r4(record: BuildRecord, store: _FactStore, step_id: str) -> CertStep:
    a, b = record.anchors
    detail = record.detail
    _cubic_sides(a.graph, b.graph)
    prem_a = store.get(KIND_CONTAINING, graph_hash(a.graph), edge=a.edge)
    _require(
        prem_a is not None,
        f"R4 premise missing: no-factor-containing {a.edge} on the first operand",
    )
    prem_b = store.find_minus_vertex_avoiding(graph_hash(b.graph), b.edge)
    _require(
        prem_b is not None,
        f"R4 premise missing: minus-vertex-avoiding {b.edge} on the second operand",
    )
    x = prem_b[0].vertex
    _require(x not in b.edge, "R4 needs the deleted vertex not incident to the edge")
    fact = make_fact(record.graph, KIND_MINUS_VERTEX, vertex=detail.map_b[x])
    side = {
        "op": "esub",
        "a": _edge_anchor_payload(a),
        "b": _edge_anchor_payload(b),
        "residues": [0, 4],
        "x": x,
    }
    return CertStep(step_id, "R4", (prem_a[1], prem_b[1]), fact, side, {})


def _apply_r5(record: BuildRecord, store: _FactStore, step_id: str) -> CertStep:
    a, b = record.anchors
    detail = record.detail
    _cubic_sides(a.graph, b.graph)
    premise = store.get(KIND_MINUS_VERTEX, graph_hash(b.graph), vertex=b.e1)
    _require(
        premise is not None,
        f"R5 premise missing: minus-vertex fact for the first endpoint {b.e1} "
        "of the second operand's edge",
    )
    out_edge = norm_edge(detail.map_a[a.e2], detail.map_b[b.e2])
    fact = make_fact(record.graph, KIND_AVOIDING, edge=out_edge)
    side = {
        "op": "esub",
        "a": _edge_anchor_payload(a),
        "b": _edge_anchor_payload(b),
        "residues": [2, 4],
    }
    return CertStep(step_id, "R5", (premise[1],), fact, side, {})


def _apply_r6(record: BuildRecord, store: _FactStore, step_id: str) -> CertStep:
    a, b = record.anchors
    detail = record.detail
    _cubic_sides(a.graph, b.graph)
    prem_a = store.get(KIND_CONTAINING, graph_hash(a.graph), edge=a.edge)
    _require(
        prem_a is not None,
        f"R6 premise missing: no-factor-containing {a.edge} on the first operand",
    )
    prem_b = store.get(KIND_AVOIDING, graph_hash(b.graph), edge=b.edge)
    _require(
        prem_b is not None,
        f"R6 premise missing: no-factor-avoiding {b.edge} on the second operand",
    )
    fact = make_fact(record.graph, KIND_NO_FACTOR)
    side = {
        "op": "esub",
        "a": _edge_anchor_payload(a),
        "b": _edge_anchor_payload(b),
        "residues": [0, 0],
    }
    return CertStep(step_id, "R6", (prem_a[1], prem_b[1]), fact, side, {})


# ----------------------------------------------------------------------
# Base verification
# ----------------------------------------------------------------------


def verify_base(
    fact: Fact,
    g: Graph,
    step_id: str,
    budget: Budget | None = None,
    seams: tuple[Seam, ...] = (),
) -> CertStep:
    """Ground a fact by exhaustive search.

    Returns a BASE step whose evidence verdict is UNSAT (verified) or
    INDETERMINATE (budget ran out).  Raises FactRefuted when the search
    finds a factor, which falsifies the fact.
    """
    if fact.residual_size() % 3 != 0:
        raise CertificateError(
            f"fact residual size {fact.residual_size()} is not divisible by 3"
        )
    problem = fact.to_problem(g)
    result = solve(problem, budget or Budget(), seams=seams)
    if result.verdict == "SAT":
        raise FactRefuted(fact, result)
    evidence = {"verdict": result.verdict, "nodes": result.stats.nodes}
    side = {"problem": _problem_payload(fact)}
    return CertStep(step_id, "BASE", (), fact, side, evidence)


def _problem_payload(fact: Fact) -> dict:
    out: dict = {"mode": "FACTOR"}
    if fact.vertex is not None:
        out["deleted_vertices"] = [fact.vertex]
    if fact.kind == KIND_CONTAINING:
        out["forced_edges"] = [list(fact.edge)]
    elif fact.kind in (KIND_AVOIDING, KIND_MINUS_VERTEX_AVOIDING):
        out["forbidden_edges"] = [list(fact.edge)]
    return out


# ----------------------------------------------------------------------
# Pipeline replay
# ----------------------------------------------------------------------


class ReplayError(ValueError):
    """Replay aborted; carries the partial certificate assembled so far."""

    def __init__(self, message: str, partial: Certificate):
        super().__init__(message)
        self.partial = partial


#: residual-size tiers for base cross-checks: (max residual vertices, must finish)
BASE_STRICT_MAX = 27
BASE_BUDGETED_MAX = 46


def replay_pipeline(
    script: str = DEFAULT_SCRIPT,
    base_budget: Budget | None = None,
    deep: bool = False,
    use_seams: bool = True,
) -> Certificate:
    """Evaluate a construction script and certify its no-factor facts.

    Every bound stage whose operator and residues match a rule yields a
    rule step.  Facts whose grounding search stays within
    ``BASE_BUDGETED_MAX`` live vertices are additionally BASE-verified
    (facts within ``BASE_STRICT_MAX`` must finish; larger ones may record
    INDETERMINATE evidence without failing the replay).  ``deep=True``
    removes the size cap so even the largest facts get a direct search.
    Final facts are all conclusions except the middle-edge gadget facts,
    which exist to feed the other rules.
    """
    base_budget = base_budget or Budget()
    records = run_script(script)
    store = _FactStore()
    steps: list[CertStep] = []
    graphs: dict[str, Graph] = {}
    names: dict[str, str] = {}

    def partial() -> Certificate:
        finals = tuple(
            s.conclusion
            for s in steps
            if s.rule != "BASE" and s.conclusion.kind != KIND_CONTAINING
        )
        return Certificate(graphs, names, tuple(steps), finals)

    for rec in records:
        if rec.name is None:
            continue
        h = graph_hash(rec.graph)
        graphs.setdefault(h, rec.graph)
        names.setdefault(h, rec.name)
        for anchor in rec.anchors:
            ah = graph_hash(anchor.graph)
            graphs.setdefault(ah, anchor.graph)
        try:
            step = apply_rule(rec, store, f"s{len(steps) + 1}")
        except CertificateError as exc:
            raise ReplayError(f"stage {rec.name!r}: {exc}", partial()) from exc
        if step is None:
            continue
        steps.append(step)
        store.add(step.conclusion, step.step_id)

    rule_steps = list(steps)
    for step in rule_steps:
        fact = step.conclusion
        size = fact.residual_size()
        if size > BASE_BUDGETED_MAX and not deep:
            continue
        subject = graphs[fact.graph_hash]
        seams = find_seams(subject) if use_seams else ()
        try:
            base = verify_base(
                fact, subject, f"s{len(steps) + 1}", base_budget, seams
            )
        except FactRefuted as exc:
            raise ReplayError(
                f"base search refuted {fact.kind} on "
                f"{names.get(fact.graph_hash, fact.graph_hash[:12])}: {exc}",
                partial(),
            ) from exc
        if (
            base.evidence["verdict"] == "INDETERMINATE"
            and size <= BASE_STRICT_MAX
        ):
            raise ReplayError(
                f"strict base check ran out of budget on {size} vertices",
                partial(),
            )
        steps.append(base)

    return partial()


# ----------------------------------------------------------------------
# Certificate serialization
# ----------------------------------------------------------------------


def certificate_to_dict(cert: Certificate) -> dict:
    def fact_payload(f: Fact) -> dict:
        out: dict = {
            "kind": f.kind,
            "graph": f.graph_hash,
            "n": f.n,
            "residue": f.residue,
        }
        if f.vertex is not None:
            out["vertex"] = f.vertex
            out["vertexLabel"] = f.vertex_label
        if f.edge is not None:
            out["edge"] = list(f.edge)
            out["edgeLabels"] = list(f.edge_labels or ())
        return out

    return {
        "format": "lambdapack-certificate/1",
        "graphs": {
            h: {
                "name": cert.graph_names.get(h, ""),
                "n": g.n,
                "edges": [list(e) for e in g.sorted_edges()],
                "labels": list(g.labels),
            }
            for h, g in sorted(cert.graphs.items())
        },
        "steps": [
            {
                "id": s.step_id,
                "rule": s.rule,
                "premises": list(s.premises),
                "conclusion": fact_payload(s.conclusion),
                "sideConditions": s.side_conditions,
                "evidence": s.evidence,
            }
            for s in cert.steps
        ],
        "finalFacts": [fact_payload(f) for f in cert.final_facts],
        "notes": list(cert.notes),
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), sort_keys=True, indent=2) + "\n"


def _fact_from_payload(data: dict) -> Fact:
    edge = tuple(data["edge"]) if "edge" in data else None
    fact = Fact(
        data["kind"],
        data["graph"],
        data["n"],
        data.get("vertex"),
        norm_edge(*edge) if edge else None,
        data.get("vertexLabel", ""),
        tuple(data.get("edgeLabels", ())) or None if edge else None,
    )
    if "residue" in data and data["residue"] != fact.residue:
        raise CertificateError(
            f"fact residue {data['residue']} does not match n={fact.n}"
        )
    return fact


def certificate_from_dict(data: dict) -> Certificate:
    if data.get("format") != "lambdapack-certificate/1":
        raise CertificateError("unknown certificate format")
    graphs: dict[str, Graph] = {}
    names: dict[str, str] = {}
    for h, payload in data["graphs"].items():
        g = Graph.from_edges(
            payload["n"],
            [tuple(e) for e in payload["edges"]],
            payload["labels"],
        )
        graphs[h] = g
        if payload.get("name"):
            names[h] = payload["name"]
    steps = tuple(
        CertStep(
            s["id"],
            s["rule"],
            tuple(s["premises"]),
            _fact_from_payload(s["conclusion"]),
            s["sideConditions"],
            s["evidence"],
        )
        for s in data["steps"]
    )
    finals = tuple(_fact_from_payload(f) for f in data["finalFacts"])
    return Certificate(graphs, names, steps, finals, tuple(data.get("notes", ())))


def certificate_from_json(text: str) -> Certificate:
    return certificate_from_dict(json.loads(text))


# ----------------------------------------------------------------------
# Certificate checking
# ----------------------------------------------------------------------


def check_certificate(cert: Certificate | dict | str, strict: bool = False) -> bool:
    """Re-validate a certificate; True iff every step checks out."""
    return not check_certificate_detailed(cert, strict)


def check_certificate_detailed(
    cert: Certificate | dict | str, strict: bool = False
) -> list[str]:
    """All problems found while re-validating; empty list means valid.

    Non-strict checking re-derives every rule step (rebuilding composites
    from the stored operand graphs) and validates BASE problem encodings,
    but accepts recorded UNSAT evidence.  ``strict=True`` re-runs every
    BASE search.
    """
    try:
        if isinstance(cert, str):
            cert = certificate_from_json(cert)
        elif isinstance(cert, dict):
            cert = certificate_from_dict(cert)
    except (CertificateError, GraphError, KeyError, TypeError, ValueError) as exc:
        return [f"malformed certificate: {exc}"]

    problems: list[str] = []
    for h, g in cert.graphs.items():
        if graph_hash(g) != h:
            problems.append(f"graph table entry {h[:12]} does not match its hash")
    if problems:
        return problems

    concluded: dict[str, Fact] = {}
    for step in cert.steps:
        where = f"step {step.step_id}"
        for pid in step.premises:
            if pid not in concluded:
                problems.append(f"{where}: dangling premise {pid}")
        fact = step.conclusion
        if fact.graph_hash not in cert.graphs:
            problems.append(f"{where}: conclusion graph missing from table")
            continue
        subject = cert.graphs[fact.graph_hash]
        if fact.n != subject.n:
            problems.append(f"{where}: conclusion vertex count mismatch")
            continue
        if any(pid not in concluded for pid in step.premises):
            continue
        premise_facts = [concluded[pid] for pid in step.premises]
        try:
            if step.rule == "BASE":
                _check_base_step(cert, step, strict)
            else:
                _check_rule_step(cert, step, premise_facts)
        except (CertificateError, GraphError, FactRefuted) as exc:
            problems.append(f"{where}: {exc}")
            continue
        if step.rule == "BASE" and step.evidence.get("verdict") != "UNSAT":
            # a recorded search attempt that ran out of budget grounds nothing
            continue
        concluded[step.step_id] = fact

    known = set(concluded.values())
    for fact in cert.final_facts:
        if fact not in known:
            problems.append(
                f"final fact {fact.kind} on n={fact.n} not concluded by any step"
            )
    return problems


def _check_base_step(cert: Certificate, step: CertStep, strict: bool) -> None:
    fact = step.conclusion
    subject = cert.graphs[fact.graph_hash]
    payload = _problem_payload(fact)
    if step.side_conditions.get("problem") != payload:
        raise CertificateError("BASE problem encoding does not match the fact")
    verdict = step.evidence.get("verdict")
    if verdict not in ("UNSAT", "INDETERMINATE"):
        raise CertificateError(f"BASE evidence verdict {verdict!r} is not probative")
    if strict and verdict == "UNSAT":
        result = solve(fact.to_problem(subject), seams=find_seams(subject))
        if result.verdict == "SAT":
            raise FactRefuted(fact, result)
        if result.verdict != "UNSAT":
            raise CertificateError("strict BASE re-run did not finish")


def _check_rule_step(
    cert: Certificate, step: CertStep, premises: list[Fact]
) -> None:
    side = step.side_conditions
    op = side.get("op")
    rebuilt, detail, anchors = _rebuild(cert, side)
    if graph_hash(rebuilt) != step.conclusion.graph_hash:
        raise CertificateError("rebuilt composite does not match conclusion graph")

    rule = step.rule
    fact = step.conclusion
    if rule == "R1":
        _expect(op == "ebridge", "R1 needs an ebridge")
        a, b = anchors
        _expect(a.graph.n % 6 == 2 and b.graph.n % 6 == 2, "R1 residues")
        _cubic_sides(a.graph, b.graph)
        _expect(len(premises) == 0, "R1 takes no premises")
        _expect(fact.kind == KIND_CONTAINING, "R1 concludes a containing fact")
        _expect(fact.edge == detail.middle_edge, "R1 edge must be the middle edge")
    elif rule == "R2":
        _expect(op == "ymerge", "R2 needs a ymerge")
        (a,) = anchors
        _expect(a.graph.n % 6 == 0, "R2 residue")
        _cubic_sides(a.graph)
        marked = norm_edge(a.v, a.ports[0])
        _match_premise(premises, 0, KIND_CONTAINING, graph_hash(a.graph), edge=marked)
        _expect(fact.kind == KIND_NO_FACTOR, "R2 concludes no-factor")
    elif rule == "R3":
        _expect(op == "vsub", "R3 needs a vsub")
        a, b = anchors
        _expect(a.graph.n % 6 == 0 and b.graph.n % 6 == 0, "R3 residues")
        _cubic_sides(a.graph, b.graph)
        marked = norm_edge(a.v, a.ports[0])
        _match_premise(premises, 0, KIND_CONTAINING, graph_hash(a.graph), edge=marked)
        _expect(fact.kind == KIND_MINUS_VERTEX_AVOIDING, "R3 conclusion kind")
        _expect(fact.vertex == detail.map_b[b.ports[1]], "R3 deleted vertex")
        want = norm_edge(detail.map_a[a.ports[2]], detail.map_b[b.ports[2]])
        _expect(fact.edge == want, "R3 avoided edge")
    elif rule == "R4":
        _expect(op == "esub", "R4 needs an esub")
        a, b = anchors
        _expect(a.graph.n % 6 == 0 and b.graph.n % 6 == 4, "R4 residues")
        _cubic_sides(a.graph, b.graph)
        _match_premise(premises, 0, KIND_CONTAINING, graph_hash(a.graph), edge=a.edge)
        _match_premise(
            premises, 1, KIND_MINUS_VERTEX_AVOIDING, graph_hash(b.graph), edge=b.edge
        )
        x = premises[1].vertex
        _expect(x is not None and x not in b.edge, "R4 vertex incident to the edge")
        _expect(fact.kind == KIND_MINUS_VERTEX, "R4 conclusion kind")
        _expect(fact.vertex == detail.map_b[x], "R4 deleted vertex mapping")
    elif rule == "R5":
        _expect(op == "esub", "R5 needs an esub")
        a, b = anchors
        _expect(a.graph.n % 6 == 2 and b.graph.n % 6 == 4, "R5 residues")
        _cubic_sides(a.graph, b.graph)
        _match_premise(
            premises, 0, KIND_MINUS_VERTEX, graph_hash(b.graph), vertex=b.e1
        )
        _expect(fact.kind == KIND_AVOIDING, "R5 conclusion kind")
        want = norm_edge(detail.map_a[a.e2], detail.map_b[b.e2])
        _expect(fact.edge == want, "R5 avoided edge")
    elif rule == "R6":
        _expect(op == "esub", "R6 needs an esub")
        a, b = anchors
        _expect(a.graph.n % 6 == 0 and b.graph.n % 6 == 0, "R6 residues")
        _cubic_sides(a.graph, b.graph)
        _match_premise(premises, 0, KIND_CONTAINING, graph_hash(a.graph), edge=a.edge)
        _match_premise(premises, 1, KIND_AVOIDING, graph_hash(b.graph), edge=b.edge)
        _expect(fact.kind == KIND_NO_FACTOR, "R6 conclusion kind")
    else:
        raise CertificateError(f"unknown rule {rule!r}")


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CertificateError(message)


def _match_premise(
    premises: list[Fact],
    index: int,
    kind: str,
    ghash: str,
    vertex: int | None = None,
    edge: Edge | None = None,
) -> None:
    _expect(index < len(premises), f"premise {index} missing")
    p = premises[index]
    _expect(p.kind == kind, f"premise {index} kind is {p.kind}, want {kind}")
    _expect(p.graph_hash == ghash, f"premise {index} is about the wrong graph")
    if vertex is not None:
        _expect(p.vertex == vertex, f"premise {index} vertex mismatch")
    if edge is not None:
        _expect(p.edge == edge, f"premise {index} edge mismatch")


def _rebuild(cert: Certificate, side: dict):
    """Re-run the recorded construction from operand graphs in the table."""
    op = side.get("op")

    def vertex_anchor(payload: dict) -> cons.PortedVertex:
        g = cert.graphs.get(payload["graph"])
        _expect(g is not None, "operand graph missing from table")
        return cons.PortedVertex(g, payload["vertex"], tuple(payload["ports"]))

    def edge_anchor(payload: dict) -> cons.PortedEdge:
        g = cert.graphs.get(payload["graph"])
        _expect(g is not None, "operand graph missing from table")
        return cons.PortedEdge(g, *payload["edge"])

    if op == "ebridge":
        a, b = edge_anchor(side["a"]), edge_anchor(side["b"])
        detail = cons.ebridge_detail(a, b)
        return detail.graph, detail, (a, b)
    if op == "esub":
        a, b = edge_anchor(side["a"]), edge_anchor(side["b"])
        detail = cons.esub_detail(a, b)
        return detail.graph, detail, (a, b)
    if op == "vsub":
        a, b = vertex_anchor(side["a"]), vertex_anchor(side["b"])
        detail = cons.vsub_detail(a, b)
        return detail.graph, detail, (a, b)
    if op == "ymerge":
        a = vertex_anchor(side["a"])
        detail = cons.ymerge_detail(a)
        return detail.graph, detail, (a,)
    raise CertificateError(f"unknown construction op {op!r}")
