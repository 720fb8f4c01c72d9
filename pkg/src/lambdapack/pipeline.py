"""The default construction pipeline and its distinguished anchors.

The pipeline builds, in order:

* ``K`` (18 vertices) -- two cubes bridged through a middle edge z;
  every factor of K avoids z.
* ``R`` (54) -- triple merge of K through the endpoint z1 of z; has no
  factor at all (but is not planar, so it is not the headline graph).
* ``H`` (28) -- K with z1 substituted by the six-prism; H minus the
  vertex B.o5 has no factor avoiding the edge (A.B.000, B.i0).
* ``D`` (46) -- K edge-substituted (at z) into H (at that edge);
  D minus B.B.o5 has no factor.
* ``F`` (54) -- a cube edge-substituted into D at an edge through
  D's distinguished vertex; F has no factor avoiding (A.001, B.B.A.A.000).
* ``N`` (72) -- K edge-substituted (at z) into F at that edge; N has no
  factor, hence lambda(N) <= 23 < 72/3.

All anchors are fixed here so certificates are reproducible: the cube edge
is its lexicographically smallest edge, the K ports place z2 first (so the
marked edge of K is z itself), and the prism anchor is o0 with ports in
ascending id order.

``find_seams`` recovers every matching cut of size 2 or 3 that the
composition operators left behind (readable off the label prefixes), for
use as solver annotations.  ``family`` swaps ever larger prisms into the
pipeline, yielding the infinite series of counterexamples; member 0 is the
pipeline itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import side_vertices
from .dsl import BuildRecord, run_script
from .graph import Edge, Graph
from .packing import Seam

DEFAULT_SCRIPT = """\
let K = ebridge(atlas(Q)@000-001, atlas(Q)@000-001)
let R = ymerge(K@z1[z2,A.000,B.000])
let H = vsub(K@z1[z2,A.000,B.000], atlas(S)@o0[o1,o5,i0])
let D = esub(K@z1-z2, H@A.B.000-B.i0)
let F = esub(atlas(Q)@000-001, D@B.B.o5-B.A.A.000)
let N = esub(K@z1-z2, F@A.001-B.B.A.A.000)
"""

PIPELINE_ORDER = ("K", "R", "H", "D", "F", "N")

EXPECTED_VERTEX_COUNTS = {
    "Q": 8,
    "S": 12,
    "K": 18,
    "R": 54,
    "H": 28,
    "D": 46,
    "F": 54,
    "N": 72,
}


@dataclass(frozen=True)
class PipelineGraphs:
    """The evaluated pipeline with its distinguished vertices/edges."""

    records: dict[str, BuildRecord]

    @property
    def graphs(self) -> dict[str, Graph]:
        return {name: rec.graph for name, rec in self.records.items()}

    def graph(self, name: str) -> Graph:
        return self.records[name].graph

    def middle_edge_of_k(self) -> Edge:
        k = self.graph("K")
        return k.edge_by_labels("z1", "z2")

    def marked_vertex_of_h(self) -> int:
        return self.graph("H").vertex_by_label("B.o5")

    def marked_edge_of_h(self) -> Edge:
        return self.graph("H").edge_by_labels("A.B.000", "B.i0")

    def marked_vertex_of_d(self) -> int:
        return self.graph("D").vertex_by_label("B.B.o5")

    def marked_edge_of_f(self) -> Edge:
        return self.graph("F").edge_by_labels("A.001", "B.B.A.A.000")


def build_pipeline(script: str = DEFAULT_SCRIPT) -> PipelineGraphs:
    """Evaluate a pipeline script into named graphs."""
    records = {}
    for rec in run_script(script):
        if rec.name is not None:
            records[rec.name] = rec
    return PipelineGraphs(records)


def find_seams(g: Graph) -> tuple[Seam, ...]:
    """Matching cuts of size 2 or 3 recovered from composition label prefixes.

    Every composite label starts with a chain of side prefixes ("A.", "B.",
    "Y1."...); each proper prefix marks one side of the cut its operator
    created.  A prefix qualifies as a seam when the edges leaving its side
    form a matching of 2 or 3 edges.  Cuts are deduplicated by edge set.
    """
    prefixes: set[str] = set()
    for label in g.labels:
        parts = label.split(".")
        for depth in range(1, len(parts)):
            prefixes.add(".".join(parts[:depth]) + ".")
    seams = []
    seen_cuts: set[frozenset[Edge]] = set()
    for prefix in sorted(prefixes):
        side = side_vertices(g, prefix)
        if not side or len(side) == g.n:
            continue
        cut = frozenset(e for e in g.edges if (e[0] in side) != (e[1] in side))
        if not (2 <= len(cut) <= 3) or cut in seen_cuts:
            continue
        ends = [v for e in cut for v in e]
        if len(set(ends)) != len(ends):
            continue
        seen_cuts.add(cut)
        seams.append(Seam(side))
    return tuple(seams)


def family_script(member: int) -> str:
    """Pipeline script for the member-th counterexample (member 0 = default).

    Member t substitutes the prism over a (6 + 6t)-cycle for the six-prism;
    all residue side conditions are unchanged, so the certificate chain
    replays verbatim and the final graph has 72 + 12t vertices.  The prism
    anchor keeps ports in ascending id order (o1, o{m-1}, i0), which for
    m = 6 is exactly the default pipeline.
    """
    if member < 0:
        raise ValueError("family member index must be >= 0")
    m = 6 + 6 * member
    hi = f"o{m - 1}"
    return (
        "let K = ebridge(atlas(Q)@000-001, atlas(Q)@000-001)\n"
        "let R = ymerge(K@z1[z2,A.000,B.000])\n"
        f"let H = vsub(K@z1[z2,A.000,B.000], prism({m})@o0[o1,{hi},i0])\n"
        "let D = esub(K@z1-z2, H@A.B.000-B.i0)\n"
        f"let F = esub(atlas(Q)@000-001, D@B.B.{hi}-B.A.A.000)\n"
        "let N = esub(K@z1-z2, F@A.001-B.B.A.A.000)\n"
    )


def family(member: int) -> PipelineGraphs:
    """Build the member-th pipeline of the infinite family."""
    return build_pipeline(family_script(member))
