"""Branch-and-bound vs. the naive exhaustive oracle on small graphs."""

import random

import pytest

from lambdapack import Mode, PackingError, PackingProblem, atlas, oracle_solve, solve
from lambdapack.constructions import PortedVertex, vsub
from lambdapack.graph import Graph
from lambdapack.sampling import sample_cubic, sample_subcubic


def _agree(problem: PackingProblem) -> None:
    a = solve(problem)
    b = oracle_solve(problem)
    assert a.verdict == b.verdict, problem
    if a.verdict == "OPTIMUM":
        assert a.value == b.value, problem


def test_atlas_agreement_both_modes():
    for name in ("K4", "K33", "Q", "S"):
        g = atlas(name)
        _agree(PackingProblem(g, Mode.MAX))
        if g.n % 3 == 0:
            _agree(PackingProblem(g, Mode.FACTOR))


def test_oracle_frozen_values():
    assert oracle_solve(PackingProblem(atlas("Q"), Mode.MAX)).value == 2
    assert oracle_solve(PackingProblem(atlas("K33"), Mode.MAX)).value == 2
    assert oracle_solve(PackingProblem(atlas("K4"), Mode.MAX)).value == 1


def test_composite_agreement():
    g = vsub(PortedVertex.default(atlas("K4"), 0), PortedVertex.default(atlas("K4"), 0))
    _agree(PackingProblem(g, Mode.FACTOR))
    _agree(PackingProblem(g, Mode.MAX))


def test_random_agreement_with_constraints():
    rng = random.Random(901)
    for trial in range(120):
        n = rng.choice([4, 6, 7, 8, 9, 10, 11, 12])
        g = sample_subcubic(n, seed=trial * 13 + 1)
        edges = sorted(g.edges)
        deleted = frozenset(rng.sample(range(n), k=rng.choice([0, 0, 1])))
        usable = [e for e in edges if e[0] not in deleted and e[1] not in deleted]
        forbidden = frozenset(rng.sample(usable, k=min(len(usable), rng.choice([0, 1]))))
        rest = [e for e in usable if e not in forbidden]
        forced = frozenset(rng.sample(rest, k=min(len(rest), rng.choice([0, 0, 1]))))
        problem = PackingProblem(
            g, Mode.MAX,
            deleted_vertices=deleted,
            forced_edges=forced,
            forbidden_edges=forbidden,
        )
        _agree(problem)
        if (n - len(deleted)) % 3 == 0:
            _agree(PackingProblem(
                g, Mode.FACTOR,
                deleted_vertices=deleted,
                forced_edges=forced,
                forbidden_edges=forbidden,
            ))


def test_random_cubic_agreement():
    for trial in range(25):
        n = [4, 6, 8, 10, 12][trial % 5]
        g = sample_cubic(n, seed=trial)
        _agree(PackingProblem(g, Mode.MAX))
        if n % 3 == 0:
            _agree(PackingProblem(g, Mode.FACTOR))


def test_oracle_size_guard():
    g = Graph.from_edges(16, [(i, i + 1) for i in range(15)])
    with pytest.raises(PackingError):
        oracle_solve(PackingProblem(g, Mode.MAX))
