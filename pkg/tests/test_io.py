"""JSON and DOT serialization round-trips."""

import pytest

from lambdapack import Graph, GraphError, atlas, from_dot, from_json, to_dot, to_json
from lambdapack.pipeline import build_pipeline


def test_json_round_trip():
    for name in ("K4", "K33", "Q", "S"):
        g = atlas(name)
        assert from_json(to_json(g)) == g


def test_json_round_trip_pipeline():
    pipe = build_pipeline()
    n = pipe.graph("N")
    assert from_json(to_json(n)) == n


def test_json_is_deterministic():
    g = atlas("S")
    assert to_json(g) == to_json(atlas("S"))


def test_json_schema_shape():
    import json

    data = json.loads(to_json(atlas("K4")))
    assert set(data) == {"n", "edges", "labels"}
    assert data["n"] == 4
    assert data["labels"]["0"] == "v0"
    assert [0, 1] in data["edges"]


def test_json_malformed():
    with pytest.raises(GraphError):
        from_json("{not json")
    with pytest.raises(GraphError):
        from_json('{"n": 2, "edges": [[0, 5]], "labels": {}}')


def test_dot_round_trip():
    for name in ("K4", "K33", "Q", "S"):
        g = atlas(name)
        assert from_dot(to_dot(g)) == g


def test_dot_round_trip_composite_labels():
    pipe = build_pipeline()
    k = pipe.graph("K")
    text = to_dot(k)
    assert '"A.000"' in text and '"z1"' in text
    assert from_dot(text) == k


def test_dot_requires_unique_labels():
    g = Graph.from_edges(2, [(0, 1)], labels=["x", "x"])
    with pytest.raises(GraphError):
        to_dot(g)


def test_dot_rejects_garbage():
    with pytest.raises(GraphError):
        from_dot('graph G {\n  "a" [id=0];\n  nonsense\n}')


def test_problem_round_trip():
    from lambdapack import Mode, PackingProblem, problem_from_json, problem_to_json

    g = atlas("S")
    problem = PackingProblem(
        g, Mode.FACTOR,
        forced_edges=frozenset({(0, 1)}),
        forbidden_edges=frozenset({(6, 7)}),
    )
    text = problem_to_json(problem)
    again = problem_from_json(text)
    assert again == problem
    assert problem_to_json(again) == text


def test_problem_json_errors():
    from lambdapack import PackingError, problem_from_json

    with pytest.raises(GraphError):
        problem_from_json('{"mode": "MAX"}')  # graph missing
    # a constraint violation is a precondition error, not a shape error
    bad = (
        '{"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3],[0,3],[0,2],[1,3]],'
        ' "labels": {}}, "mode": "FACTOR"}'
    )
    with pytest.raises(PackingError):
        problem_from_json(bad)
