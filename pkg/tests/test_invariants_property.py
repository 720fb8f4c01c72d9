"""Property-based checks of the structural invariants."""

from hypothesis import given, settings, strategies as st

from lambdapack import (
    Graph,
    Mode,
    PackingProblem,
    components,
    edge_cut,
    from_json,
    is_bipartite,
    solve,
    to_json,
)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(all_pairs)) if all_pairs else st.just(set()))
    return Graph.from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.data())
def test_cut_symmetry(g, data):
    subset = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
    other = set(range(g.n)) - subset
    assert edge_cut(g, subset).size == edge_cut(g, other).size


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_bipartite_witness_proper(g):
    ok, coloring = is_bipartite(g)
    if ok:
        assert all(coloring[u] != coloring[v] for u, v in g.edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_json_round_trip(g):
    assert from_json(to_json(g)) == g


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_packing_value_bounded_and_components_partition(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    value = solve(PackingProblem(g, Mode.MAX)).value
    assert 0 <= value <= g.n // 3
