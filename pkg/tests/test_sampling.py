"""Random graph generators: contracts and determinism."""

import pytest

from lambdapack import GraphError, atlas, is_cubic
from lambdapack.graph import degree_profile
from lambdapack.sampling import sample_cubic, sample_degree23, sample_subcubic


def test_n4_is_the_complete_graph():
    # the only simple cubic graph on 4 vertices
    g = sample_cubic(4, seed=0)
    assert g.edges == atlas("K4").edges


def test_samples_are_cubic():
    for seed in range(10):
        assert is_cubic(sample_cubic(8, seed))
        assert is_cubic(sample_cubic(14, seed))


def test_deterministic_per_seed():
    assert sample_cubic(12, 7) == sample_cubic(12, 7)
    assert sample_cubic(12, 7) != sample_cubic(12, 8)
    assert sample_subcubic(10, 3) == sample_subcubic(10, 3)


def test_odd_or_tiny_rejected():
    with pytest.raises(GraphError):
        sample_cubic(7, 0)
    with pytest.raises(GraphError):
        sample_cubic(2, 0)


def test_subcubic_degree_cap():
    for seed in range(10):
        g = sample_subcubic(11, seed)
        assert degree_profile(g).max_degree <= 3


def test_degree23_contract():
    g = sample_degree23(12, 1)
    prof = degree_profile(g)
    assert prof.min_degree >= 2 and prof.max_degree <= 3
