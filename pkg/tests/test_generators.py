import random

import pytest

from secdiff import (
    Graph,
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_random_tree,
    gen_scale_free_config,
    gen_watts_strogatz,
    prufer_decode,
)
from secdiff.generators import power_law_mean_degree, sample_power_law_degrees
from secdiff.graph import is_connected


def test_ba_forced_k4():
    g = gen_barabasi_albert(4, 3, random.Random(0))
    assert g.n == 4 and g.edge_count() == 6  # K3 start + one node on all three


def test_ba_edge_count_formula():
    g = gen_barabasi_albert(80, 3, random.Random(1))
    assert g.edge_count() == 3 + 77 * 3
    g.check_invariants()
    assert is_connected(g)


def test_ba_rejects_small_n():
    with pytest.raises(ValueError):
        gen_barabasi_albert(3, 3, random.Random(0))


def test_sf_degree_bounds():
    g = gen_scale_free_config(50, 2, 10, 3.0, random.Random(2))
    g.check_invariants()
    assert is_connected(g)
    assert all(1 <= g.degree(v) <= 10 for v in range(g.n))


def test_sf_rejects_bad_bounds():
    with pytest.raises(ValueError):
        sample_power_law_degrees(10, 5, 2, 3.0, random.Random(0))


def test_sf_sampler_matches_analytic_mean():
    rng = random.Random(3)
    degrees = sample_power_law_degrees(20000, 2, 10, 3.0, rng)
    analytic = power_law_mean_degree(2, 10, 3.0)
    assert abs(sum(degrees) / len(degrees) - analytic) < 0.05
    # the generated graph's empirical mean stays within 10% of analytic
    g = gen_scale_free_config(1000, 2, 10, 3.0, random.Random(4))
    empirical = 2 * g.edge_count() / g.n
    assert abs(empirical - analytic) / analytic < 0.10


def test_er_forced_edge():
    g = gen_erdos_renyi(2, 1.0, random.Random(0))
    assert g.edge_count() == 1


def test_er_mean_degree_concentrates():
    rng = random.Random(5)
    means = []
    for _ in range(100):
        g = gen_erdos_renyi(100, 10.0, rng)
        assert is_connected(g)
        means.append(2 * g.edge_count() / g.n)
    avg = sum(means) / len(means)
    assert 9.0 <= avg <= 11.0


def test_er_rejects_zero_degree():
    with pytest.raises(ValueError):
        gen_erdos_renyi(10, 0.0, random.Random(0))


def test_ws_no_rewire_is_lattice():
    g = gen_watts_strogatz(5, 2, 0.0, random.Random(0))
    assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    g = gen_watts_strogatz(100, 10, 0.0, random.Random(0))
    assert all(g.degree(v) == 10 for v in range(100))


def test_ws_rewiring_preserves_edge_count():
    g = gen_watts_strogatz(100, 10, 0.25, random.Random(6))
    assert g.edge_count() == 500
    g.check_invariants()
    degs = set(g.degrees())
    assert len(degs) > 1  # some rewiring happened


def test_ws_rejects_odd_degree():
    with pytest.raises(ValueError):
        gen_watts_strogatz(10, 3, 0.25, random.Random(0))


def test_tree_basics():
    g = gen_random_tree(2, random.Random(0))
    assert g.edge_count() == 1
    for seed in range(5):
        g = gen_random_tree(12, random.Random(seed))
        assert g.edge_count() == 11
        assert is_connected(g)


def test_prufer_decode_by_hand():
    g = prufer_decode([1], 3)  # star centered at node 1
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    g = prufer_decode([3, 3, 3], 5)
    assert g.degree(3) == 4


def test_tree_rejects_tiny():
    with pytest.raises(ValueError):
        gen_random_tree(1, random.Random(0))


def test_determinism_same_seed():
    for make in (
        lambda r: gen_barabasi_albert(30, 3, r),
        lambda r: gen_scale_free_config(30, 2, 6, 3.0, r),
        lambda r: gen_erdos_renyi(30, 6.0, r),
        lambda r: gen_watts_strogatz(30, 4, 0.25, r),
        lambda r: gen_random_tree(30, r),
    ):
        a = make(random.Random(42))
        b = make(random.Random(42))
        assert a == b
