import math
import random

import pytest

from secdiff import (
    Graph,
    betweenness_centrality,
    characteristic_value,
    closeness_centrality,
    compute_centrality,
    degree_centrality,
    make_game,
    shapley_exact,
    shapley_exact_all,
    shapley_mc,
    sv_betweenness_game,
    sv_closeness_game,
    sv_degree_game,
)
from secdiff.centrality import sv_degree_closed_form
from tests.helpers import brute_betweenness, random_connected_graph, random_graph


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_degree_centrality(star5, path3):
    assert degree_centrality(complete(4)).scores == (1.0, 1.0, 1.0, 1.0)
    assert degree_centrality(star5).scores == (1.0, 0.25, 0.25, 0.25, 0.25)
    assert degree_centrality(path3).scores == (0.5, 1.0, 0.5)


def test_closeness_centrality(triangle, path3, star5):
    assert closeness_centrality(triangle).scores == (1.0, 1.0, 1.0)
    assert closeness_centrality(path3).scores == pytest.approx((2 / 3, 1.0, 2 / 3))
    assert closeness_centrality(star5).scores[0] == 1.0


def test_closeness_rejects_disconnected():
    with pytest.raises(ValueError):
        closeness_centrality(Graph(4, [(0, 1), (2, 3)]))


def test_betweenness_examples(path3, star5):
    for n in (3, 5, 7):
        assert all(s == 0 for s in betweenness_centrality(complete(n)).scores)
    assert betweenness_centrality(star5).scores[0] == pytest.approx(1.0)
    assert betweenness_centrality(path3).scores[1] == pytest.approx(1.0)


def test_betweenness_vs_brute_force():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(3, 7)
        g = random_connected_graph(rng, n, rng.uniform(0.1, 0.8))
        got = betweenness_centrality(g).scores
        want = brute_betweenness(g)
        assert all(math.isclose(a, b, abs_tol=1e-9) for a, b in zip(got, want))


def test_characteristic_values(triangle, path3):
    assert characteristic_value(sv_degree_game(triangle), {0}) == 3
    assert characteristic_value(sv_degree_game(path3), {0}) == 2
    ball = sv_closeness_game(path3, delta=3)
    assert characteristic_value(ball, {0}) == 3  # diameter 2 <= 3
    paths = sv_betweenness_game(path3)
    assert characteristic_value(paths, {1}) == pytest.approx(2.0)
    assert characteristic_value(paths, set()) == 0.0


def test_shapley_exact_examples(triangle):
    game = sv_degree_game(triangle)
    assert [shapley_exact(game, v) for v in range(3)] == pytest.approx([1.0] * 3)
    edge = Graph(2, [(0, 1)])
    game = sv_degree_game(edge)
    assert [shapley_exact(game, v) for v in range(2)] == pytest.approx([1.0, 1.0])
    game = sv_betweenness_game(triangle)
    assert [shapley_exact(game, v) for v in range(3)] == pytest.approx([0.0] * 3)


def test_shapley_exact_guard():
    g = random_connected_graph(random.Random(0), 8)
    with pytest.raises(ValueError):
        shapley_exact(sv_degree_game(g), 0, max_n=6)


def _twin_pairs(g):
    """Node pairs whose swap is an automorphism (equal Shapley by symmetry)."""
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.neighbors(u) - {v} == g.neighbors(v) - {u}:
                pairs.append((u, v))
    return pairs


def test_shapley_efficiency_and_symmetry():
    rng = random.Random(12)
    for _ in range(12):
        n = rng.randint(3, 8)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        for tag in ("sv_degree", "sv_closeness", "sv_betweenness"):
            game = make_game(g, tag)
            scores = shapley_exact_all(game).scores
            assert abs(sum(scores) - game.grand_value()) < 1e-9
            for u, v in _twin_pairs(g):
                assert abs(scores[u] - scores[v]) < 1e-9


def test_sv_degree_closed_form_cross_check():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        exact = [shapley_exact(sv_degree_game(g), v) for v in range(n)]
        closed = sv_degree_closed_form(g)
        assert all(math.isclose(a, b, abs_tol=1e-9) for a, b in zip(exact, closed))


def test_shapley_mc_telescopes_exactly(triangle):
    game = sv_degree_game(triangle)
    res = shapley_mc(game, 2000, random.Random(3))
    # coverage games are integer valued, so the telescoped totals are exact
    assert sum(res.sums) == 2000 * game.grand_value()
    # per-node marginals are 3-or-0 with variance 2: 3 sigma ~ 0.095 here
    assert res.scores == pytest.approx((1.0, 1.0, 1.0), abs=0.15)


def test_shapley_mc_within_three_stderr():
    rng = random.Random(14)
    for _ in range(5):
        n = rng.randint(3, 8)
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        for tag in ("sv_degree", "sv_betweenness"):
            game = make_game(g, tag)
            exact = [shapley_exact(game, v) for v in range(n)]
            res = shapley_mc(game, 4000, rng)
            for v in range(n):
                bound = 3 * res.stderr[v] + 1e-9
                assert abs(res.scores[v] - exact[v]) <= bound


def test_compute_centrality_dispatch(star5):
    scores = compute_centrality(star5, "sv_degree")
    assert scores.measure == "sv_degree"
    assert scores.scores[0] == max(scores.scores)
    with pytest.raises(ValueError):
        compute_centrality(star5, "eigen")
    big = random_connected_graph(random.Random(1), 16)
    with pytest.raises(ValueError):
        compute_centrality(big, "sv_degree", exact_bound=10)  # rng required
    mc = compute_centrality(
        big, "sv_degree", exact_bound=10, rng=random.Random(2), samples=500
    )
    assert mc.samples == 500
