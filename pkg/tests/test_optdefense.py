import random

import pytest

from secdiff import (
    AttackSequence,
    GameConfig,
    Graph,
    build_milp,
    eta,
    export_lp,
    optimal_attack_any_seed,
    optimal_attack_clique,
    optimal_defense_clique,
    optimal_defense_star,
    solve_defense,
)
from secdiff.optdefense import active_neighbor_counts
from tests.helpers import grid_search_defense_k, random_connected_graph


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_sequences():
    return [AttackSequence([0, 1, 2], 1), AttackSequence([2, 1, 0], 1)]


def test_build_milp_counts(path3):
    model = build_milp(path3, path_sequences(), 3.0, 4.0)
    # 3 phi rows + budget + 2*3 binaries + 2*3 prefix rows + 2 cover rows
    assert model.constraint_rows == 3 + 1 + 6 + 6 + 2
    assert all(c[0] == 1 for c in model.counts)
    # counts match a replay of the sequence through the game rules
    square = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    seq = AttackSequence([0, 1, 2, 3], 1)
    assert active_neighbor_counts(square, seq) == [1, 1, 2, 2]


def test_build_milp_rejects_invalid(path3):
    with pytest.raises(ValueError):
        build_milp(path3, [AttackSequence([0, 2], 1)], 3.0, 4.0)
    with pytest.raises(ValueError):
        build_milp(path3, [], 3.0, 4.0)


def test_export_lp_shape(path3):
    model = build_milp(path3, path_sequences(), 3.0, 4.0)
    text = export_lp(model)
    lower = text.lower()
    assert lower.count("maximize") == 1
    assert "bin" in lower
    assert "phi_0 + phi_1 + phi_2 <= 3" in text
    assert "a_0_1" in text and "a_1_3" in text
    # coefficients carry at least 12 significant digits
    T = 1 / 3
    model = build_milp(path3, path_sequences(), 3.0, T)
    assert "0.333333333333" in export_lp(model)


def test_solve_defense_path_matches_grid(path3):
    phi, k = solve_defense(path3, path_sequences(), 3.0, 4.0)
    gk = grid_search_defense_k(path3, path_sequences(), 3.0, 4.0)
    assert gk <= k
    cfg = GameConfig(Phi=3.0, T=4.0)
    assert min(3 - eta(path3, phi, s, cfg) for s in path_sequences()) >= k


def test_solve_defense_zero_budget(path3):
    phi, k = solve_defense(path3, path_sequences(), 0.0, 4.0)
    assert phi == [0.0, 0.0, 0.0]
    cfg = GameConfig(Phi=0.0, T=4.0)
    assert k == min(3 - eta(path3, [0.0] * 3, s, cfg) for s in path_sequences())


def test_solve_defense_huge_time_limit(path3):
    seqs = [AttackSequence([0, 1], 1), AttackSequence([1, 0, 2], 1)]
    phi, k = solve_defense(path3, seqs, 2.0, 1e9)
    assert k == min(3 - 2, 3 - 3)  # unvisited nodes are the only safe ones


def test_solve_defense_monotonicity(path3):
    seqs = path_sequences()
    ks_T = [solve_defense(path3, seqs, 3.0, T)[1] for T in (0.5, 2.0, 4.0, 8.0)]
    assert ks_T == sorted(ks_T, reverse=True)
    ks_Phi = [solve_defense(path3, seqs, Phi, 4.0)[1] for Phi in (0.0, 2.0, 5.0, 20.0)]
    assert ks_Phi == sorted(ks_Phi)


def _random_sequences(g, rng, count):
    out = []
    for _ in range(count):
        order = [rng.randrange(g.n)]
        active = set(order)
        target_len = rng.randint(1, g.n)
        while len(order) < target_len:
            frontier = [
                v for v in range(g.n) if v not in active and g.neighbors(v) & active
            ]
            if not frontier:
                break
            v = rng.choice(frontier)
            order.append(v)
            active.add(v)
        out.append(AttackSequence(order, 1))
    return out


def test_solve_defense_randomized_vs_grid():
    rng = random.Random(30)
    for _ in range(12):
        n = rng.randint(2, 4)
        g = random_connected_graph(rng, n, 0.5)
        seqs = _random_sequences(g, rng, rng.randint(1, 4))
        Phi = rng.uniform(0.0, 6.0)
        T = rng.uniform(0.5, 12.0)
        phi, k = solve_defense(g, seqs, Phi, T)
        gk = grid_search_defense_k(g, seqs, Phi, T)
        assert gk <= k
        cfg = GameConfig(Phi=max(Phi, sum(phi)) + 1e-9, T=T)
        assert min(g.n - eta(g, phi, s, cfg) for s in seqs) >= k


def test_star_defense_cases():
    # leveling everyone is affordable and reaches T
    phi = optimal_defense_star(4, 10.0, 4.0)
    assert phi[0] == pytest.approx(1.0)
    assert phi[1:] == pytest.approx([3.0] * 3)
    # not enough to level the center: spend on the leaves
    phi = optimal_defense_star(4, 2.0, 1.6)
    assert phi[0] == 0.0
    assert phi[1:] == pytest.approx([2 / 3] * 3)
    # far horizon: stack the center
    phi = optimal_defense_star(4, 5.0, 100.0)
    assert phi == [5.0, 0.0, 0.0, 0.0]


def test_star_defense_budget_guard():
    # T below the case-1 threshold but the budget cannot level the center
    phi = optimal_defense_star(6, 10.0, 2.5)
    assert phi[0] == 0.0  # falls through to the leaf-leveling case
    assert sum(phi) == pytest.approx(10.0)


def test_clique_defense():
    assert optimal_defense_clique(5, 10.0) == [2.0] * 5
    assert optimal_defense_clique(3, 0.0) == [0.0] * 3


def test_clique_defense_beats_random():
    rng = random.Random(31)
    n = 6
    g = complete(n)
    Phi = 12.0
    cfg = GameConfig(Phi=Phi + 1e-9, T=7.0)
    uniform = optimal_defense_clique(n, Phi)
    base = eta(g, uniform, optimal_attack_clique(g, uniform, cfg), cfg)
    for _ in range(500):
        w = [rng.random() for _ in range(n)]
        phi = [x / sum(w) * Phi for x in w]
        challenger = eta(g, phi, optimal_attack_clique(g, phi, cfg), cfg)
        assert base <= challenger


def test_star_defense_no_worse_than_random():
    rng = random.Random(32)
    n = 5
    g = Graph(n, [(0, v) for v in range(1, n)])
    for Phi, T in ((15.0, 3.0), (3.0, 1.5), (6.0, 30.0)):
        phi = optimal_defense_star(n, Phi, T)
        _, base = optimal_attack_any_seed(g, phi, GameConfig(Phi=Phi + 1e-9, T=T))
        for _ in range(200):
            w = [rng.random() for _ in range(n)]
            cand = [x / sum(w) * Phi for x in w]
            _, challenger = optimal_attack_any_seed(
                g, cand, GameConfig(Phi=Phi + 1e-9, T=T)
            )
            assert base <= challenger
