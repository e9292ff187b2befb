"""Exact optimal attacks: subset DP against brute force and closed forms.

The bitmask dynamic program handles any small network; trees get an O(n^3)
knapsack, and cliques and stars have closed-form orders.  All agree on the
optimum.
"""

import random

from secdiff import (
    GameConfig,
    Graph,
    eta,
    gen_random_tree,
    optimal_attack_clique,
    optimal_attack_dp,
    optimal_attack_exhaustive,
    optimal_attack_star,
    optimal_attack_tree,
)

rng = random.Random(3)

g = Graph(7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (5, 6)])
phi = [rng.uniform(0, 3) for _ in range(7)]
cfg = GameConfig(Phi=sum(phi), T=12.0)
seq_dp, eta_dp = optimal_attack_dp(g, phi, cfg, seed=0)
seq_ex, eta_ex = optimal_attack_exhaustive(g, phi, cfg, seed=0)
print(f"general 7-node graph: dp eta={eta_dp}, exhaustive eta={eta_ex}")
print(f"  dp order: {seq_dp.gamma}")

tree = gen_random_tree(12, rng)
phi = [rng.uniform(0, 2) for _ in range(12)]
cfg = GameConfig(Phi=sum(phi), T=18.0)
_, eta_tree = optimal_attack_tree(tree, phi, cfg, seed=0)
_, eta_dp = optimal_attack_dp(tree, phi, cfg, seed=0)
print(f"random tree:          knapsack eta={eta_tree}, dp eta={eta_dp}")

n = 8
clique = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
phi = [rng.uniform(0, 5) for _ in range(n)]
cfg = GameConfig(Phi=sum(phi), T=25.0)
seq = optimal_attack_clique(clique, phi, cfg)
print(f"clique:               weakest-first order {seq.gamma}, eta={eta(clique, phi, seq, cfg)}")

star = Graph(n, [(0, v) for v in range(1, n)])
phi = [4.0] + [rng.uniform(0, 8) for _ in range(n - 1)]
seq = optimal_attack_star(star, phi, cfg)
opener = "center" if seq.gamma[0] == 0 else "cheapest leaf"
print(f"star:                 opens with the {opener}, order {seq.gamma}")
