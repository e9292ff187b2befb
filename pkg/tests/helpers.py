"""Shared brute-force oracles and instance generators for the test suite.

The oracles deliberately avoid the library's own algorithms: shortest paths
are enumerated recursively, optima are found by exhaustive search over tiny
spaces, and expected values are computed from first principles.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from secdiff import Graph
from secdiff.game import AttackSequence, GameConfig, eta
from secdiff.generators import gen_random_tree


def bfs_oracle(g: Graph, s: int) -> list:
    dist = [None] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for w in g.neighbor_list(v):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def all_shortest_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """Every shortest s-t path, by backtracking over distance-decreasing edges."""
    dist = bfs_oracle(g, s)
    if dist[t] is None:
        return []
    paths = []

    def back(v, suffix):
        if v == s:
            paths.append([s] + suffix)
            return
        for w in g.neighbor_list(v):
            if dist[w] is not None and dist[w] == dist[v] - 1:
                back(w, [v] + suffix)

    back(t, [])
    return paths


def brute_pair_dependencies(g: Graph) -> list[float]:
    """Ordered-pair dependency sums by full path enumeration (n <= 7)."""
    dep = [0.0] * g.n
    for s in range(g.n):
        for t in range(g.n):
            if s == t:
                continue
            paths = all_shortest_paths(g, s, t)
            if not paths:
                continue
            for v in range(g.n):
                if v in (s, t):
                    continue
                through = sum(1 for p in paths if v in p)
                dep[v] += through / len(paths)
    return dep


def brute_betweenness(g: Graph) -> list[float]:
    dep = brute_pair_dependencies(g)
    norm = (g.n - 1) * (g.n - 2)
    return [d / norm for d in dep]


def random_connected_graph(rng: random.Random, n: int, extra_p: float = 0.3) -> Graph:
    """Random tree plus independent extra edges: connected by construction."""
    if n == 1:
        return Graph(1, [])
    base = set(gen_random_tree(n, rng).edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in base and rng.random() < extra_p:
                base.add((u, v))
    return Graph(n, sorted(base))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def enumerate_valid_sequences(g: Graph, seed: int):
    """All valid single-seed sequences starting at seed (tiny graphs only)."""
    out = []

    def extend(prefix, active):
        out.append(list(prefix))
        for v in range(g.n):
            if v in active:
                continue
            if not (g.neighbors(v) & active):
                continue
            prefix.append(v)
            active.add(v)
            extend(prefix, active)
            active.discard(v)
            prefix.pop()

    extend([seed], {seed})
    return out


def brute_best_eta(g: Graph, phi, cfg: GameConfig, seed: int) -> int:
    """Maximum eta over every valid sequence from seed, scored by the game."""
    best = 0
    for gamma in enumerate_valid_sequences(g, seed):
        best = max(best, eta(g, phi, AttackSequence(gamma, 1), cfg))
    return best


def grid_search_defense_k(g: Graph, sequences, Phi: float, T: float, steps: int = 20) -> int:
    """Best worst-case safe count over the 0.05*Phi lattice of allocations."""
    cfg = GameConfig(Phi=Phi + 1e-9, T=T)
    values = [Phi * i / steps for i in range(steps + 1)]
    best = -1
    for combo in itertools.product(values, repeat=g.n):
        if sum(combo) > Phi + 1e-9:
            continue
        k = min(g.n - eta(g, list(combo), s, cfg) for s in sequences)
        if k > best:
            best = k
    return best
