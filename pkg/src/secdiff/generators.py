"""Random graph generators with deterministic seeding.

Each generator is a pure function of its parameters and an explicit
``random.Random`` stream, so callers own reproducibility (derive one stream
per task from a master seed).
"""

from __future__ import annotations

import heapq
import random

from .graph import Graph, giant_component, is_connected


class GenerationError(RuntimeError):
    """Raised when a stochastic generator exhausts its retry budget."""


def gen_barabasi_albert(n: int, d: int, rng: random.Random) -> Graph:
    """Preferential attachment starting from a d-clique.

    Each of the n-d later nodes attaches to d distinct existing nodes sampled
    proportionally to current degree (snapshot taken before its own edges).
    """
    if d < 1:
        raise ValueError("attachment count d must be >= 1")
    if n <= d:
        raise ValueError(f"need n > d, got n={n}, d={d}")
    edges = [(u, v) for u in range(d) for v in range(u + 1, d)]
    # one entry per unit of degree; empty only for d=1 before the first edge
    repeated: list[int] = []
    for u, v in edges:
        repeated.append(u)
        repeated.append(v)
    for new in range(d, n):
        targets: set[int] = set()
        while len(targets) < d:
            if repeated:
                targets.add(repeated[rng.randrange(len(repeated))])
            else:
                targets.add(rng.randrange(new))
        for t in sorted(targets):
            edges.append((t, new))
            repeated.append(t)
            repeated.append(new)
    return Graph(n, edges)


def sample_power_law_degrees(
    n: int, d_min: int, d_max: int, exponent: float, rng: random.Random
) -> list[int]:
    """I.i.d. degrees with p(d) proportional to d**(-exponent) on [d_min, d_max]."""
    if not (1 <= d_min <= d_max):
        raise ValueError("need 1 <= d_min <= d_max")
    if exponent <= 0:
        raise ValueError("exponent must be positive")
    support = list(range(d_min, d_max + 1))
    weights = [d ** (-exponent) for d in support]
    total = sum(weights)
    cumulative = []
    acc = 0.0
    for w in weights:
        acc += w
        cumulative.append(acc / total)
    degrees = []
    for _ in range(n):
        u = rng.random()
        lo = 0
        while cumulative[lo] < u:
            lo += 1
        degrees.append(support[lo])
    return degrees


def power_law_mean_degree(d_min: int, d_max: int, exponent: float) -> float:
    """Analytic mean of the truncated power-law degree distribution."""
    num = sum(d * d ** (-exponent) for d in range(d_min, d_max + 1))
    den = sum(d ** (-exponent) for d in range(d_min, d_max + 1))
    return num / den


def gen_scale_free_config(
    n: int,
    d_min: int,
    d_max: int,
    exponent: float,
    rng: random.Random,
    max_matching_tries: int = 100,
) -> Graph:
    """Configuration-model graph from a truncated power-law degree sequence.

    The last degree is decremented if the stub total is odd.  Whole stub
    matchings with a self-loop or multi-edge are rejected and redrawn; the
    giant component of the accepted matching is returned.
    """
    if d_max >= n:
        raise ValueError("need d_max < n")
    degrees = sample_power_law_degrees(n, d_min, d_max, exponent, rng)
    if sum(degrees) % 2 == 1:
        degrees[-1] -= 1
    stubs = [v for v in range(n) for _ in range(degrees[v])]
    for _ in range(max_matching_tries):
        rng.shuffle(stubs)
        seen = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if ok:
            g = Graph(n, list(seen))
            giant, _ = giant_component(g)
            return giant
    raise GenerationError(
        f"no simple stub matching found in {max_matching_tries} tries"
    )


def gen_erdos_renyi(
    n: int, avg_degree: float, rng: random.Random, max_tries: int = 1000
) -> Graph:
    """G(n, p) with p = avg_degree/(n-1), regenerated until connected."""
    if not (0 < avg_degree < n):
        raise ValueError("need 0 < avg_degree < n")
    if n == 1:
        return Graph(1, [])
    p = min(avg_degree / (n - 1), 1.0)
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise GenerationError(f"no connected G(n,p) draw in {max_tries} tries")


def gen_watts_strogatz(
    n: int, avg_degree: int, p_rewire: float, rng: random.Random
) -> Graph:
    """Ring lattice (avg_degree/2 neighbors per side) with random rewiring.

    Each lattice edge keeps its first endpoint and is rewired with probability
    p_rewire to a uniformly random non-duplicate, non-self target.  The edge
    count n*avg_degree/2 is preserved.
    """
    if avg_degree % 2 != 0:
        raise ValueError("avg_degree must be even")
    if not (0 < avg_degree < n):
        raise ValueError("need 0 < avg_degree < n")
    if not (0.0 <= p_rewire <= 1.0):
        raise ValueError("p_rewire must be in [0,1]")
    adj: list[set[int]] = [set() for _ in range(n)]
    half = avg_degree // 2
    lattice = [(u, (u + j) % n) for j in range(1, half + 1) for u in range(n)]
    for u, v in lattice:
        adj[u].add(v)
        adj[v].add(u)
    for u, v in lattice:
        if rng.random() >= p_rewire:
            continue
        if len(adj[u]) >= n - 1:
            continue  # u already adjacent to everyone else
        candidates = [w for w in range(n) if w != u and w not in adj[u]]
        w = candidates[rng.randrange(len(candidates))]
        adj[u].discard(v)
        adj[v].discard(u)
        adj[u].add(w)
        adj[w].add(u)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return Graph(n, edges)


def prufer_decode(sequence: list[int], n: int) -> Graph:
    """Decode a length n-2 sequence into its labeled tree."""
    if n < 2:
        raise ValueError("trees need n >= 2")
    if len(sequence) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}")
    degree = [1] * n
    for s in sequence:
        if not (0 <= s < n):
            raise ValueError(f"sequence entry {s} out of range")
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def gen_random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree via a uniform Prufer sequence."""
    if n < 2:
        raise ValueError("trees need n >= 2")
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return prufer_decode(sequence, n)


GENERATORS = {
    "ba": gen_barabasi_albert,
    "sf": gen_scale_free_config,
    "er": gen_erdos_renyi,
    "ws": gen_watts_strogatz,
    "tree": gen_random_tree,
}
