"""Classical and Shapley-value centrality measures.

Three coalition games back the game-theoretic measures: coverage by closed
neighborhoods (sv_degree), coverage by distance-delta balls (sv_closeness),
and the fraction of shortest paths between outside pairs that a coalition
touches (sv_betweenness).  Shapley values are computed exactly by subset
enumeration for small graphs and by permutation sampling otherwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, all_pairs_distances, bfs_distances, pair_dependencies

MEASURES = (
    "degree",
    "closeness",
    "betweenness",
    "sv_degree",
    "sv_closeness",
    "sv_betweenness",
)

DEFAULT_DELTA = 3
DEFAULT_MC_SAMPLES = 20_000
DEFAULT_EXACT_BOUND = 20
CACHE_LIMIT = 24  # cache coalition values only when the mask space is small


@dataclass(frozen=True)
class CentralityScores:
    measure: str
    scores: tuple[float, ...]
    delta: Optional[int] = None
    samples: Optional[int] = None
    stderr: Optional[tuple[float, ...]] = None
    sums: Optional[tuple[float, ...]] = None  # raw Monte Carlo marginal totals


# -- classical measures -----------------------------------------------------

def degree_centrality(g: Graph) -> CentralityScores:
    if g.n < 2:
        raise ValueError("degree centrality needs n >= 2")
    denom = g.n - 1
    return CentralityScores("degree", tuple(d / denom for d in g.degrees()))


def closeness_centrality(g: Graph) -> CentralityScores:
    scores = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if any(d is None for d in dist):
            raise ValueError(
                "closeness centrality needs a connected graph; "
                "extract the giant component first"
            )
        scores.append((g.n - 1) / sum(dist))  # type: ignore[arg-type]
    return CentralityScores("closeness", tuple(scores))


def betweenness_centrality(g: Graph) -> CentralityScores:
    if g.n < 3:
        raise ValueError("betweenness centrality needs n >= 3")
    if any(d is None for d in bfs_distances(g, 0)):
        raise ValueError("betweenness centrality needs a connected graph")
    dep = pair_dependencies(g)
    norm = (g.n - 1) * (g.n - 2)  # ordered-pair dependencies / ((n-1)(n-2))
    return CentralityScores("betweenness", tuple(d / norm for d in dep))


# -- coalition games --------------------------------------------------------

class CoalitionGame:
    """Characteristic function u over node coalitions of a fixed graph."""

    tag = "abstract"

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.n
        self._cache: Optional[dict[int, float]] = {} if g.n <= CACHE_LIMIT else None

    def value(self, coalition: Iterable[int]) -> float:
        mask = 0
        for v in coalition:
            self.graph._check_node(v)
            mask |= 1 << v
        return self.value_mask(mask)

    def value_mask(self, mask: int) -> float:
        if self._cache is not None:
            hit = self._cache.get(mask)
            if hit is not None:
                return hit
        val = self._evaluate(mask)
        if self._cache is not None:
            self._cache[mask] = val
        return val

    def grand_value(self) -> float:
        return self.value_mask((1 << self.n) - 1)

    def _evaluate(self, mask: int) -> float:
        raise NotImplementedError

    def prefix_marginals(self, order: list[int]) -> list[float]:
        """Marginal contributions along one permutation (incremental walk)."""
        out = []
        mask = 0
        prev = self.value_mask(0)
        for v in order:
            mask |= 1 << v
            cur = self.value_mask(mask)
            out.append(cur - prev)
            prev = cur
        return out


class CoverageGame(CoalitionGame):
    """u(C) = size of the union of per-node coverage masks over C."""

    def __init__(self, g: Graph, cover_masks: list[int], tag: str):
        super().__init__(g)
        self.cover_masks = cover_masks
        self.tag = tag

    def _evaluate(self, mask: int) -> float:
        covered = 0
        rest = mask
        while rest:
            low = rest & -rest
            covered |= self.cover_masks[low.bit_length() - 1]
            rest ^= low
        return float(covered.bit_count())

    def prefix_marginals(self, order: list[int]) -> list[float]:
        out = []
        covered = 0
        prev = 0
        for v in order:
            covered |= self.cover_masks[v]
            cur = covered.bit_count()
            out.append(float(cur - prev))
            prev = cur
        return out


class PathCoverageGame(CoalitionGame):
    """u(C) = sum over ordered pairs (s,t) outside C of the fraction of
    shortest s-t paths that contain a member of C."""

    tag = "sv_betweenness"

    def __init__(self, g: Graph):
        super().__init__(g)
        self._dist = all_pairs_distances(g)
        self._sigma = [self._count_paths(s, blocked=0)[1] for s in range(g.n)]

    def _count_paths(self, s: int, blocked: int):
        """BFS distances and shortest-path counts avoiding ``blocked`` nodes."""
        n = self.n
        dist = [-1] * n
        sigma = [0] * n
        if blocked >> s & 1:
            return dist, sigma
        dist[s] = 0
        sigma[s] = 1
        queue = [s]
        head = 0
        lists = self.graph._adj_lists
        while head < len(queue):
            v = queue[head]
            head += 1
            dv1 = dist[v] + 1
            for w in lists[v]:
                if blocked >> w & 1:
                    continue
                if dist[w] < 0:
                    dist[w] = dv1
                    queue.append(w)
                if dist[w] == dv1:
                    sigma[w] += sigma[v]
        return dist, sigma

    def _evaluate(self, mask: int) -> float:
        if mask == 0:
            return 0.0
        total = 0.0
        for s in range(self.n):
            if mask >> s & 1:
                continue
            dist_s = self._dist[s]
            sigma_s = self._sigma[s]
            dist_c, sigma_c = self._count_paths(s, blocked=mask)
            for t in range(self.n):
                if t == s or mask >> t & 1:
                    continue
                if dist_s[t] is None:
                    continue  # no s-t path at all
                if dist_c[t] == dist_s[t]:
                    total += 1.0 - sigma_c[t] / sigma_s[t]
                else:
                    total += 1.0  # every shortest path meets the coalition
        return total


def sv_degree_game(g: Graph) -> CoverageGame:
    masks = [m | (1 << v) for v, m in enumerate(g.adjacency_masks)]
    return CoverageGame(g, masks, "sv_degree")


def sv_closeness_game(g: Graph, delta: int = DEFAULT_DELTA) -> CoverageGame:
    dist = all_pairs_distances(g)
    masks = []
    for v in range(g.n):
        m = 0
        for u in range(g.n):
            d = dist[v][u]
            if d is not None and d <= delta:
                m |= 1 << u
        masks.append(m)
    game = CoverageGame(g, masks, "sv_closeness")
    game.delta = delta
    return game


def sv_betweenness_game(g: Graph) -> PathCoverageGame:
    return PathCoverageGame(g)


def make_game(g: Graph, tag: str, delta: int = DEFAULT_DELTA) -> CoalitionGame:
    if tag == "sv_degree":
        return sv_degree_game(g)
    if tag == "sv_closeness":
        return sv_closeness_game(g, delta)
    if tag == "sv_betweenness":
        return sv_betweenness_game(g)
    raise ValueError(f"unknown coalition game {tag!r}")


def characteristic_value(game: CoalitionGame, coalition: Iterable[int]) -> float:
    return game.value(coalition)


# -- Shapley values ---------------------------------------------------------

def shapley_exact(game: CoalitionGame, v: int, max_n: int = DEFAULT_EXACT_BOUND) -> float:
    """Shapley value of v by direct enumeration of coalitions without v."""
    n = game.n
    if n > max_n:
        raise ValueError(
            f"exact Shapley enumeration is limited to n <= {max_n}; "
            "use shapley_mc for larger graphs"
        )
    game.graph._check_node(v)
    fact = [math.factorial(i) for i in range(n + 1)]
    weights = [fact[c] * fact[n - c - 1] / fact[n] for c in range(n)]
    others = [u for u in range(n) if u != v]
    bit_v = 1 << v
    total = 0.0
    for sub in range(1 << (n - 1)):
        mask = 0
        rest = sub
        while rest:
            low = rest & -rest
            mask |= 1 << others[low.bit_length() - 1]
            rest ^= low
        size = mask.bit_count()
        total += weights[size] * (game.value_mask(mask | bit_v) - game.value_mask(mask))
    return total


def shapley_exact_all(game: CoalitionGame, max_n: int = DEFAULT_EXACT_BOUND) -> CentralityScores:
    scores = tuple(shapley_exact(game, v, max_n) for v in range(game.n))
    return CentralityScores(game.tag, scores, delta=getattr(game, "delta", None))


def shapley_mc(game: CoalitionGame, samples: int, rng: random.Random) -> CentralityScores:
    """Permutation-sampling Shapley estimate.

    Each sampled permutation contributes one marginal to every node, so the
    per-permutation marginals telescope to u(V) and the estimates inherit
    that efficiency property batch by batch.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    n = game.n
    sums = [0.0] * n
    sumsq = [0.0] * n
    order = list(range(n))
    for _ in range(samples):
        rng.shuffle(order)
        marginals = game.prefix_marginals(order)
        for v, m in zip(order, marginals):
            sums[v] += m
            sumsq[v] += m * m
    scores = tuple(s / samples for s in sums)
    if samples > 1:
        stderr = tuple(
            math.sqrt(max(sq - s * s / samples, 0.0) / (samples - 1) / samples)
            for s, sq in zip(sums, sumsq)
        )
    else:
        stderr = tuple(0.0 for _ in range(n))
    return CentralityScores(
        game.tag,
        scores,
        delta=getattr(game, "delta", None),
        samples=samples,
        stderr=stderr,
        sums=tuple(sums),
    )


def sv_degree_closed_form(g: Graph) -> list[float]:
    """Independent cross-check for the closed-neighborhood coverage game:
    the Shapley value of v equals sum of 1/(1+d(u)) over u in N(v) and v."""
    degs = g.degrees()
    return [
        sum(1.0 / (1 + degs[u]) for u in (*g.neighbor_list(v), v))
        for v in range(g.n)
    ]


# -- one-stop computation ---------------------------------------------------

def compute_centrality(
    g: Graph,
    measure: str,
    delta: int = DEFAULT_DELTA,
    rng: Optional[random.Random] = None,
    samples: int = DEFAULT_MC_SAMPLES,
    exact_bound: int = 12,
) -> CentralityScores:
    """Compute any supported measure; Shapley measures switch from exact
    enumeration to Monte Carlo above ``exact_bound`` nodes."""
    if measure == "degree":
        return degree_centrality(g)
    if measure == "closeness":
        return closeness_centrality(g)
    if measure == "betweenness":
        return betweenness_centrality(g)
    if measure not in MEASURES:
        raise ValueError(f"unknown centrality measure {measure!r}")
    game = make_game(g, measure, delta)
    if g.n <= exact_bound:
        return shapley_exact_all(game, max_n=max(exact_bound, DEFAULT_EXACT_BOUND))
    if rng is None:
        raise ValueError(f"{measure} on n={g.n} needs Monte Carlo; pass an rng")
    return shapley_mc(game, samples, rng)
