"""Attacker heuristic strategies and seed selection.

All strategies pick the next target from the frontier (inactive nodes with at
least one captured neighbor).  Ties are broken uniformly at random through the
caller's rng, so a fixed seed replays the exact same attack.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .game import AttackSequence, AttackTrace, GameConfig, step_duration
from .graph import Graph

ATTACK_KINDS = ("greedy", "majority", "mixed", "eps_decreasing", "eps_first")


@dataclass(frozen=True)
class AttackStrategy:
    kind: str
    p: float = 1.0        # mixed: probability of a greedy step
    epsilon: float = 0.0  # eps_first: explore while t <= epsilon * T

    def __post_init__(self):
        if self.kind not in ATTACK_KINDS:
            raise ValueError(f"unknown attack strategy {self.kind!r}")
        if not (0.0 <= self.p <= 1.0):
            raise ValueError("p must be in [0,1]")
        if not (0.0 <= self.epsilon <= 1.0):
            raise ValueError("epsilon must be in [0,1]")

    @property
    def label(self) -> str:
        if self.kind == "mixed":
            return f"mixed({self.p:g})"
        if self.kind == "eps_first":
            return f"eps_first({self.epsilon:g})"
        return self.kind


def greedy() -> AttackStrategy:
    return AttackStrategy("greedy")


def majority() -> AttackStrategy:
    return AttackStrategy("majority")


def mixed(p: float) -> AttackStrategy:
    return AttackStrategy("mixed", p=p)


def eps_decreasing() -> AttackStrategy:
    return AttackStrategy("eps_decreasing")


def eps_first(epsilon: float) -> AttackStrategy:
    return AttackStrategy("eps_first", epsilon=epsilon)


def _pick_min(candidates: list[int], key: list[float], rng: random.Random) -> int:
    best = min(key[i] for i in range(len(candidates)))
    ties = [c for i, c in enumerate(candidates) if key[i] == best]
    return ties[0] if len(ties) == 1 else ties[rng.randrange(len(ties))]


def greedy_next(
    g: Graph,
    phi: list[float],
    active: set[int],
    alpha: float,
    rng: random.Random,
) -> Optional[int]:
    """Frontier node with the lowest activation time, ties uniform."""
    candidates = []
    times = []
    for v in range(g.n):
        if v in active:
            continue
        cnt = len(g.neighbors(v) & active)
        if cnt == 0:
            continue
        candidates.append(v)
        # argmin of the base ratio equals argmin after the alpha power
        times.append((g.degree(v) + phi[v]) / cnt)
    if not candidates:
        return None
    return _pick_min(candidates, times, rng)


def majority_next(
    g: Graph,
    phi: list[float],
    active: set[int],
    alpha: float,
    rng: random.Random,
) -> Optional[int]:
    """Frontier node with the most captured neighbors, ties uniform."""
    candidates = []
    neg_counts = []
    for v in range(g.n):
        if v in active:
            continue
        cnt = len(g.neighbors(v) & active)
        if cnt == 0:
            continue
        candidates.append(v)
        neg_counts.append(-float(cnt))
    if not candidates:
        return None
    return _pick_min(candidates, neg_counts, rng)


def _greedy_step(frontier, counts, weights, rng) -> int:
    best = None
    ties = []
    for v in frontier:
        t = weights[v] / counts[v]
        if best is None or t < best:
            best = t
            ties = [v]
        elif t == best:
            ties.append(v)
    ties.sort()
    return ties[0] if len(ties) == 1 else ties[rng.randrange(len(ties))]


def _majority_step(frontier, counts, rng) -> int:
    best = -1
    ties = []
    for v in frontier:
        c = counts[v]
        if c > best:
            best = c
            ties = [v]
        elif c == best:
            ties.append(v)
    ties.sort()
    return ties[0] if len(ties) == 1 else ties[rng.randrange(len(ties))]


def run_attack(
    g: Graph,
    phi: list[float],
    cfg: GameConfig,
    strat: AttackStrategy,
    seeds: list[int],
    rng: random.Random,
) -> tuple[AttackSequence, AttackTrace]:
    """Play one full attack: activate the seeds, then follow the strategy.

    The strategy rule is re-evaluated before every pick at the current elapsed
    time t (cumulative activation time).  The process runs until the frontier
    empties; eta simply stops counting at T.
    """
    n = g.n
    if not seeds:
        raise ValueError("need at least one seed")
    if len(set(seeds)) != len(seeds):
        raise ValueError("seeds must be distinct")
    for s in seeds:
        g._check_node(s)
    alpha = cfg.alpha
    weights = [g.degree(v) + phi[v] for v in range(n)]
    active = [False] * n
    counts = [0] * n
    frontier: set[int] = set()
    order: list[int] = []
    durations: list[float] = []
    t = 0.0

    def activate(v: int) -> None:
        active[v] = True
        frontier.discard(v)
        for w in g.neighbor_list(v):
            counts[w] += 1
            if not active[w]:
                frontier.add(w)

    for s in seeds:
        dur = step_duration(weights[s], 1, alpha)
        t += dur
        order.append(s)
        durations.append(dur)
        activate(s)

    while frontier:
        kind = strat.kind
        if kind == "mixed":
            if strat.p >= 1.0:
                kind = "greedy"
            elif strat.p <= 0.0:
                kind = "majority"
            else:
                kind = "greedy" if rng.random() < strat.p else "majority"
        elif kind == "eps_decreasing":
            p = min(t / cfg.T, 1.0)
            kind = "greedy" if rng.random() < p else "majority"
        elif kind == "eps_first":
            kind = "majority" if t <= strat.epsilon * cfg.T else "greedy"
        if kind == "greedy":
            v = _greedy_step(frontier, counts, weights, rng)
        else:
            v = _majority_step(frontier, counts, rng)
        dur = step_duration(weights[v], counts[v], alpha)
        t += dur
        order.append(v)
        durations.append(dur)
        activate(v)

    cumulative = []
    acc = 0.0
    for d in durations:
        acc += d
        cumulative.append(acc)
    count = sum(1 for c in cumulative if c < cfg.T)
    seq = AttackSequence(order, seeds=len(seeds))
    trace = AttackTrace(tuple(durations), tuple(cumulative), count, acc)
    return seq, trace


def _best_extension(
    g: Graph,
    phi: list[float],
    cfg: GameConfig,
    strat: AttackStrategy,
    base_seeds: list[int],
    rng: random.Random,
) -> tuple[int, AttackSequence, AttackTrace]:
    """Candidate seed maximizing eta when appended to base_seeds.

    Every candidate gets a fresh derived rng stream; ties are broken uniformly
    with the caller's rng.  Returns the winner together with its run.
    """
    taken = set(base_seeds)
    results = []
    for v in range(g.n):
        if v in taken:
            continue
        sub = random.Random(rng.getrandbits(64))
        seq, trace = run_attack(g, phi, cfg, strat, base_seeds + [v], sub)
        results.append((trace.activated_count, v, seq, trace))
    if not results:
        raise ValueError("no seed candidates left")
    best_eta = max(r[0] for r in results)
    winners = [r for r in results if r[0] == best_eta]
    pick = winners[0] if len(winners) == 1 else winners[rng.randrange(len(winners))]
    return pick[1], pick[2], pick[3]


def best_seed(
    g: Graph,
    phi: list[float],
    cfg: GameConfig,
    strat: AttackStrategy,
    rng: random.Random,
) -> int:
    """Seed achieving the highest eta, evaluated by running every candidate."""
    v, _, _ = _best_extension(g, phi, cfg, strat, [], rng)
    return v


def select_multi_seeds(
    g: Graph,
    phi: list[float],
    cfg: GameConfig,
    strat: AttackStrategy,
    k: int,
    rng: random.Random,
) -> list[int]:
    """Greedily extend the seed prefix one node at a time, maximizing eta."""
    seeds, _, _ = run_multi_seed_attack(g, phi, cfg, strat, k, rng)
    return seeds


def run_multi_seed_attack(
    g: Graph,
    phi: list[float],
    cfg: GameConfig,
    strat: AttackStrategy,
    k: int,
    rng: random.Random,
) -> tuple[list[int], AttackSequence, AttackTrace]:
    """Seed selection plus the winning run for the final seed set."""
    if not (1 <= k <= g.n):
        raise ValueError(f"seeds_count must be in [1,{g.n}]")
    seeds: list[int] = []
    seq = trace = None
    for _ in range(k):
        v, seq, trace = _best_extension(g, phi, cfg, strat, seeds, rng)
        seeds.append(v)
    assert seq is not None and trace is not None
    return seeds, seq, trace
