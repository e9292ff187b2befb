"""Core game semantics: activation times, sequence evaluation, attacker utility.

The defender first fixes a nonnegative resource allocation phi with
sum(phi) <= Phi.  The attacker then captures nodes in an order gamma whose
first ``seeds`` entries are seeds (no active-neighbor requirement, full cost
``d(v) + phi(v)``) and whose later entries each need at least one previously
captured neighbor, costing ``(d(v) + phi(v)) / |N(v) & active|``.  Durations
are raised to the path-dependence exponent ``alpha``.  The attacker's utility
eta counts entries whose cumulative capture time is strictly below the time
limit T; the defender's utility is -eta (zero-sum).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Graph

BUDGET_SLACK = 1e-9


@dataclass(frozen=True)
class GameConfig:
    """Game parameters: budget Phi, time limit T, exponent alpha, seed count."""

    Phi: float
    T: float
    alpha: float = 1.0
    seeds_count: int = 1

    def __post_init__(self):
        if self.Phi < 0:
            raise ValueError("Phi must be nonnegative")
        if self.T <= 0:
            raise ValueError("T must be positive")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.seeds_count < 1:
            raise ValueError("seeds_count must be >= 1")


@dataclass(frozen=True)
class AttackSequence:
    """Ordered distinct node list; the first ``seeds`` entries are seeds."""

    gamma: tuple[int, ...]
    seeds: int = 1

    def __init__(self, gamma: Iterable[int], seeds: int = 1):
        object.__setattr__(self, "gamma", tuple(int(v) for v in gamma))
        object.__setattr__(self, "seeds", int(seeds))

    def __len__(self) -> int:
        return len(self.gamma)


@dataclass(frozen=True)
class AttackTrace:
    """Per-step durations and cumulative times of an evaluated sequence."""

    durations: tuple[float, ...]
    cumulative: tuple[float, ...]
    activated_count: int
    total_time: float

    def activated_prefix(self, seq: AttackSequence) -> list[int]:
        """Nodes captured strictly within the time limit."""
        return list(seq.gamma[: self.activated_count])


def check_allocation(phi: list[float], Phi: float, n: int) -> None:
    """Raise unless phi is a valid defender allocation for budget Phi."""
    if len(phi) != n:
        raise ValueError(f"allocation length {len(phi)} != n={n}")
    for v, x in enumerate(phi):
        if x < 0:
            raise ValueError(f"negative security resources at node {v}")
    if sum(phi) > Phi + BUDGET_SLACK:
        raise ValueError(f"allocation sum {sum(phi)} exceeds budget {Phi}")


def step_duration(weight: float, active_neighbors: int, alpha: float) -> float:
    base = weight / active_neighbors
    if alpha == 1.0:
        return base
    return base ** alpha


def activation_time(
    g: Graph,
    phi: list[float],
    v: int,
    active: set[int],
    is_seed: bool,
    alpha: float = 1.0,
) -> float:
    """Capture duration for v given the currently active set."""
    weight = g.degree(v) + phi[v]
    if is_seed:
        return step_duration(weight, 1, alpha)
    if v in active:
        raise ValueError(f"node {v} is already active")
    cnt = len(g.neighbors(v) & active)
    if cnt == 0:
        raise ValueError(f"node {v} has no active neighbor")
    return step_duration(weight, cnt, alpha)


def is_valid_sequence(
    g: Graph,
    gamma: Iterable[int],
    seeds_count: int = 1,
    pre_active: Iterable[int] = (),
) -> tuple[bool, Optional[int]]:
    """Check distinctness and the active-neighbor order requirement.

    The first ``seeds_count`` entries are exempt from the neighbor rule, as is
    any entry adjacent to ``pre_active`` (nodes active before the attack).
    Returns (True, None) or (False, index-of-first-violation).
    """
    gamma = list(gamma)
    active = set(pre_active)
    seen: set[int] = set()
    for i, v in enumerate(gamma):
        if not (isinstance(v, int) and 0 <= v < g.n):
            return False, i
        if v in seen or v in active:
            return False, i
        if i >= seeds_count and not (g.neighbors(v) & (seen | active)):
            return False, i
        seen.add(v)
    return True, None


def evaluate_sequence(
    g: Graph,
    phi: list[float],
    seq: AttackSequence,
    cfg: GameConfig,
    pre_active: Iterable[int] = (),
) -> AttackTrace:
    """Full trace of an attack sequence; does not stop at T.

    ``activated_count`` uses the strict rule cumulative < T.  ``pre_active``
    nodes are active at time zero but are neither timed nor counted.
    """
    pre = frozenset(pre_active)
    ok, pos = is_valid_sequence(g, seq.gamma, seq.seeds, pre)
    if not ok:
        raise ValueError(f"invalid attack sequence at position {pos}")
    alpha = cfg.alpha
    active = set(pre)
    durations: list[float] = []
    cumulative: list[float] = []
    t = 0.0
    for i, v in enumerate(seq.gamma):
        weight = g.degree(v) + phi[v]
        if i < seq.seeds:
            dur = step_duration(weight, 1, alpha)
        else:
            cnt = len(g.neighbors(v) & active)
            dur = step_duration(weight, cnt, alpha)
        t += dur
        durations.append(dur)
        cumulative.append(t)
        active.add(v)
    count = sum(1 for c in cumulative if c < cfg.T)
    return AttackTrace(tuple(durations), tuple(cumulative), count, t)


def eta(
    g: Graph,
    phi: list[float],
    seq: AttackSequence,
    cfg: GameConfig,
    pre_active: Iterable[int] = (),
) -> int:
    """Attacker utility: nodes captured strictly within T."""
    if len(seq) == 0:
        return 0
    return evaluate_sequence(g, phi, seq, cfg, pre_active).activated_count


# -- file formats -----------------------------------------------------------

def allocation_to_json(phi: list[float]) -> dict:
    return {"phi": list(phi)}


def allocation_from_json(doc: dict) -> list[float]:
    return [float(x) for x in doc["phi"]]


def save_allocation(phi: list[float], path: str) -> None:
    with open(path, "w") as fh:
        json.dump(allocation_to_json(phi), fh)
        fh.write("\n")


def load_allocation(path: str) -> list[float]:
    with open(path) as fh:
        return allocation_from_json(json.load(fh))


def sequence_to_json(seq: AttackSequence) -> dict:
    return {"gamma": list(seq.gamma), "seeds": seq.seeds}


def sequence_from_json(doc: dict) -> AttackSequence:
    return AttackSequence(doc["gamma"], int(doc.get("seeds", 1)))


def save_sequence(seq: AttackSequence, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(sequence_to_json(seq), fh)
        fh.write("\n")


def load_sequence(path: str) -> AttackSequence:
    with open(path) as fh:
        return sequence_from_json(json.load(fh))
