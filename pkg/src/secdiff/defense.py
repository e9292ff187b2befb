"""Defender heuristic allocations.

Five allocation families: equality (level the capture time of low-degree
nodes), uniform, random, and high/low centrality weighting for any of the six
supported centrality measures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .centrality import MEASURES
from .game import check_allocation
from .graph import Graph

DEFENSE_KINDS = ("equality", "uniform", "random", "high_centrality", "low_centrality")

# Scores are shifted by their mean before inversion.  The shift keeps zero
# scores (e.g. betweenness in a clique) finite without dumping the whole
# budget on the argmin set, is invariant to rescaling the measure, and
# preserves the low-before-high ordering of the weights.

# provider(graph, measure) -> per-node scores
CentralityProvider = Callable[[Graph, str], list[float]]


@dataclass(frozen=True)
class DefenseStrategy:
    kind: str
    measure: Optional[str] = None

    def __post_init__(self):
        if self.kind not in DEFENSE_KINDS:
            raise ValueError(f"unknown defense strategy {self.kind!r}")
        if self.kind in ("high_centrality", "low_centrality"):
            if self.measure not in MEASURES:
                raise ValueError(f"unknown centrality measure {self.measure!r}")
        elif self.measure is not None:
            raise ValueError(f"{self.kind} takes no centrality measure")

    @property
    def label(self) -> str:
        if self.kind == "high_centrality":
            return f"high_{self.measure}"
        if self.kind == "low_centrality":
            return f"low_{self.measure}"
        return self.kind


def parse_defense(label: str) -> DefenseStrategy:
    """Parse labels like "uniform", "high_degree" or "low_sv_closeness"."""
    if label in ("equality", "uniform", "random"):
        return DefenseStrategy(label)
    for prefix, kind in (("high_", "high_centrality"), ("low_", "low_centrality")):
        if label.startswith(prefix):
            return DefenseStrategy(kind, measure=label[len(prefix):])
    raise ValueError(f"unknown defense strategy {label!r}")


def smoothing_offset(scores: list[float]) -> float:
    """Offset added to scores before inversion in low-centrality weighting."""
    mean = sum(scores) / len(scores)
    return mean if mean > 0 else 1.0


def equality_threshold(degrees: list[int], Phi: float) -> float:
    """The maximal s with sum(max(0, s - d_i)) <= Phi.

    For Phi > 0 this is the unique s where the piecewise-linear sum equals
    Phi; for Phi = 0 it is the minimum degree.
    """
    if Phi < 0:
        raise ValueError("Phi must be nonnegative")
    if not degrees:
        raise ValueError("need at least one degree")
    ds = sorted(degrees)
    if Phi == 0:
        return float(ds[0])
    n = len(ds)
    prefix = [0.0]
    for d in ds:
        prefix.append(prefix[-1] + d)
    for k in range(1, n + 1):
        s = (Phi + prefix[k]) / k
        upper = ds[k] if k < n else float("inf")
        if ds[k - 1] <= s <= upper:
            return s
    raise AssertionError("breakpoint walk failed")  # unreachable


def allocate(
    g: Graph,
    Phi: float,
    strat: DefenseStrategy,
    rng: Optional[random.Random] = None,
    provider: Optional[CentralityProvider] = None,
) -> list[float]:
    """Allocation for the given strategy; always satisfies phi >= 0 and
    sum(phi) <= Phi (exactly Phi for all but the equality strategy)."""
    if Phi < 0:
        raise ValueError("Phi must be nonnegative")
    n = g.n
    if strat.kind == "uniform":
        phi = [Phi / n] * n
    elif strat.kind == "equality":
        degs = g.degrees()
        s_star = equality_threshold(degs, Phi)
        phi = [max(0.0, s_star - d) for d in degs]
    elif strat.kind == "random":
        if rng is None:
            raise ValueError("random defense needs an rng")
        r = [rng.random() for _ in range(n)]
        total = sum(r)
        phi = [x / total * Phi for x in r]
    else:
        if provider is None:
            raise ValueError("centrality defense needs a centrality provider")
        scores = list(provider(g, strat.measure))
        if len(scores) != n:
            raise ValueError("centrality provider returned wrong length")
        low = min(scores)
        if low < 0:
            # Shapley-betweenness scores can dip below zero; shift so the
            # weighting stays a valid allocation
            scores = [c - low for c in scores]
        if strat.kind == "high_centrality":
            total = sum(scores)
            if total <= 0:
                raise ValueError(
                    f"all {strat.measure} scores are zero; high-centrality "
                    "weighting is undefined"
                )
            phi = [c / total * Phi for c in scores]
        else:
            eps = smoothing_offset(scores)
            inv = [1.0 / (c + eps) for c in scores]
            total = sum(inv)
            phi = [x / total * Phi for x in inv]
    check_allocation(phi, Phi, n)
    return phi
