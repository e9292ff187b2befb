"""Optimal defense against an enumerated set of attack sequences.

The defender maximizes k, the minimum over the sequence set of the number of
nodes NOT captured within T (nodes a sequence never visits count as safe for
that sequence).  The module offers the mixed-integer model itself, a CPLEX-LP
text export for external solvers, and a built-in solver.

The built-in solver exploits that prefix capture times increase along a
sequence: "at least q positions of gamma overflow T" is equivalent to "the
prefix time through position |gamma|-q+1 reaches T", which for a fixed
integer k is a system of nonnegative covering rows in phi.  Feasibility is
monotone in k, so a binary search over k with a small LP per step finds the
optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .game import AttackSequence, GameConfig, evaluate_sequence, is_valid_sequence
from .graph import Graph

FEASIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class DefenseMILP:
    """Max-k model over continuous phi_v >= 0 and binary a_{gamma,i}.

    Rows per the formulation: phi >= 0; sum(phi) <= Phi; prefix rows
    sum_{j<=i} (d_j + phi_j)/c_j >= a_{gamma,i} * T for every sequence and
    position; and sum_i a_{gamma,i} + (n - |gamma|) >= k per sequence.
    c_{gamma,1} is pinned to 1.
    """

    n: int
    Phi: float
    T: float
    sequences: tuple[AttackSequence, ...]
    degrees: tuple[tuple[int, ...], ...]   # d(gamma_j) per sequence
    counts: tuple[tuple[int, ...], ...]    # c_{gamma,j} per sequence

    @property
    def constraint_rows(self) -> int:
        prefix = sum(len(s) for s in self.sequences)
        binaries = prefix
        return self.n + 1 + binaries + prefix + len(self.sequences)


def active_neighbor_counts(g: Graph, seq: AttackSequence) -> list[int]:
    """c_{gamma,j}: captured neighbors of gamma_j at its activation (first
    position pinned to 1)."""
    counts = []
    earlier: set[int] = set()
    for j, v in enumerate(seq.gamma):
        if j < max(seq.seeds, 1):
            counts.append(1)
        else:
            counts.append(len(g.neighbors(v) & earlier))
        earlier.add(v)
    return counts


def build_milp(
    g: Graph, sequences: list[AttackSequence], Phi: float, T: float
) -> DefenseMILP:
    if not sequences:
        raise ValueError("need at least one attack sequence")
    if Phi < 0:
        raise ValueError("Phi must be nonnegative")
    if T <= 0:
        raise ValueError("T must be positive")
    degrees = []
    counts = []
    for s, seq in enumerate(sequences):
        ok, pos = is_valid_sequence(g, seq.gamma, seq.seeds)
        if not ok:
            raise ValueError(f"sequence {s} is invalid at position {pos}")
        degrees.append(tuple(g.degree(v) for v in seq.gamma))
        counts.append(tuple(active_neighbor_counts(g, seq)))
    return DefenseMILP(
        n=g.n,
        Phi=float(Phi),
        T=float(T),
        sequences=tuple(sequences),
        degrees=tuple(degrees),
        counts=tuple(counts),
    )


def _num(x: float) -> str:
    return f"{x:.12g}"


def export_lp(model: DefenseMILP) -> str:
    """CPLEX-LP text of the model, round-trippable by common solvers."""
    lines = ["\\ security diffusion defense model", "Maximize", " obj: k", "Subject To"]
    terms = " + ".join(f"phi_{v}" for v in range(model.n))
    lines.append(f" budget: {terms} <= {_num(model.Phi)}")
    for s, seq in enumerate(model.sequences):
        for i in range(1, len(seq) + 1):
            coeff: dict[int, float] = {}
            const = 0.0
            for j in range(i):
                c = model.counts[s][j]
                coeff[seq.gamma[j]] = 1.0 / c
                const += model.degrees[s][j] / c
            parts = [f"{_num(coeff[v])} phi_{v}" for v in sorted(coeff)]
            parts.append(f"- {_num(model.T)} a_{s}_{i}")
            lines.append(f" t_{s}_{i}: " + " + ".join(parts[:-1]) + f" {parts[-1]} >= {_num(-const)}")
    for s, seq in enumerate(model.sequences):
        terms = " + ".join(f"a_{s}_{i}" for i in range(1, len(seq) + 1))
        rhs = len(seq) - model.n  # visited positions must leave >= k of n safe
        lines.append(f" cover_{s}: {terms} - k >= {_num(rhs)}")
    lines.append("Bounds")
    lines.append(f" 0 <= k <= {_num(model.n)}")
    lines.append("Binaries")
    for s, seq in enumerate(model.sequences):
        for i in range(1, len(seq) + 1):
            lines.append(f" a_{s}_{i}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def _covering_rows(model: DefenseMILP, k: int):
    """Covering rows for fixed k: one prefix row per sequence that still
    needs q = k - (n - |gamma|) positions priced out."""
    rows = []
    for s, seq in enumerate(model.sequences):
        q = k - (model.n - len(seq))
        if q <= 0:
            continue
        m = len(seq) - q + 1  # 1 <= m <= |gamma| whenever k <= n
        coeff = np.zeros(model.n)
        const = 0.0
        for j in range(m):
            c = model.counts[s][j]
            coeff[seq.gamma[j]] += 1.0 / c
            const += model.degrees[s][j] / c
        rows.append((coeff, model.T - const))
    return rows


def _feasible_allocation(model: DefenseMILP, k: int):
    """Cheapest phi meeting every covering row, or None above budget."""
    rows = [(c, r) for c, r in _covering_rows(model, k) if r > 0]
    if not rows:
        return [0.0] * model.n
    A = np.array([c for c, _ in rows])
    b = np.array([r for _, r in rows])
    res = linprog(
        c=np.ones(model.n),
        A_ub=-A,
        b_ub=-b,
        bounds=[(0, None)] * model.n,
        method="highs",
    )
    if not res.success:
        return None
    if res.fun > model.Phi * (1 + FEASIBILITY_TOL) + FEASIBILITY_TOL:
        return None
    return [max(0.0, float(x)) for x in res.x]


def solve_defense(
    g: Graph, sequences: list[AttackSequence], Phi: float, T: float
) -> tuple[list[float], int]:
    """Allocation maximizing the worst-case count of nodes kept safe.

    Binary-searches k (feasibility is monotone), solves the covering LP at
    the optimum, then scales the allocation up to spend the full budget --
    extra resources can only keep more nodes safe -- and verifies the claimed
    k by direct game evaluation of every sequence.
    """
    model = build_milp(g, sequences, Phi, T)
    lo, hi = 0, g.n
    phi_best = [0.0] * g.n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        phi = _feasible_allocation(model, mid)
        if phi is None:
            hi = mid - 1
        else:
            lo = mid
            phi_best = phi
    total = sum(phi_best)
    if 0 < total < Phi:
        phi_best = [x * (Phi / total) for x in phi_best]
    _verify_solution(g, sequences, phi_best, Phi, T, lo)
    return phi_best, lo


def _verify_solution(g, sequences, phi, Phi, T, k) -> None:
    cfg = GameConfig(Phi=max(Phi, sum(phi)), T=T, alpha=1.0)
    for seq in sequences:
        trace = evaluate_sequence(g, phi, seq, cfg)
        overflowed = False
        for c in trace.cumulative:  # suffix property backs the reformulation
            if overflowed and c < T:
                raise AssertionError("prefix times are not a suffix beyond T")
            overflowed = overflowed or c >= T
        inactive = g.n - trace.activated_count
        if inactive < k:
            raise AssertionError(
                f"solver claimed k={k} but a sequence leaves only "
                f"{inactive} nodes safe"
            )


def optimal_defense_star(n: int, Phi: float, T: float, center: int = 0) -> list[float]:
    """Closed-form star defense.

    If the budget can level every node's capture time and that time reaches
    T, level all; else if leveling the leaves alone reaches T, spend on the
    leaves; otherwise stack everything on the center.
    """
    if n < 2:
        raise ValueError("star defense needs n >= 2")
    if Phi < 0:
        raise ValueError("Phi must be nonnegative")
    if not (0 <= center < n):
        raise ValueError("center index out of range")
    phi = [0.0] * n
    leaves = [v for v in range(n) if v != center]
    if Phi >= (n - 1) * (n - 2) and T <= (Phi + 2 * (n - 1)) / n:
        phi[center] = (Phi - (n - 1) * (n - 2)) / n
        for v in leaves:
            phi[v] = (Phi + n - 2) / n
    elif T <= (Phi + n - 1) / (n - 1):
        for v in leaves:
            phi[v] = Phi / (n - 1)
    else:
        phi[center] = Phi
    return phi


def optimal_defense_clique(n: int, Phi: float) -> list[float]:
    """Closed-form clique defense: spread the budget uniformly."""
    if n < 1:
        raise ValueError("need n >= 1")
    if Phi < 0:
        raise ValueError("Phi must be nonnegative")
    return [Phi / n] * n
