"""Experiment orchestration: strategy matrices, best responses, repeated games.

Every random draw flows through streams derived from (master seed, purpose
tags), so results are byte-identical across reruns and worker counts, and
adding a strategy to a spec does not perturb the cells that were already
there.  Runs are independent work items; aggregation is order-free.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

from . import __version__
from .attack import AttackStrategy, run_multi_seed_attack
from .centrality import DEFAULT_DELTA, DEFAULT_MC_SAMPLES, compute_centrality
from .defense import DefenseStrategy, allocate, parse_defense
from .game import GameConfig
from .generators import (
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_random_tree,
    gen_scale_free_config,
    gen_watts_strogatz,
)
from .graph import Graph, load_graph
from .optattack import DP_LIMIT, optimal_attack_any_seed

WORKERS_ENV = "SECDIFF_WORKERS"
REPEATED_OPTIMAL_BOUND = 20


def derive_rng(master_seed: int, *tags) -> random.Random:
    """Independent stream for (master seed, tags); stable across platforms."""
    payload = repr((master_seed,) + tags).encode()
    digest = hashlib.blake2b(payload, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def parse_attacker(label: str) -> Optional[AttackStrategy]:
    """Parse "greedy", "mixed(0.4)", "eps_first(0.2)", ...; None = optimal."""
    label = label.strip()
    if label == "optimal":
        return None
    if "(" in label and label.endswith(")"):
        name, arg = label[:-1].split("(", 1)
        value = float(arg)
        if name == "mixed":
            return AttackStrategy("mixed", p=value)
        if name == "eps_first":
            return AttackStrategy("eps_first", epsilon=value)
        raise ValueError(f"unknown attacker strategy {label!r}")
    return AttackStrategy(label)


def default_attacker_grid() -> list[str]:
    grid = ["greedy", "majority", "eps_decreasing"]
    grid += [f"mixed({p})" for p in (0.2, 0.4, 0.6, 0.8)]
    grid += [f"eps_first({e})" for e in (0.2, 0.5, 0.8)]
    return grid


def default_defender_list() -> list[str]:
    out = ["equality", "uniform", "random"]
    for measure in ("degree", "closeness", "betweenness",
                    "sv_degree", "sv_closeness", "sv_betweenness"):
        out.append(f"high_{measure}")
        out.append(f"low_{measure}")
    return out


@dataclass(frozen=True)
class ExperimentSpec:
    """Declarative experiment: network source, strategies, and parameters.

    ``network`` is either {"model": name, ...params} for a generator or
    {"file": path} for a fixed graph.  Phi defaults to 10n and T to n.
    """

    network: dict
    runs: int
    defenders: tuple[str, ...]
    attackers: tuple[str, ...]
    Phi: Optional[float] = None
    T: Optional[float] = None
    alpha: float = 1.0
    seeds_count: int = 1
    master_seed: int = 0
    delta: int = DEFAULT_DELTA
    sv_samples: int = DEFAULT_MC_SAMPLES
    sv_exact_bound: int = 12
    dp_bound: int = DP_LIMIT
    repeated_rounds: int = 10

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if not self.defenders or not self.attackers:
            raise ValueError("need at least one defender and one attacker")
        for d in self.defenders:
            parse_defense(d)
        for a in self.attackers:
            parse_attacker(a)
        if self.seeds_count < 1:
            raise ValueError("seeds_count must be >= 1")
        if "optimal" in self.attackers and self.seeds_count != 1:
            raise ValueError("the optimal attacker supports a single seed only")

    def to_json(self) -> dict:
        return {
            "network": dict(self.network),
            "runs": self.runs,
            "defenders": list(self.defenders),
            "attackers": list(self.attackers),
            "Phi": self.Phi,
            "T": self.T,
            "alpha": self.alpha,
            "seeds_count": self.seeds_count,
            "master_seed": self.master_seed,
            "delta": self.delta,
            "sv_samples": self.sv_samples,
            "sv_exact_bound": self.sv_exact_bound,
            "dp_bound": self.dp_bound,
            "repeated_rounds": self.repeated_rounds,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ExperimentSpec":
        known = {
            "Phi", "T", "alpha", "seeds_count", "master_seed", "delta",
            "sv_samples", "sv_exact_bound", "dp_bound", "repeated_rounds",
        }
        kwargs = {k: doc[k] for k in known if k in doc and doc[k] is not None}
        return cls(
            network=dict(doc["network"]),
            runs=int(doc["runs"]),
            defenders=tuple(doc["defenders"]),
            attackers=tuple(doc["attackers"]),
            **kwargs,
        )


@dataclass(frozen=True)
class CellStats:
    mean: float
    std: float
    runs: int


@dataclass
class ResultTable:
    defenders: list[str]
    attackers: list[str]
    cells: dict[tuple[str, str], CellStats]
    metadata: dict = field(default_factory=dict)

    def to_csv_text(self) -> str:
        lines = ["defender,attacker,mean_fraction,std,runs"]
        for d in self.defenders:
            for a in self.attackers:
                c = self.cells[(d, a)]
                lines.append(f"{d},{a},{c.mean:.6f},{c.std:.6f},{c.runs}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "defenders": self.defenders,
            "attackers": self.attackers,
            "cells": [
                {
                    "defender": d,
                    "attacker": a,
                    "mean_fraction": self.cells[(d, a)].mean,
                    "std": self.cells[(d, a)].std,
                    "runs": self.cells[(d, a)].runs,
                }
                for d in self.defenders
                for a in self.attackers
            ],
            "metadata": self.metadata,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ResultTable":
        cells = {
            (c["defender"], c["attacker"]): CellStats(
                c["mean_fraction"], c["std"], c["runs"]
            )
            for c in doc["cells"]
        }
        return cls(
            defenders=list(doc["defenders"]),
            attackers=list(doc["attackers"]),
            cells=cells,
            metadata=dict(doc.get("metadata", {})),
        )


def _mean_std(values: list[float]) -> tuple[float, float]:
    n = len(values)
    mean = sum(values) / n
    if n < 2:
        return mean, 0.0
    var = sum((x - mean) ** 2 for x in values) / (n - 1)
    return mean, math.sqrt(var)


def ci95_halfwidth(std: float, runs: int) -> float:
    return 1.96 * std / math.sqrt(runs)


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return 1


def build_network(spec: ExperimentSpec, run: int) -> Graph:
    src = spec.network
    if "file" in src:
        return load_graph(src["file"])
    model = src["model"]
    rng = derive_rng(spec.master_seed, "gen", run)
    n = int(src["n"])
    if model == "ba":
        return gen_barabasi_albert(n, int(src.get("d", 3)), rng)
    if model == "sf":
        return gen_scale_free_config(
            n,
            int(src.get("d_min", 2)),
            int(src.get("d_max", 10)),
            float(src.get("exponent", 3.0)),
            rng,
        )
    if model == "er":
        return gen_erdos_renyi(n, float(src.get("d", 10)), rng)
    if model == "ws":
        return gen_watts_strogatz(
            n, int(src.get("d", 10)), float(src.get("p", 0.25)), rng
        )
    if model == "tree":
        return gen_random_tree(n, rng)
    raise ValueError(f"unknown network model {model!r}")


def _game_config(spec: ExperimentSpec, g: Graph) -> GameConfig:
    Phi = spec.Phi if spec.Phi is not None else 10.0 * g.n
    T = spec.T if spec.T is not None else float(g.n)
    return GameConfig(Phi=Phi, T=T, alpha=spec.alpha, seeds_count=spec.seeds_count)


def _run_values(spec: ExperimentSpec, run: int) -> dict[tuple[str, str], float]:
    """Activated fraction for every (defender, attacker) cell of one run."""
    try:
        g = build_network(spec, run)
        cfg = _game_config(spec, g)
        score_cache: dict[str, list[float]] = {}

        def provider(graph: Graph, measure: str) -> list[float]:
            if measure not in score_cache:
                rng = derive_rng(spec.master_seed, "centrality", run, measure)
                score_cache[measure] = list(
                    compute_centrality(
                        graph,
                        measure,
                        delta=spec.delta,
                        rng=rng,
                        samples=spec.sv_samples,
                        exact_bound=spec.sv_exact_bound,
                    ).scores
                )
            return score_cache[measure]

        values: dict[tuple[str, str], float] = {}
        for d_label in spec.defenders:
            strat = parse_defense(d_label)
            d_rng = derive_rng(spec.master_seed, "defense", run, d_label)
            phi = allocate(g, cfg.Phi, strat, rng=d_rng, provider=provider)
            for a_label in spec.attackers:
                attacker = parse_attacker(a_label)
                if attacker is None:
                    if g.n > spec.dp_bound:
                        raise ValueError(
                            f"optimal attacker needs n <= {spec.dp_bound}"
                        )
                    _, value = optimal_attack_any_seed(g, phi, cfg, spec.dp_bound)
                else:
                    a_rng = derive_rng(
                        spec.master_seed, "attack", run, d_label, a_label
                    )
                    _, _, trace = run_multi_seed_attack(
                        g, phi, cfg, attacker, spec.seeds_count, a_rng
                    )
                    value = trace.activated_count
                values[(d_label, a_label)] = value / g.n
        return values
    except Exception as exc:
        raise RuntimeError(f"experiment run {run} failed: {exc}") from exc


def _collect_run_values(
    spec: ExperimentSpec, workers: Optional[int] = None
) -> list[dict[tuple[str, str], float]]:
    nworkers = resolve_workers(workers)
    runs = list(range(spec.runs))
    if nworkers == 1 or spec.runs == 1:
        return [_run_values(spec, r) for r in runs]
    with ProcessPoolExecutor(max_workers=nworkers) as pool:
        return list(pool.map(_run_values, [spec] * len(runs), runs))


def _metadata(spec: ExperimentSpec) -> dict:
    return {
        "spec": spec.to_json(),
        "master_seed": spec.master_seed,
        "version": __version__,
    }


def run_matrix(spec: ExperimentSpec, workers: Optional[int] = None) -> ResultTable:
    """Mean activated fraction per (defender, attacker) cell over all runs."""
    per_run = _collect_run_values(spec, workers)
    return _matrix_from_values(spec, per_run)


def _matrix_from_values(spec, per_run) -> ResultTable:
    cells = {}
    for d in spec.defenders:
        for a in spec.attackers:
            vals = [rv[(d, a)] for rv in per_run]
            mean, std = _mean_std(vals)
            cells[(d, a)] = CellStats(mean, std, len(vals))
    return ResultTable(
        list(spec.defenders), list(spec.attackers), cells, _metadata(spec)
    )


def run_best_response(
    spec: ExperimentSpec, workers: Optional[int] = None
) -> list[dict]:
    """Per-defender mean and 95% CI of the best attacker response per run."""
    per_run = _collect_run_values(spec, workers)
    return _best_response_from_values(spec, per_run)


def _best_response_from_values(spec, per_run) -> list[dict]:
    rows = []
    for d in spec.defenders:
        best = [max(rv[(d, a)] for a in spec.attackers) for rv in per_run]
        mean, std = _mean_std(best)
        rows.append(
            {
                "defender": d,
                "mean_fraction": mean,
                "std": std,
                "ci95": ci95_halfwidth(std, len(best)),
                "runs": len(best),
            }
        )
    return rows


def repeated_update(
    phi: list[float], activated: list[int], Phi: float, rng: random.Random
) -> list[float]:
    """One repeated-game defense update.

    Nodes captured last round get their resources multiplied by a uniform
    draw from [1,2]; the allocation is then renormalized to spend Phi.  With
    nothing captured the allocation is returned unchanged.
    """
    if not activated:
        return list(phi)
    omega = list(phi)
    for v in activated:
        omega[v] *= rng.uniform(1.0, 2.0)
    total = sum(omega)
    if total == 0:
        return list(phi)
    return [x / total * Phi for x in omega]


def _repeated_run(spec: ExperimentSpec, run: int, rounds: int):
    g = build_network(spec, run)
    cfg = _game_config(spec, g)
    score_cache: dict[str, list[float]] = {}

    def provider(graph: Graph, measure: str) -> list[float]:
        if measure not in score_cache:
            rng = derive_rng(spec.master_seed, "centrality", run, measure)
            score_cache[measure] = list(
                compute_centrality(
                    graph, measure, delta=spec.delta, rng=rng,
                    samples=spec.sv_samples, exact_bound=spec.sv_exact_bound,
                ).scores
            )
        return score_cache[measure]

    heuristics = [a for a in spec.attackers if a != "optimal"]
    use_optimal = g.n <= REPEATED_OPTIMAL_BOUND
    out: dict[str, list[int]] = {}
    for d_label in spec.defenders:
        strat = parse_defense(d_label)
        d_rng = derive_rng(spec.master_seed, "defense", run, d_label)
        phi = allocate(g, cfg.Phi, strat, rng=d_rng, provider=provider)
        series = []
        for rnd in range(1, rounds + 1):
            if use_optimal:
                seq, value = optimal_attack_any_seed(g, phi, cfg, spec.dp_bound)
                captured = list(seq.gamma[:value])
            else:
                best_value = -1
                captured = []
                for a_label in heuristics:
                    attacker = parse_attacker(a_label)
                    a_rng = derive_rng(
                        spec.master_seed, "attack", run, d_label, a_label, rnd
                    )
                    _, seq, trace = run_multi_seed_attack(
                        g, phi, cfg, attacker, spec.seeds_count, a_rng
                    )
                    if trace.activated_count > best_value:
                        best_value = trace.activated_count
                        captured = trace.activated_prefix(seq)
                value = best_value
            series.append(value)
            u_rng = derive_rng(spec.master_seed, "repeated", run, d_label, rnd)
            phi = repeated_update(phi, captured, cfg.Phi, u_rng)
            total = sum(phi)
            if captured and abs(total - cfg.Phi) > 1e-9:
                raise AssertionError(f"budget drifted to {total} != {cfg.Phi}")
        out[d_label] = series
    return out


def run_repeated(
    spec: ExperimentSpec, rounds: Optional[int] = None, workers: Optional[int] = None
) -> list[dict]:
    """Repeated game: per-round mean captured count for each initial defense.

    The attacker plays the exact optimum on small graphs and the best
    heuristic from the spec's grid otherwise; the defender shifts resources
    toward the nodes captured in the previous round.
    """
    rounds = rounds if rounds is not None else spec.repeated_rounds
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    nworkers = resolve_workers(workers)
    runs = list(range(spec.runs))
    if nworkers == 1 or spec.runs == 1:
        results = [_repeated_run(spec, r, rounds) for r in runs]
    else:
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            results = list(
                pool.map(_repeated_run, [spec] * len(runs), runs, [rounds] * len(runs))
            )
    rows = []
    for d in spec.defenders:
        for rnd in range(1, rounds + 1):
            vals = [float(res[d][rnd - 1]) for res in results]
            mean, std = _mean_std(vals)
            rows.append(
                {
                    "defender": d,
                    "round": rnd,
                    "mean_count": mean,
                    "std": std,
                    "runs": len(vals),
                }
            )
    return rows


def run_multiseed(
    spec: ExperimentSpec, seed_counts: tuple[int, ...] = (1, 2, 3),
    workers: Optional[int] = None,
) -> dict[int, ResultTable]:
    """Strategy matrices for several attacker seed budgets (seed streams are
    shared, so the single-seed table reproduces run_matrix exactly)."""
    return {
        k: run_matrix(replace(spec, seeds_count=k), workers) for k in seed_counts
    }


# -- output files -------------------------------------------------------------

def write_results(table: ResultTable, path: str, format: str = "csv") -> None:
    try:
        if format == "csv":
            with open(path, "w") as fh:
                fh.write(table.to_csv_text())
        elif format == "json":
            with open(path, "w") as fh:
                json.dump(table.to_json(), fh, indent=2, sort_keys=True)
                fh.write("\n")
        else:
            raise ValueError(f"unknown format {format!r}")
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc


def read_results(path: str) -> ResultTable:
    with open(path) as fh:
        return ResultTable.from_json(json.load(fh))


def write_best_response(rows: list[dict], path: str) -> None:
    lines = ["defender,mean_fraction,std,ci95,runs"]
    for r in rows:
        lines.append(
            f"{r['defender']},{r['mean_fraction']:.6f},{r['std']:.6f},"
            f"{r['ci95']:.6f},{r['runs']}"
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_repeated(rows: list[dict], path: str) -> None:
    lines = ["defender,round,mean_count,std,runs"]
    for r in rows:
        lines.append(
            f"{r['defender']},{r['round']},{r['mean_count']:.6f},"
            f"{r['std']:.6f},{r['runs']}"
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def run_experiment_to_dir(
    spec: ExperimentSpec, outdir: str, workers: Optional[int] = None
) -> dict:
    """Full experiment bundle: matrix.csv, best_response.csv, repeated.csv,
    meta.json.  Per-run evaluations are shared between the matrix and the
    best-response summary, so both match their standalone counterparts."""
    os.makedirs(outdir, exist_ok=True)
    per_run = _collect_run_values(spec, workers)
    table = _matrix_from_values(spec, per_run)
    best = _best_response_from_values(spec, per_run)
    repeated = run_repeated(spec, workers=workers)
    write_results(table, os.path.join(outdir, "matrix.csv"), "csv")
    write_best_response(best, os.path.join(outdir, "best_response.csv"))
    write_repeated(repeated, os.path.join(outdir, "repeated.csv"))
    with open(os.path.join(outdir, "meta.json"), "w") as fh:
        json.dump(_metadata(spec), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return {"matrix": table, "best_response": best, "repeated": repeated}
