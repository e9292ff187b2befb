"""Command-line entry point.

Subcommands: gen, centrality, defend, attack, optimal-attack,
optimal-defense, reduce-setcover, experiment, evaluate.  Machine-readable
JSON goes to stdout unless -o is given; human summaries go to stderr.
Exit codes: 0 ok, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .attack import run_multi_seed_attack
from .centrality import compute_centrality
from .defense import allocate, parse_defense
from .game import (
    AttackSequence,
    GameConfig,
    evaluate_sequence,
    load_allocation,
    load_sequence,
    sequence_to_json,
)
from .generators import (
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_random_tree,
    gen_scale_free_config,
    gen_watts_strogatz,
)
from .graph import Graph, graph_to_json, load_graph
from .harness import ExperimentSpec, parse_attacker, run_experiment_to_dir
from .optattack import (
    optimal_attack_any_seed,
    optimal_attack_dp,
    optimal_attack_exhaustive,
    optimal_attack_tree,
    setcover_reduction,
)
from .optdefense import build_milp, export_lp, solve_defense


def _emit(payload: dict, out: str | None, summary: str) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.model == "ba":
        g = gen_barabasi_albert(args.n, int(args.d if args.d is not None else 3), rng)
    elif args.model == "sf":
        g = gen_scale_free_config(args.n, args.dmin, args.dmax, args.exponent, rng)
    elif args.model == "er":
        g = gen_erdos_renyi(args.n, args.d if args.d is not None else 10.0, rng)
    elif args.model == "ws":
        g = gen_watts_strogatz(
            args.n, int(args.d if args.d is not None else 10), args.p, rng
        )
    else:
        g = gen_random_tree(args.n, rng)
    _emit(
        graph_to_json(g),
        args.output,
        f"generated {args.model} graph: n={g.n}, m={g.edge_count()}",
    )
    return 0


def _cmd_centrality(args) -> int:
    g = load_graph(args.graph)
    rng = random.Random(args.seed) if args.seed is not None else None
    if args.measure.startswith("sv_") and args.seed is None and g.n > args.exact_bound:
        print("error: --seed is required for sampled Shapley measures", file=sys.stderr)
        return 2
    scores = compute_centrality(
        g,
        args.measure,
        delta=args.delta,
        rng=rng,
        samples=args.samples,
        exact_bound=args.exact_bound,
    )
    lines = ["node,score"] + [
        f"{v},{s:.10g}" for v, s in enumerate(scores.scores)
    ]
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{args.measure} centrality over {g.n} nodes", file=sys.stderr)
    return 0


def _cmd_defend(args) -> int:
    g = load_graph(args.graph)
    strat = parse_defense(args.strategy if not args.measure
                          else f"{args.strategy}_{args.measure}")
    needs_rng = strat.kind == "random" or (
        strat.measure or ""
    ).startswith("sv_")
    if needs_rng and args.seed is None:
        print("error: --seed is required for this defense", file=sys.stderr)
        return 2
    rng = random.Random(args.seed) if args.seed is not None else None

    def provider(graph: Graph, measure: str) -> list[float]:
        return list(
            compute_centrality(
                graph, measure, delta=args.delta, rng=rng, samples=args.samples
            ).scores
        )

    phi = allocate(g, args.Phi, strat, rng=rng, provider=provider)
    _emit(
        {"phi": phi},
        args.output,
        f"{strat.label} allocation: sum={sum(phi):.6f} of Phi={args.Phi}",
    )
    return 0


def _attack_label(args) -> str:
    if args.strategy == "mixed":
        if args.p is None:
            raise ValueError("mixed attack needs --p")
        return f"mixed({args.p})"
    if args.strategy == "eps_first":
        if args.eps is None:
            raise ValueError("eps_first attack needs --eps")
        return f"eps_first({args.eps})"
    return args.strategy


def _cmd_attack(args) -> int:
    g = load_graph(args.graph)
    phi = load_allocation(args.phi)
    strat = parse_attacker(_attack_label(args))
    cfg = GameConfig(Phi=max(sum(phi), 0.0), T=args.T, alpha=args.alpha,
                     seeds_count=args.seeds)
    rng = random.Random(args.seed)
    seeds, seq, trace = run_multi_seed_attack(g, phi, cfg, strat, args.seeds, rng)
    _emit(
        {
            "sequence": sequence_to_json(seq),
            "seeds": seeds,
            "eta": trace.activated_count,
            "cumulative": list(trace.cumulative),
            "total_time": trace.total_time,
        },
        args.output,
        f"{strat.label} attack captured {trace.activated_count}/{g.n} nodes",
    )
    return 0


def _cmd_optimal_attack(args) -> int:
    g = load_graph(args.graph)
    phi = load_allocation(args.phi)
    cfg = GameConfig(Phi=max(sum(phi), 0.0), T=args.T, alpha=args.alpha)
    if args.any_seed:
        seq, value = optimal_attack_any_seed(g, phi, cfg)
    else:
        if args.seed is None:
            print("error: pass --seed NODE or --any-seed", file=sys.stderr)
            return 2
        if args.method == "dp":
            seq, value = optimal_attack_dp(g, phi, cfg, args.seed)
        elif args.method == "tree":
            seq, value = optimal_attack_tree(g, phi, cfg, args.seed)
        else:
            seq, value = optimal_attack_exhaustive(g, phi, cfg, args.seed)
    _emit(
        {"sequence": sequence_to_json(seq), "eta": value},
        args.output,
        f"optimal attack captures {value}/{g.n} nodes",
    )
    return 0


def _cmd_optimal_defense(args) -> int:
    g = load_graph(args.graph)
    with open(args.sequences) as fh:
        doc = json.load(fh)
    seqs = []
    for entry in doc["sequences"]:
        if isinstance(entry, dict):
            seqs.append(AttackSequence(entry["gamma"], int(entry.get("seeds", 1))))
        else:
            seqs.append(AttackSequence(entry, 1))
    if args.export_lp:
        model = build_milp(g, seqs, args.Phi, args.T)
        with open(args.export_lp, "w") as fh:
            fh.write(export_lp(model))
        print(f"wrote LP model to {args.export_lp}", file=sys.stderr)
    phi, k = solve_defense(g, seqs, args.Phi, args.T)
    _emit(
        {"phi": phi, "k": k},
        args.output,
        f"defense keeps at least {k}/{g.n} nodes safe against {len(seqs)} plans",
    )
    return 0


def _cmd_reduce_setcover(args) -> int:
    with open(args.sets) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        doc = json.loads(text)
        raw_sets = doc["sets"] if isinstance(doc, dict) else doc
    else:
        raw_sets = [
            [int(x) for x in line.split()]
            for line in text.splitlines()
            if line.strip() and not line.startswith("#")
        ]
    inst = setcover_reduction(args.m, [tuple(s) for s in raw_sets], args.b)
    payload = {
        "graph": graph_to_json(inst.graph),
        "phi": list(inst.phi),
        "seed_node": inst.seed_node,
        "T_star": inst.T_star,
        "r_star": inst.r_star,
        "m": inst.m,
        "k": inst.k,
        "b": inst.b,
    }
    _emit(
        payload,
        args.output,
        f"gadget with {inst.graph.n} nodes, target {inst.r_star} within {inst.T_star}",
    )
    return 0


def _cmd_experiment(args) -> int:
    with open(args.spec) as fh:
        spec = ExperimentSpec.from_json(json.load(fh))
    run_experiment_to_dir(spec, args.output)
    print(f"experiment outputs written to {args.output}", file=sys.stderr)
    return 0


def _cmd_evaluate(args) -> int:
    g = load_graph(args.graph)
    phi = load_allocation(args.phi)
    seq = load_sequence(args.gamma)
    cfg = GameConfig(Phi=max(sum(phi), 0.0), T=args.T, alpha=args.alpha,
                     seeds_count=max(seq.seeds, 1))
    trace = evaluate_sequence(g, phi, seq, cfg)
    _emit(
        {
            "eta": trace.activated_count,
            "durations": list(trace.durations),
            "cumulative": list(trace.cumulative),
            "total_time": trace.total_time,
        },
        args.output,
        f"sequence captures {trace.activated_count}/{g.n} nodes within T={args.T}",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secdiff",
        description="Security diffusion games: attack, defense, experiments.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random network")
    p.add_argument("--model", required=True, choices=["ba", "sf", "er", "ws", "tree"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--d", type=float, default=None,
                   help="ba: links per node; er/ws: average degree")
    p.add_argument("--p", type=float, default=0.25, help="ws rewiring probability")
    p.add_argument("--dmin", type=int, default=2)
    p.add_argument("--dmax", type=int, default=10)
    p.add_argument("--exponent", type=float, default=3.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("centrality", help="score nodes by a centrality measure")
    p.add_argument("--measure", required=True)
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--samples", type=int, default=20000)
    p.add_argument("--exact-bound", type=int, default=12)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_centrality)

    p = sub.add_parser("defend", help="compute a defender allocation")
    p.add_argument("--strategy", required=True,
                   help="equality|uniform|random|high_M|low_M (M a measure)")
    p.add_argument("--measure", default=None,
                   help="optional measure when --strategy is just high/low")
    p.add_argument("--Phi", type=float, required=True)
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--samples", type=int, default=20000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_defend)

    p = sub.add_parser("attack", help="run a heuristic attack")
    p.add_argument("--strategy", required=True,
                   help="greedy|majority|mixed|eps_decreasing|eps_first")
    p.add_argument("--p", type=float, default=None, help="mixed greedy probability")
    p.add_argument("--eps", type=float, default=None, help="eps_first fraction")
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_attack)

    p = sub.add_parser("optimal-attack", help="exact optimal attack")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=None, help="seed node index")
    p.add_argument("--any-seed", action="store_true")
    p.add_argument("--method", choices=["dp", "tree", "exhaustive"], default="dp")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_optimal_attack)

    p = sub.add_parser("optimal-defense", help="defense against enumerated plans")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--sequences", required=True)
    p.add_argument("--Phi", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--export-lp", default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_optimal_defense)

    p = sub.add_parser("reduce-setcover", help="build a set-cover attack gadget")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sets", required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reduce_setcover)

    p = sub.add_parser("experiment", help="run a declarative experiment")
    p.add_argument("--spec", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("evaluate", help="score a given allocation/sequence pair")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_evaluate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
