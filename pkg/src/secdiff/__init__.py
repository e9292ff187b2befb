"""Security diffusion games: strategic attack and defense on networks.

A defender spreads a security budget over the nodes of a network; an attacker
then captures nodes in a chosen order, each capture accelerated by already
captured neighbors.  The package bundles the game semantics, random network
generators, centrality-based defender heuristics (including Shapley-value
measures), attacker heuristics, exact optimal-attack solvers for small or
structured networks, an optimal-defense solver against enumerated attack
plans, and a reproducible experiment harness.
"""

__version__ = "0.1.0"

from .attack import (
    AttackStrategy,
    best_seed,
    eps_decreasing,
    eps_first,
    greedy,
    greedy_next,
    majority,
    majority_next,
    mixed,
    run_attack,
    run_multi_seed_attack,
    select_multi_seeds,
)
from .centrality import (
    CentralityScores,
    CoalitionGame,
    betweenness_centrality,
    characteristic_value,
    closeness_centrality,
    compute_centrality,
    degree_centrality,
    make_game,
    shapley_exact,
    shapley_exact_all,
    shapley_mc,
    sv_betweenness_game,
    sv_closeness_game,
    sv_degree_game,
)
from .defense import DefenseStrategy, allocate, equality_threshold, parse_defense
from .game import (
    AttackSequence,
    AttackTrace,
    GameConfig,
    activation_time,
    check_allocation,
    eta,
    evaluate_sequence,
    is_valid_sequence,
    load_allocation,
    load_sequence,
    save_allocation,
    save_sequence,
)
from .generators import (
    GenerationError,
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_random_tree,
    gen_scale_free_config,
    gen_watts_strogatz,
    prufer_decode,
)
from .graph import (
    Graph,
    bfs_distances,
    degree,
    giant_component,
    load_graph,
    load_karate_club,
    pair_dependencies,
    save_graph,
)
from .harness import (
    ExperimentSpec,
    ResultTable,
    derive_rng,
    run_best_response,
    run_experiment_to_dir,
    run_matrix,
    run_multiseed,
    run_repeated,
    write_results,
)
from .optattack import (
    ReductionInstance,
    cover_to_sequence,
    optimal_attack_any_seed,
    optimal_attack_clique,
    optimal_attack_dp,
    optimal_attack_exhaustive,
    optimal_attack_star,
    optimal_attack_tree,
    random_covering_instance,
    setcover_reduction,
)
from .optdefense import (
    DefenseMILP,
    build_milp,
    export_lp,
    optimal_defense_clique,
    optimal_defense_star,
    solve_defense,
)
