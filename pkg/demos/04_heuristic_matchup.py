"""Pit every defender heuristic against a small attacker grid.

One preferential-attachment network, budget 10 per node, time limit equal to
the node count; the attacker tries each seed and keeps the best.  Lower
fractions mean better defense.
"""

from secdiff import ExperimentSpec, run_matrix
from secdiff.harness import default_attacker_grid, default_defender_list

spec = ExperimentSpec(
    network={"model": "ba", "n": 30, "d": 3},
    runs=5,
    defenders=tuple(default_defender_list()),
    attackers=("greedy", "majority", "mixed(0.5)", "eps_first(0.5)"),
    master_seed=11,
    # few Monte Carlo permutations keep the Shapley-betweenness defense
    # affordable at demo scale; raise sv_samples for real studies
    sv_samples=120,
    sv_exact_bound=12,
)
table = run_matrix(spec, workers=4)

print(f"mean captured fraction over {spec.runs} networks (n=30):\n")
header = f"{'defender':<20}" + "".join(f"{a:>16}" for a in spec.attackers)
print(header)
ranked = sorted(
    spec.defenders,
    key=lambda d: sum(table.cells[(d, a)].mean for a in spec.attackers),
)
for d in ranked:
    row = "".join(f"{table.cells[(d, a)].mean:>16.3f}" for a in spec.attackers)
    print(f"{d:<20}{row}")
print("\n(defenders sorted from most to least effective on average)")
