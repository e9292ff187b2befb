"""End-to-end experiment: matrix, best response and repeated series on disk.

Writes matrix.csv / best_response.csv / repeated.csv / meta.json to
demo_out/.  Rerunning with the same master seed reproduces the files byte
for byte at any worker count; the CSVs are the input contract of the
plotting frontend.
"""

from secdiff import ExperimentSpec, run_experiment_to_dir

spec = ExperimentSpec(
    network={"model": "er", "n": 30, "d": 6},
    runs=12,
    defenders=("uniform", "equality", "random", "high_degree", "low_betweenness"),
    attackers=("greedy", "majority", "mixed(0.5)", "eps_first(0.5)"),
    master_seed=2718,
    repeated_rounds=8,
)
out = run_experiment_to_dir(spec, "demo_out", workers=4)

print("wrote demo_out/{matrix,best_response,repeated}.csv and meta.json\n")
print("best attacker response per defense (mean captured fraction, 95% CI):")
for row in sorted(out["best_response"], key=lambda r: r["mean_fraction"]):
    print(f"  {row['defender']:<16} {row['mean_fraction']:.3f} +/- {row['ci95']:.3f}")

first = [r for r in out["repeated"] if r["round"] == 1]
last = [r for r in out["repeated"] if r["round"] == spec.repeated_rounds]
print("\nrepeated game, mean captured count (round 1 -> final):")
for a, b in zip(first, last):
    print(f"  {a['defender']:<16} {a['mean_count']:.2f} -> {b['mean_count']:.2f}")
