"""Optimal defense against an enumerated set of attack plans.

The defender maximizes the worst-case number of nodes kept safe.  The model
can also be exported as CPLEX-LP text for an external solver.
"""

from secdiff import (
    AttackSequence,
    GameConfig,
    Graph,
    build_milp,
    eta,
    export_lp,
    solve_defense,
)

g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
plans = [
    AttackSequence([0, 1, 2, 3, 4], 1),
    AttackSequence([4, 3, 2, 1, 0], 1),
    AttackSequence([2, 1, 0], 1),
]
Phi, T = 8.0, 9.0

phi, k = solve_defense(g, plans, Phi, T)
print(f"budget {Phi}, time limit {T}: at least {k} of {g.n} nodes stay safe")
print("allocation:", [round(x, 3) for x in phi])
cfg = GameConfig(Phi=Phi + 1e-9, T=T)
for i, plan in enumerate(plans):
    captured = eta(g, phi, plan, cfg)
    print(f"  plan {i} {plan.gamma}: captures {captured}, leaves {g.n - captured} safe")

model = build_milp(g, plans, Phi, T)
text = export_lp(model)
print(f"\nLP export ({model.constraint_rows} formulation rows), first lines:")
print("\n".join(text.splitlines()[:8]))
