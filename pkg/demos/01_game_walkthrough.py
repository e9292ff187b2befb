"""Walk through one attack step by step.

A defender has placed security resources on a small network; the attacker
captures five nodes in a fixed order.  Each capture costs
(degree + resources) / (number of already-captured neighbors), and the
first target pays its full weight.
"""

from secdiff import AttackSequence, GameConfig, Graph, evaluate_sequence

edges = [
    (7, 5), (5, 2), (3, 5), (6, 5), (6, 3),
    (7, 8), (7, 4), (5, 4), (3, 0), (3, 1),
]
g = Graph(9, edges)
phi = [0.0, 0.0, 4.0, 3.0, 0.0, 3.0, 2.0, 1.0, 0.0]
seq = AttackSequence([7, 5, 2, 3, 6], seeds=1)
cfg = GameConfig(Phi=sum(phi), T=26.5)

trace = evaluate_sequence(g, phi, seq, cfg)
print(f"network: {g.n} nodes, {g.edge_count()} edges, time limit T={cfg.T}")
print(f"{'step':>4} {'node':>4} {'degree':>6} {'phi':>5} {'duration':>8} {'t':>6}")
for i, v in enumerate(seq.gamma):
    print(
        f"{i + 1:>4} {v:>4} {g.degree(v):>6} {phi[v]:>5.1f} "
        f"{trace.durations[i]:>8.2f} {trace.cumulative[i]:>6.2f}"
    )
print(f"\ncaptured within the limit: {trace.activated_count} of {len(seq)} targeted")

tight = GameConfig(Phi=sum(phi), T=20.0)
print(f"with T=20 the same plan only nets {evaluate_sequence(g, phi, seq, tight).activated_count}")
