"""Why optimal attack planning is hard: the set-cover gadget.

Any 3-set-cover question can be rephrased as "can the attacker capture
r* nodes within T*?" on a purpose-built network.  Replaying a cover as an
attack lands exactly on the target count with one time unit to spare;
without a cover the budget cannot be met.
"""

import random

from secdiff import (
    cover_to_sequence,
    evaluate_sequence,
    random_covering_instance,
    setcover_reduction,
)

m, k, b = 4, 4, 2
sets, cover = random_covering_instance(m, k, b, random.Random(1))
inst = setcover_reduction(m, sets, b)

print(f"universe of {m} elements, {k} candidate sets, pick {b}:")
for i, s in enumerate(inst.sets):
    marker = "*" if i in cover else " "
    print(f"  {marker} set {i}: {s}")
print(f"\ngadget network: {inst.graph.n} nodes; target {inst.r_star} captures "
      f"within T*={inst.T_star:.0f}")

seq = cover_to_sequence(inst, cover)
trace = evaluate_sequence(
    inst.graph, list(inst.phi), seq, inst.config, pre_active={inst.seed_node}
)
print(f"replaying the cover: {trace.activated_count} captures "
      f"in {trace.total_time:.0f} time units ({inst.T_star - trace.total_time:.0f} to spare)")
assert trace.activated_count == inst.r_star
