"""Generate one network of every supported family and print basic stats."""

import random

from secdiff import (
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_random_tree,
    gen_scale_free_config,
    gen_watts_strogatz,
)

N = 80
makers = {
    "preferential attachment (d=3)": lambda r: gen_barabasi_albert(N, 3, r),
    "scale-free configuration":      lambda r: gen_scale_free_config(N, 2, 10, 3.0, r),
    "connected random graph (d=10)": lambda r: gen_erdos_renyi(N, 10.0, r),
    "small world (d=10, p=1/4)":     lambda r: gen_watts_strogatz(N, 10, 0.25, r),
    "uniform random tree":           lambda r: gen_random_tree(N, r),
}

print(f"{'family':<32} {'n':>4} {'edges':>6} {'min d':>6} {'max d':>6} {'mean d':>7}")
for name, make in makers.items():
    g = make(random.Random(7))
    degs = g.degrees()
    print(
        f"{name:<32} {g.n:>4} {g.edge_count():>6} {min(degs):>6} "
        f"{max(degs):>6} {2 * g.edge_count() / g.n:>7.2f}"
    )

print("\nsame seed, same graph:",
      gen_barabasi_albert(N, 3, random.Random(7)) == gen_barabasi_albert(N, 3, random.Random(7)))
