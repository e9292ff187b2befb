"""Exact optimal-attack solvers.

Four routes to a provably best attack: a brute-force enumeration oracle for
tiny graphs, a bitmask dynamic program over reachable activation sets, an
O(n^3) bottom-up knapsack for trees, and closed-form orders for cliques and
stars.  A set-cover gadget generator produces the adversarial instances on
which optimal attack planning is as hard as 3-Set Cover, together with a
forward check that replays a cover as an attack.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .game import AttackSequence, GameConfig, step_duration
from .graph import Graph, bfs_distances

EXHAUSTIVE_LIMIT = 9
DP_LIMIT = 24


def optimal_attack_exhaustive(
    g: Graph, phi: list[float], cfg: GameConfig, seed: int
) -> tuple[AttackSequence, int]:
    """Depth-first enumeration of every valid sequence starting at seed.

    Returns the lexicographically smallest maximizer of eta, trimmed to the
    entries captured strictly within T.  Intended as a test oracle; guarded
    to n <= 9.
    """
    n = g.n
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search is limited to n <= {EXHAUSTIVE_LIMIT}")
    g._check_node(seed)
    alpha = cfg.alpha
    T = cfg.T
    weights = [g.degree(v) + phi[v] for v in range(n)]
    masks = g.adjacency_masks

    seed_time = step_duration(weights[seed], 1, alpha)
    if not seed_time < T:
        return AttackSequence([seed], 1), 0

    best_seq = [seed]
    best_eta = 1
    prefix = [seed]

    def extend(mask: int, t: float) -> None:
        nonlocal best_seq, best_eta
        for v in range(n):
            if mask >> v & 1:
                continue
            cnt = (masks[v] & mask).bit_count()
            if cnt == 0:
                continue
            t2 = t + step_duration(weights[v], cnt, alpha)
            if not t2 < T:
                continue
            prefix.append(v)
            depth = len(prefix)
            if depth > best_eta:
                best_eta = depth
                best_seq = list(prefix)
            extend(mask | (1 << v), t2)
            prefix.pop()

    extend(1 << seed, seed_time)
    return AttackSequence(best_seq, 1), best_eta


def optimal_attack_dp(
    g: Graph, phi: list[float], cfg: GameConfig, seed: int, max_n: int = DP_LIMIT
) -> tuple[AttackSequence, int]:
    """Bitmask dynamic program over reachable activation sets.

    tau[C] holds the minimal time to capture exactly the set C starting from
    the seed; sets are expanded only through frontier nodes and only while
    the new cumulative time stays strictly below T.  Only reachable sets are
    stored (hash map keyed by bitmask) and sequences are reconstructed from
    per-set predecessor links.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"subset DP is limited to n <= {max_n}")
    g._check_node(seed)
    alpha = cfg.alpha
    T = cfg.T
    weights = [g.degree(v) + phi[v] for v in range(n)]
    masks = g.adjacency_masks

    seed_mask = 1 << seed
    seed_time = step_duration(weights[seed], 1, alpha)
    if not seed_time < T:
        return AttackSequence([seed], 1), 0

    tau: dict[int, float] = {seed_mask: seed_time}
    pred: dict[int, int] = {seed_mask: seed}
    level = [seed_mask]
    while level:
        next_level: set[int] = set()
        for mask in sorted(level):
            t0 = tau[mask]
            for v in range(n):
                if mask >> v & 1:
                    continue
                cnt = (masks[v] & mask).bit_count()
                if cnt == 0:
                    continue
                t1 = t0 + step_duration(weights[v], cnt, alpha)
                if not t1 < T:
                    continue
                new_mask = mask | (1 << v)
                old = tau.get(new_mask)
                if old is None or t1 < old:
                    tau[new_mask] = t1
                    pred[new_mask] = v
                    next_level.add(new_mask)
        level = list(next_level)

    best_mask = min(tau, key=lambda m: (-m.bit_count(), tau[m], m))
    order: list[int] = []
    mask = best_mask
    while mask:
        v = pred[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return AttackSequence(order, 1), best_mask.bit_count()


def optimal_attack_any_seed(
    g: Graph, phi: list[float], cfg: GameConfig, max_n: int = DP_LIMIT
) -> tuple[AttackSequence, int]:
    """Best subset-DP attack over all seeds; ties go to the smallest seed."""
    best: tuple[AttackSequence, int] | None = None
    for seed in range(g.n):
        seq, value = optimal_attack_dp(g, phi, cfg, seed, max_n)
        if best is None or value > best[1]:
            best = (seq, value)
    assert best is not None
    return best


def _root_tree(g: Graph, root: int) -> tuple[list[int], list[list[int]]]:
    """BFS orientation: (order from root outward, children lists ascending)."""
    parent = [-1] * g.n
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in g.neighbor_list(v):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
    if len(order) != g.n:
        raise ValueError("tree solver needs a connected graph")
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    for c in children:
        c.sort()
    return order, children


def optimal_attack_tree(
    g: Graph, phi: list[float], cfg: GameConfig, seed: int
) -> tuple[AttackSequence, int]:
    """Bottom-up knapsack for trees.

    On a tree every captured node beyond the seed has exactly one captured
    neighbor at its activation, so each node costs its own weight
    (d(v)+phi(v))^alpha and the problem reduces to the lightest k-node
    subtree containing the seed.  O(n^3) time, O(n^2) memory.
    """
    n = g.n
    if g.edge_count() != n - 1:
        raise ValueError("tree solver needs an acyclic connected graph")
    g._check_node(seed)
    order, children = _root_tree(g, seed)  # also verifies connectivity
    alpha = cfg.alpha
    T = cfg.T
    w = [step_duration(g.degree(v) + phi[v], 1, alpha) for v in range(n)]

    INF = float("inf")
    size = [1] * n
    best: list[list[float]] = [[] for _ in range(n)]  # best[v][k], k=0..size[v]
    # splits[v][m][k]: nodes taken from v plus its first m children when the
    # (m+1)-th child's subtree contributes the rest
    splits: list[list[list[int]]] = [[] for _ in range(n)]

    for v in reversed(order):
        cur = [0.0, w[v]]
        for c in children[v]:
            size[v] += size[c]
            child = best[c]
            merged = [INF] * (len(cur) + size[c])
            merged[0] = 0.0
            split = [0] * len(merged)
            for k in range(1, len(merged)):
                lo = max(1, k - size[c])
                for i in range(lo, min(k, len(cur) - 1) + 1):
                    cand = cur[i] + child[k - i]
                    if cand < merged[k]:
                        merged[k] = cand
                        split[k] = i
            splits[v].append(split)
            cur = merged
        best[v] = cur

    root_best = best[seed]
    k_star = 0
    for k in range(len(root_best) - 1, 0, -1):
        if root_best[k] < T:
            k_star = k
            break
    if k_star == 0:
        return AttackSequence([seed], 1), 0

    def build(v: int, k: int) -> list[int]:
        kids = children[v]
        take: list[tuple[int, int]] = []
        for m in range(len(kids) - 1, -1, -1):
            i = splits[v][m][k]
            if k - i > 0:
                take.append((kids[m], k - i))
            k = i
        assert k == 1
        seq = [v]
        for c, kc in reversed(take):
            seq.extend(build(c, kc))
        return seq

    return AttackSequence(build(seed, k_star), 1), k_star


def _is_clique(g: Graph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in range(g.n))


def optimal_attack_clique(
    g: Graph, phi: list[float], cfg: GameConfig
) -> AttackSequence:
    """Optimal clique order: nodes sorted by assigned resources ascending."""
    if not _is_clique(g):
        raise ValueError("clique attack order needs a complete graph")
    order = sorted(range(g.n), key=lambda v: (phi[v], v))
    return AttackSequence(order, 1)


def star_center(g: Graph) -> int:
    """Center of a star graph (node 0 for the two-node edge)."""
    n = g.n
    if n == 2 and g.edge_count() == 1:
        return 0
    centers = [v for v in range(n) if g.degree(v) == n - 1]
    if len(centers) == 1 and all(
        g.degree(v) == 1 for v in range(n) if v != centers[0]
    ):
        return centers[0]
    raise ValueError("not a star graph")


def optimal_attack_star(
    g: Graph, phi: list[float], cfg: GameConfig
) -> AttackSequence:
    """Optimal star order: center first when it is the cheaper opener,
    otherwise the cheapest leaf first, then the center, then the remaining
    leaves by ascending resources."""
    center = star_center(g)
    leaves = sorted(
        (v for v in range(g.n) if v != center), key=lambda v: (phi[v], v)
    )
    if not leaves:
        return AttackSequence([center], 1)
    if phi[leaves[0]] >= phi[center] + g.n - 2:
        order = [center] + leaves
    else:
        order = [leaves[0], center] + leaves[1:]
    return AttackSequence(order, 1)


# -- set-cover gadget ---------------------------------------------------------

@dataclass(frozen=True)
class ReductionInstance:
    """Attack instance built from a 3-set-cover question.

    Activating exactly r_star nodes within T_star is possible iff b of the
    sets cover the universe.  The designated entry node is active at time
    zero and is neither timed nor counted.
    """

    graph: Graph
    phi: tuple[float, ...]
    seed_node: int
    T_star: float
    r_star: int
    m: int
    k: int
    b: int
    sets: tuple[tuple[int, ...], ...]
    set_nodes: tuple[int, ...]
    universe_nodes: tuple[int, ...]
    link_nodes: dict[tuple[int, int], int]  # (set index, element) -> node
    amp_nodes: tuple[tuple[int, ...], ...]  # 4k degree-1 nodes per element

    @property
    def config(self) -> GameConfig:
        return GameConfig(Phi=sum(self.phi), T=self.T_star, alpha=1.0)


def setcover_reduction(
    universe_size: int, sets: list[tuple[int, int, int]], b: int
) -> ReductionInstance:
    """Build the gadget network and its pinned resource distribution.

    Layout: an entry node adjacent to one node per set; one node per universe
    element with 4k pendant nodes each; and one two-edge link node per
    (set, element) membership.
    """
    m = int(universe_size)
    k = len(sets)
    if m < 1 or k < 1:
        raise ValueError("need a nonempty universe and set collection")
    if not (1 <= b <= k):
        raise ValueError("need 1 <= b <= number of sets")
    norm_sets = []
    for s in sets:
        t = tuple(sorted(int(x) for x in s))
        if len(t) != 3 or len(set(t)) != 3:
            raise ValueError(f"set {s!r} must have exactly 3 distinct elements")
        if not all(0 <= x < m for x in t):
            raise ValueError(f"set {s!r} has elements outside the universe")
        norm_sets.append(t)

    sigma = [0] * m
    for t in norm_sets:
        for x in t:
            sigma[x] += 1

    idx = 0
    seed_node = idx
    idx += 1
    set_nodes = tuple(range(idx, idx + k))
    idx += k
    universe_nodes = tuple(range(idx, idx + m))
    idx += m
    link_nodes: dict[tuple[int, int], int] = {}
    for i, t in enumerate(norm_sets):
        for x in t:
            link_nodes[(i, x)] = idx
            idx += 1
    amp_nodes = []
    for _ in range(m):
        amp_nodes.append(tuple(range(idx, idx + 4 * k)))
        idx += 4 * k
    n = idx

    edges = []
    for i in range(k):
        edges.append((seed_node, set_nodes[i]))
    for x in range(m):
        for a in amp_nodes[x]:
            edges.append((universe_nodes[x], a))
    for (i, x), l in link_nodes.items():
        edges.append((set_nodes[i], l))
        edges.append((universe_nodes[x], l))
    g = Graph(n, edges)

    phi = [0.0] * n
    for x in range(m):
        phi[universe_nodes[x]] = float(k - sigma[x])
    for i in range(k):
        phi[set_nodes[i]] = float(20 * m * k)
    for l in link_nodes.values():
        phi[l] = float(20 * m * k + 2)

    T_star = float((b + m) * (20 * m * k + 4) + 9 * m * k + 1)
    r_star = b + (4 * k + 2) * m
    return ReductionInstance(
        graph=g,
        phi=tuple(phi),
        seed_node=seed_node,
        T_star=T_star,
        r_star=r_star,
        m=m,
        k=k,
        b=b,
        sets=tuple(norm_sets),
        set_nodes=set_nodes,
        universe_nodes=universe_nodes,
        link_nodes=link_nodes,
        amp_nodes=tuple(amp_nodes),
    )


def cover_to_sequence(inst: ReductionInstance, cover: list[int]) -> AttackSequence:
    """Replay a size-b cover as an attack on the gadget.

    Order: the chosen set nodes, then one link+element pair per universe
    element, then every pendant node.  The entry node is pre-activated
    context, so evaluate with pre_active={inst.seed_node}.
    """
    chosen = sorted(set(int(i) for i in cover))
    if len(chosen) != inst.b:
        raise ValueError(f"cover must contain exactly b={inst.b} distinct sets")
    if any(not 0 <= i < inst.k for i in chosen):
        raise ValueError("cover references unknown sets")
    covered = set()
    for i in chosen:
        covered.update(inst.sets[i])
    if covered != set(range(inst.m)):
        raise ValueError("the chosen sets do not cover the universe")

    order = [inst.set_nodes[i] for i in chosen]
    for x in range(inst.m):
        provider = min(i for i in chosen if x in inst.sets[i])
        order.append(inst.link_nodes[(provider, x)])
        order.append(inst.universe_nodes[x])
    for x in range(inst.m):
        order.extend(inst.amp_nodes[x])
    return AttackSequence(order, seeds=0)


def random_covering_instance(
    m: int, k: int, b: int, rng: random.Random
) -> tuple[list[tuple[int, int, int]], list[int]]:
    """Random 3-set collection guaranteed to contain a covering choice of b
    sets, plus the indices of that cover.  Needs 3*b >= m."""
    if 3 * b < m:
        raise ValueError(f"no b={b} sets of size 3 can cover {m} elements")
    if b > k:
        raise ValueError("need b <= k")
    universe = list(range(m))
    slots: list[set[int]] = [set() for _ in range(b)]
    shuffled = universe[:]
    rng.shuffle(shuffled)
    for pos, x in enumerate(shuffled):
        slots[pos % b].add(x)
    sets: list[tuple[int, int, int]] = []
    for slot in slots:
        while len(slot) < 3:
            slot.add(rng.randrange(m))
        sets.append(tuple(sorted(slot)))  # type: ignore[arg-type]
    while len(sets) < k:
        extra = rng.sample(universe, 3) if m >= 3 else None
        if extra is None:
            raise ValueError("universe too small for 3-element sets")
        sets.append(tuple(sorted(extra)))  # type: ignore[arg-type]
    order = list(range(k))
    rng.shuffle(order)
    shuffled_sets = [sets[i] for i in order]
    cover = sorted(order.index(i) for i in range(b))
    return shuffled_sets, cover


def is_tree(g: Graph) -> bool:
    return g.edge_count() == g.n - 1 and all(
        d is not None for d in bfs_distances(g, 0)
    )
