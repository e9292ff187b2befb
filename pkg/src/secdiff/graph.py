"""Undirected simple graph with the structural queries used across the library.

Nodes are dense integer indices 0..n-1.  External labels (e.g. the ids in the
bundled karate-club edge list) are remapped to dense indices at load time.
Graphs are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Optional


class Graph:
    """Immutable undirected simple graph over nodes 0..n-1."""

    __slots__ = ("n", "_adj", "_adj_lists", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("graph needs at least one node")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._adj_lists = tuple(tuple(sorted(s)) for s in adj)
        self._masks: Optional[tuple[int, ...]] = None

    # -- basic queries ------------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_node(v)
        return self._adj[v]

    def neighbor_list(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self._adj_lists[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj_lists[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor sets as integer bitmasks (built lazily, cached)."""
        if self._masks is None:
            masks = []
            for v in range(self.n):
                m = 0
                for w in self._adj_lists[v]:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def _check_node(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"node index {v} out of range [0,{self.n})")

    def check_invariants(self) -> None:
        """Assert symmetry and no-self-loop; meant for tests and generators."""
        for v in range(self.n):
            if v in self._adj[v]:
                raise AssertionError(f"self-loop at {v}")
            for w in self._adj[v]:
                if v not in self._adj[w]:
                    raise AssertionError(f"asymmetric edge ({v},{w})")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Hop distances from source; unreachable nodes are None, never a fake value."""
    g._check_node(source)
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g.neighbor_list(v):
            if dist[w] is None:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> list[list[Optional[int]]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted node lists, ordered by smallest contained index."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.neighbor_list(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def giant_component(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Largest connected component and the old->new index map.

    Ties go to the component with the smallest minimum original index.
    """
    comps = connected_components(g)
    best = max(comps, key=len)  # first maximal wins: smallest min index
    mapping = {old: new for new, old in enumerate(best)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges() if u in mapping and v in mapping]
    return Graph(len(best), edges), mapping


def pair_dependencies(g: Graph) -> list[float]:
    """Per-node betweenness accumulation over ordered source/target pairs.

    For each node v, sums sigma_st(v)/sigma_st over all ordered pairs (s,t)
    with s != t != v, where sigma_st counts shortest s-t paths and
    sigma_st(v) counts those passing through v (Brandes accumulation).
    """
    n = g.n
    dep = [0.0] * n
    for s in range(n):
        order: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv1 = dist[v] + 1
            for w in g.neighbor_list(v):
                if dist[w] < 0:
                    dist[w] = dv1
                    queue.append(w)
                if dist[w] == dv1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                dep[w] += delta[w]
    return dep


# -- file formats -----------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(doc: dict) -> Graph:
    return Graph(int(doc["n"]), [(int(u), int(v)) for u, v in doc["edges"]])


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_json(g), fh)
        fh.write("\n")


def load_graph(path: str) -> Graph:
    """Load a graph from JSON ({"n": ..., "edges": ...}) or two-column text."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edge_list(text)


def parse_edge_list(text: str) -> Graph:
    """Whitespace-separated two-column edge list; labels remapped densely."""
    raw_edges = []
    labels = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge list line {line_no}: expected two columns")
        u, v = int(parts[0]), int(parts[1])
        raw_edges.append((u, v))
        labels.add(u)
        labels.add(v)
    if not raw_edges:
        raise ValueError("edge list contains no edges")
    index = {label: i for i, label in enumerate(sorted(labels))}
    return Graph(len(index), [(index[u], index[v]) for u, v in raw_edges])


def load_karate_club() -> Graph:
    """Bundled Zachary karate-club fixture (34 nodes, 78 edges)."""
    from importlib.resources import files

    text = files("secdiff.data").joinpath("karate.txt").read_text()
    return parse_edge_list(text)
