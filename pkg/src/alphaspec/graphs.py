"""Simple undirected graphs, generators and exact distance data."""
from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

FAMILIES = ("path", "cycle", "star", "complete", "complete_bipartite")


class GraphError(ValueError):
    """Invalid graph construction or an argument outside a generator's range."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as a frozenset of ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset, ...]:
        adj: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and is_connected(self)

    def is_star(self) -> bool:
        """True for K_{1,n-1} with n >= 3 under any labeling."""
        if self.n < 3 or self.m != self.n - 1:
            return False
        degrees = sorted(len(a) for a in self.neighbors)
        return degrees[-1] == self.n - 1 and degrees[0] == 1

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))


def generate_family(family: str, n: int, a: int | None = None) -> Graph:
    """Canonical labeled member of a named family.

    ``complete_bipartite`` takes the first part size ``a``; the parts are
    ``0..a-1`` and ``a..n-1``. Star centers are vertex 0.
    """
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise GraphError(f"{family} needs n >= 1, got {n}")
    if family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif family == "star":
        edges = [(0, i) for i in range(1, n)]
    elif family == "complete":
        edges = list(combinations(range(n), 2))
    else:
        if a is None:
            a = n // 2
        b = n - a
        if a < 1 or b < 1:
            raise GraphError(f"complete_bipartite needs both parts nonempty, got ({a}, {b})")
        edges = [(i, j) for i in range(a) for j in range(a, n)]
    return Graph.from_edges(n, edges)


def prufer_to_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence of length ``n - 2`` into tree edges."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Prufer sequence."""
    return generate_random_connected(n, 0, seed)


def generate_random_connected(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus ``extra_edges`` distinct non-tree edges.

    The tree is uniform over labeled trees (random Prufer code); the extra
    edges are sampled without replacement. Same arguments, same graph.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    max_extra = n * (n - 1) // 2 - (n - 1)
    if not 0 <= extra_edges <= max_extra:
        raise GraphError(f"extra_edges must be in [0, {max_extra}] for n={n}, got {extra_edges}")
    rng = random.Random(seed)
    if n == 1:
        return Graph(1)
    if n == 2:
        tree = [(0, 1)]
    else:
        tree = prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n)
    tree_set = {(min(u, v), max(u, v)) for u, v in tree}
    pool = [e for e in combinations(range(n), 2) if e not in tree_set]
    extra = rng.sample(pool, extra_edges)
    return Graph.from_edges(n, sorted(tree_set) + extra)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.neighbors
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


@dataclass(frozen=True, eq=False)
class DistanceData:
    """Exact distance matrix and the transmission-derived integers.

    ``dist`` is a read-only int64 array. ``tr[i]`` is the transmission of
    vertex ``i``, ``wiener`` the Wiener index, ``s_sum`` the sum of squared
    distances over unordered pairs, ``avg_tr`` the average transmission as
    an exact fraction.
    """

    n: int
    dist: np.ndarray
    tr: tuple[int, ...]
    wiener: int
    s_sum: int
    avg_tr: Fraction
    max_tr: int
    min_tr: int

    @property
    def tr_array(self) -> np.ndarray:
        return np.asarray(self.tr, dtype=float)

    @property
    def tr_sq_sum(self) -> int:
        return sum(t * t for t in self.tr)

    def is_transmission_regular(self) -> bool:
        return self.max_tr == self.min_tr


def all_pairs_distances(g: Graph) -> DistanceData:
    """One BFS per vertex; raises :class:`DisconnectedGraphError` on disconnected input."""
    rows = []
    for v in range(g.n):
        row = bfs_distances(g, v)
        if min(row) < 0:
            missing = row.index(-1)
            raise DisconnectedGraphError(f"graph is disconnected: vertex {missing} unreachable from {v}")
        rows.append(row)
    dist = np.array(rows, dtype=np.int64)
    dist.setflags(write=False)
    tr = tuple(sum(r) for r in rows)
    total = sum(tr)
    s_sum = sum(d * d for i, r in enumerate(rows) for d in r[i + 1:])
    return DistanceData(
        n=g.n,
        dist=dist,
        tr=tr,
        wiener=total // 2,
        s_sum=s_sum,
        avg_tr=Fraction(total, g.n),
        max_tr=max(tr),
        min_tr=min(tr),
    )


def is_transmission_regular(d: DistanceData) -> bool:
    return d.is_transmission_regular()
