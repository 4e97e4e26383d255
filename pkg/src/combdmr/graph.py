"""Unweighted anchored graphs and the skeleton machinery built on them.

A :class:`SimpleGraph` carries a distinguished anchor prefix: vertices
``1..anchor_count`` are the anchors that must reproduce a distance matrix,
and any further vertices are auxiliary.  The q-skeleton of a matrix is the
weighted graph on the anchors with an edge of weight ``D_ij`` whenever
``D_ij <= q``; its shortest-path closure decides, among other things, how
many auxiliary vertices a realisation needs at minimum.

All distances are exact integers; unreachable pairs are ``math.inf``
(arithmetic saturates, comparisons against integer thresholds just work).
Vertex indices are 1-based throughout.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .matrix import DistanceMatrix, max_entry

INF = math.inf


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph with anchors 1..anchor_count."""

    vertex_count: int
    anchor_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        if not 1 <= self.anchor_count <= self.vertex_count:
            raise ValueError("anchor_count out of range")
        for u, v in self.edges:
            if not 1 <= u < v <= self.vertex_count:
                raise ValueError(f"bad edge ({u}, {v})")

    @staticmethod
    def make(
        vertex_count: int, anchor_count: int, edges: Iterable[tuple[int, int]]
    ) -> "SimpleGraph":
        """Normalise edge endpoint order and reject self-loops."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            norm.add((u, v) if u < v else (v, u))
        return SimpleGraph(vertex_count, anchor_count, frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists indexed by vertex; slot 0 unused."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class ExtendedDistances:
    """Symmetric distance table; ``math.inf`` marks unreachable pairs."""

    entries: tuple[tuple[int | float, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def dist(self, i: int, j: int) -> int | float:
        return self.entries[i - 1][j - 1]

    def matches(self, d: DistanceMatrix) -> bool:
        """True when every entry is finite and equals the matrix entry."""
        return self.n == d.n and self.entries == d.entries


@dataclass(frozen=True)
class WeightedSkeleton:
    """Weighted graph on the anchors: edge (i, j, D_ij) whenever D_ij <= q."""

    n: int
    q: int
    weighted_edges: tuple[tuple[int, int, int], ...]


def bfs_apsp(g: SimpleGraph) -> ExtendedDistances:
    """Hop distances between all vertex pairs (``inf`` across components)."""
    adj = g.adjacency()
    rows = []
    for s in range(1, g.vertex_count + 1):
        dist: list[int | float] = [INF] * (g.vertex_count + 1)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adj[u]:
                if dist[w] is INF:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist[1:]))
    return ExtendedDistances(tuple(rows))


def anchor_distances(g: SimpleGraph) -> ExtendedDistances:
    """Hop distances restricted to the anchor prefix."""
    adj = g.adjacency()
    n = g.anchor_count
    rows = []
    for s in range(1, n + 1):
        dist: list[int | float] = [INF] * (g.vertex_count + 1)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adj[u]:
                if dist[w] is INF:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist[1 : n + 1]))
    return ExtendedDistances(tuple(rows))


def verify_realisation(g: SimpleGraph, d: DistanceMatrix) -> bool:
    """True iff anchor-to-anchor hop distances in g equal d exactly."""
    if g.anchor_count != d.n:
        raise ValueError("anchor count does not match matrix dimension")
    return anchor_distances(g).matches(d)


@dataclass(frozen=True)
class Realisation:
    """A graph together with the matrix its anchors provably realise."""

    graph: SimpleGraph
    matrix: DistanceMatrix

    def __post_init__(self) -> None:
        if not verify_realisation(self.graph, self.matrix):
            raise ValueError("graph does not realise the matrix")


def unit_graph(d: DistanceMatrix) -> SimpleGraph:
    """The graph on the anchors with an edge exactly where D_ij = 1.

    This is always the induced subgraph on the anchors of any realisation,
    which is what makes it the fixed starting point of every solver.
    """
    n = d.n
    edges = frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if d.dist(i, j) == 1
    )
    return SimpleGraph(n, n, edges)


def q_skeleton(d: DistanceMatrix, q: int) -> WeightedSkeleton:
    """Weighted anchor graph keeping pairs with D_ij <= q, weight D_ij."""
    if q < 1:
        raise ValueError("q must be positive")
    n = d.n
    edges = tuple(
        (i, j, d.dist(i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if d.dist(i, j) <= q
    )
    return WeightedSkeleton(n, q, edges)


def skeleton_distances(s: WeightedSkeleton) -> ExtendedDistances:
    """Shortest-path closure of a skeleton (Floyd-Warshall)."""
    n = s.n
    dist: list[list[int | float]] = [[INF] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0
    for i, j, w in s.weighted_edges:
        if w < dist[i - 1][j - 1]:
            dist[i - 1][j - 1] = w
            dist[j - 1][i - 1] = w
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik is INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return ExtendedDistances(tuple(tuple(row) for row in dist))


def q_zero(d: DistanceMatrix) -> int:
    """Least q whose skeleton closure reproduces the matrix.

    Always exists: at q = max entry the skeleton contains an edge for every
    pair, so its closure is the matrix itself.
    """
    if d.n == 1:
        return 1
    for q in range(1, max_entry(d) + 1):
        if skeleton_distances(q_skeleton(d, q)).matches(d):
            return q
    raise AssertionError("unreachable: the max-entry skeleton closes the matrix")


def expand_elementary_paths(s: WeightedSkeleton) -> SimpleGraph:
    """Replace each weighted edge by a path of that many unit edges.

    Every edge (i, j, w) becomes a path through w - 1 fresh auxiliary
    vertices (a direct edge when w = 1); paths share no interior vertices.
    Auxiliary vertices are numbered contiguously after the anchors, in
    lexicographic edge order, so the output is reproducible.
    """
    n = s.n
    edges: list[tuple[int, int]] = []
    nxt = n + 1
    for i, j, w in sorted(s.weighted_edges):
        if w == 1:
            edges.append((i, j))
        else:
            chain = [i] + list(range(nxt, nxt + w - 1)) + [j]
            nxt += w - 1
            edges.extend(
                (min(a, b), max(a, b)) for a, b in zip(chain, chain[1:])
            )
    return SimpleGraph(nxt - 1, n, frozenset(edges))
