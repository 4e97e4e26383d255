"""Tree realisability: certificate check, construction, and expansion.

A matrix has an unweighted tree realisation iff it passes the classical
four-point and parity conditions, iff its unique minimum weighted tree
realisation exists and has integer edge weights.  The builder here inserts
anchors one at a time into a growing weighted tree, working throughout in
*doubled* integer weights so that half-integer branch points are exact and
no floating point ever appears.  Correctness does not rest on the insertion
heuristic: after the canonical transformation the result is verified against
the matrix, and since the minimal tree realisation is unique, a verified
output is the answer and any verification failure is a sound "no tree".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Realisation, SimpleGraph
from .matrix import DistanceMatrix


class ZViolationKind(enum.Enum):
    PARITY_TRIPLE = "parity-triple"
    FOUR_POINT = "four-point"
    METRIC = "metric"


@dataclass(frozen=True)
class ZareckiiReport:
    holds: bool
    violation: tuple[ZViolationKind, tuple[int, ...]] | None = None


@dataclass(frozen=True)
class WeightedTree:
    """Tree with positive half-integer edge weights, stored doubled.

    ``edges`` holds (u, v, doubled_weight) with u < v; the real weight of an
    edge is doubled_weight / 2.  Anchors are vertices 1..anchor_count.
    """

    vertex_count: int
    anchor_count: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self) -> None:
        if not 1 <= self.anchor_count <= self.vertex_count:
            raise ValueError("anchor_count out of range")
        if len(self.edges) != self.vertex_count - 1:
            raise ValueError("edge count does not match a tree")
        seen = {1}
        adj = self.adjacency()
        stack = [1]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.vertex_count:
            raise ValueError("tree is not connected")
        for u, v, w in self.edges:
            if not 1 <= u < v <= self.vertex_count:
                raise ValueError(f"bad edge ({u}, {v})")
            if w < 1:
                raise ValueError("zero-weight edge")

    def adjacency(self) -> dict[int, dict[int, int]]:
        adj: dict[int, dict[int, int]] = {
            v: {} for v in range(1, self.vertex_count + 1)
        }
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj


def check_zareckii(d: DistanceMatrix) -> ZareckiiReport:
    """Decide tree realisability by the parity and four-point conditions.

    Scans triples for even perimeter and quadruples for "the maximum of the
    three pairing sums is attained at least twice", reporting the first
    violating index tuple in lexicographic order.  Triples and quadruples
    with repeated indices satisfy the conditions automatically for a
    validated matrix, so only strictly increasing tuples are scanned.
    """
    e = d.entries
    n = d.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (e[i][j] + e[i][k] + e[j][k]) % 2:
                    return ZareckiiReport(
                        False, (ZViolationKind.PARITY_TRIPLE, (i + 1, j + 1, k + 1))
                    )
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    sums = sorted(
                        (
                            e[i][j] + e[k][l],
                            e[i][k] + e[j][l],
                            e[i][l] + e[j][k],
                        )
                    )
                    if sums[1] != sums[2]:
                        return ZareckiiReport(
                            False,
                            (
                                ZViolationKind.FOUR_POINT,
                                (i + 1, j + 1, k + 1, l + 1),
                            ),
                        )
    return ZareckiiReport(True, None)


def _add_edge(adj: dict[int, dict[int, int]], a: int, b: int, w: int) -> None:
    assert b not in adj.setdefault(a, {})
    adj[a][b] = w
    adj.setdefault(b, {})[a] = w


def _tree_path(adj: dict[int, dict[int, int]], src: int, dst: int) -> list[int]:
    parent: dict[int, int] = {src: 0}
    stack = [src]
    while stack:
        v = stack.pop()
        if v == dst:
            break
        for u in sorted(adj[v]):
            if u not in parent:
                parent[u] = v
                stack.append(u)
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _doubled_distances_from(
    adj: dict[int, dict[int, int]], src: int
) -> dict[int, int]:
    dist = {src: 0}
    stack = [src]
    while stack:
        v = stack.pop()
        dv = dist[v]
        for u, w in adj[v].items():
            if u not in dist:
                dist[u] = dv + w
                stack.append(u)
    return dist


def _canonical_adj(
    adj: dict[int, dict[int, int]], anchor_count: int
) -> dict[int, dict[int, int]]:
    adj = {v: dict(nbrs) for v, nbrs in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v in adj and v > anchor_count and len(adj[v]) == 1:
                (nb,) = adj[v]
                del adj[nb][v]
                del adj[v]
                changed = True
    while True:
        v = next(
            (u for u in sorted(adj) if u > anchor_count and len(adj[u]) == 2),
            None,
        )
        if v is None:
            break
        (a, wa), (b, wb) = sorted(adj[v].items())
        del adj[a][v]
        del adj[b][v]
        del adj[v]
        _add_edge(adj, a, b, wa + wb)
    return adj


def _freeze(adj: dict[int, dict[int, int]], anchor_count: int) -> WeightedTree:
    """Renumber Steiner vertices contiguously after the anchors."""
    steiner = sorted(v for v in adj if v > anchor_count)
    rename = {v: anchor_count + 1 + i for i, v in enumerate(steiner)}

    def nm(v: int) -> int:
        return v if v <= anchor_count else rename[v]

    edges = frozenset(
        (nm(v), nm(u), w)
        for v, nbrs in adj.items()
        for u, w in nbrs.items()
        if nm(v) < nm(u)
    )
    return WeightedTree(anchor_count + len(steiner), anchor_count, edges)


def canonical_transform(t: WeightedTree) -> WeightedTree:
    """Drop non-anchor leaves, then merge through non-anchor degree-2 vertices.

    Anchor-pair path lengths are preserved and the operation is idempotent;
    the result has no non-anchor vertex of degree two or less.
    """
    return _freeze(_canonical_adj(t.adjacency(), t.anchor_count), t.anchor_count)


def build_weighted_tree(d: DistanceMatrix) -> WeightedTree | None:
    """The minimum weighted tree realisation of d, or None if none exists.

    Anchors are inserted incrementally: for each new anchor the placed pair
    with the smallest Gromov product (ties broken lexicographically) locates
    the attachment point on its connecting path, splitting an edge with a
    fresh Steiner vertex when the point is interior.  The finished tree is
    canonicalised and then verified pair by pair; by uniqueness of the
    minimal realisation a verified tree is the answer, and any structural
    impossibility or verification mismatch means no tree realisation exists.
    """
    n = d.n
    adj: dict[int, dict[int, int]] = {1: {}}
    next_steiner = n + 1
    for i in range(2, n + 1):
        if i == 2:
            _add_edge(adj, 1, 2, 2 * d.dist(1, 2))
            continue
        best: tuple[int, int, int] | None = None
        for j in range(1, i):
            for k in range(j + 1, i):
                g2 = d.dist(i, j) + d.dist(i, k) - d.dist(j, k)
                if best is None or g2 < best[0]:
                    best = (g2, j, k)
        assert best is not None
        g2, j, k = best
        path = _tree_path(adj, j, k)
        pos = [0]
        for a, b in zip(path, path[1:]):
            pos.append(pos[-1] + adj[a][b])
        t = d.dist(i, j) + d.dist(j, k) - d.dist(i, k)
        if t < 0 or t > pos[-1]:
            return None
        p = None
        for s in range(len(path)):
            if pos[s] == t:
                p = path[s]
                break
            if pos[s] > t:
                a, b = path[s - 1], path[s]
                w = next_steiner
                next_steiner += 1
                del adj[a][b]
                del adj[b][a]
                _add_edge(adj, a, w, t - pos[s - 1])
                _add_edge(adj, w, b, pos[s] - t)
                p = w
                break
        assert p is not None
        if g2 == 0:
            if p <= n:
                # Two distinct anchors cannot occupy the same point.
                return None
            adj[i] = adj.pop(p)
            for u in adj[i]:
                adj[u][i] = adj[u].pop(p)
        else:
            _add_edge(adj, p, i, g2)
    adj = _canonical_adj(adj, n)
    for i in range(1, n + 1):
        reach = _doubled_distances_from(adj, i)
        for j in range(1, n + 1):
            if reach.get(j) != 2 * d.dist(i, j):
                return None
    return _freeze(adj, n)


def solve_tree(d: DistanceMatrix) -> Realisation | None:
    """Unweighted minimal tree realisation of d, or None if none exists.

    Builds the minimum weighted tree, rejects it when any weight is not an
    integer (odd doubled weight), and otherwise expends each weight-w edge
    into a path of w - 1 fresh auxiliary vertices.  All leaves of the result
    are anchors, so the returned tree is the unique minimal realisation.
    """
    wt = build_weighted_tree(d)
    if wt is None:
        return None
    if any(w % 2 for _, _, w in wt.edges):
        return None
    edges: list[tuple[int, int]] = []
    nxt = wt.vertex_count + 1
    for u, v, w2 in sorted(wt.edges):
        w = w2 // 2
        if w == 1:
            edges.append((u, v))
        else:
            chain = [u] + list(range(nxt, nxt + w - 1)) + [v]
            nxt += w - 1
            edges.extend((min(a, b), max(a, b)) for a, b in zip(chain, chain[1:]))
    g = SimpleGraph(nxt - 1, d.n, frozenset(edges))
    return Realisation(g, d)
