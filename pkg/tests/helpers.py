"""Independent oracles and shared generators for the test suite.

Everything here deliberately avoids the library code paths it is used to
check: the 2-SAT oracle enumerates assignments as a bitmap, the weighted
APSP oracle is Dijkstra (the library uses Floyd-Warshall), distances are
re-derived with a standalone BFS, and labelled trees come from sequence
decoding rather than the incremental builder.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from itertools import combinations, permutations, product

from combdmr import SimpleGraph, generate
from combdmr.matrix import DistanceMatrix, RawMatrix, validate
from combdmr.twosat import TwoSatInstance

INF = float("inf")


# -- fixed reference instances -------------------------------------------------

ALL_TWOS_3 = [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
ALL_ONES_3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
EIGHT_BY_EIGHT = [
    [0, 2, 2, 2, 1, 3, 3, 1],
    [2, 0, 2, 2, 3, 1, 3, 1],
    [2, 2, 0, 2, 3, 1, 1, 3],
    [2, 2, 2, 0, 1, 3, 1, 3],
    [1, 3, 3, 1, 0, 4, 2, 2],
    [3, 1, 1, 3, 4, 0, 2, 2],
    [3, 3, 1, 1, 2, 2, 0, 4],
    [1, 1, 3, 3, 2, 2, 4, 0],
]
FOUR_CYCLE_METRIC = [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
QUAD_GRAPH_EDGES = [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]


def dm(rows) -> DistanceMatrix:
    return validate(RawMatrix.from_rows(rows))


# -- independent metric check ------------------------------------------------

def brute_is_distance_matrix(rows) -> bool:
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    for i in range(n):
        if rows[i][i] != 0:
            return False
        for j in range(n):
            if i != j and (rows[i][j] <= 0 or rows[i][j] != rows[j][i]):
                return False
    for i in range(n):
        for j in range(n):
            for w in range(n):
                if rows[i][w] + rows[w][j] < rows[i][j]:
                    return False
    return True


# -- independent BFS ---------------------------------------------------------

def bfs_distances(vertex_count, edges, source):
    adj = [[] for _ in range(vertex_count + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [INF] * (vertex_count + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_realises(g: SimpleGraph, rows) -> bool:
    """Standalone re-verification of anchor distances against a matrix."""
    n = len(rows)
    if g.anchor_count != n:
        return False
    for i in range(1, n + 1):
        dist = bfs_distances(g.vertex_count, g.edges, i)
        for j in range(1, n + 1):
            if dist[j] != rows[i - 1][j - 1]:
                return False
    return True


# -- independent weighted APSP (Dijkstra) -------------------------------------

def dijkstra_apsp(n, weighted_edges):
    adj = [[] for _ in range(n + 1)]
    for u, v, w in weighted_edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    rows = []
    for s in range(1, n + 1):
        dist = [INF] * (n + 1)
        dist[s] = 0
        heap = [(0, s)]
        while heap:
            du, u = heapq.heappop(heap)
            if du > dist[u]:
                continue
            for v, w in adj[u]:
                alt = du + w
                if alt < dist[v]:
                    dist[v] = alt
                    heapq.heappush(heap, (alt, v))
        rows.append(tuple(dist[1:]))
    return tuple(rows)


def skeleton_closure_oracle(rows, q):
    """D^(q) computed with Dijkstra over the weighted skeleton edges."""
    n = len(rows)
    edges = [
        (i + 1, j + 1, rows[i][j])
        for i in range(n)
        for j in range(i + 1, n)
        if rows[i][j] <= q
    ]
    return dijkstra_apsp(n, edges)


def q_zero_oracle(rows) -> int:
    n = len(rows)
    if n == 1:
        return 1
    target = tuple(tuple(r) for r in rows)
    m = max(max(r) for r in rows)
    for q in range(1, m + 1):
        if skeleton_closure_oracle(rows, q) == target:
            return q
    raise AssertionError("skeleton closure never reached the matrix")


# -- exhaustive 2-SAT oracle ---------------------------------------------------

def _variable_patterns(v):
    width = 1 << v
    pats = []
    for i in range(v):
        half = 1 << i
        rep = ((1 << half) - 1) << half
        length = half * 2
        while length < width:
            rep |= rep << length
            length <<= 1
        pats.append(rep)
    return pats


def model_bitmap(inst: TwoSatInstance) -> int:
    """Bit a is set iff assignment a satisfies the instance.

    Assignment a maps variable i+1 to bool(a >> i & 1).
    """
    v = inst.variable_count
    full = (1 << (1 << v)) - 1
    pats = _variable_patterns(v)
    sat = full
    for a, b in inst.clauses:
        la = pats[a.variable - 1] ^ (full if a.negated else 0)
        lb = pats[b.variable - 1] ^ (full if b.negated else 0)
        sat &= la | lb
        if not sat:
            break
    return sat


def brute_satisfiable(inst: TwoSatInstance) -> bool:
    return model_bitmap(inst) != 0


def enumerate_models(inst: TwoSatInstance):
    bitmap = model_bitmap(inst)
    v = inst.variable_count
    while bitmap:
        low = bitmap & -bitmap
        a = low.bit_length() - 1
        yield tuple(bool(a >> i & 1) for i in range(v))
        bitmap ^= low


# -- labelled trees via sequence decoding -------------------------------------

def decode_tree(seq, m):
    """Edges of the labelled tree on [m] encoded by a length m-2 sequence."""
    degree = [1] * (m + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, m + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def all_labelled_trees(m):
    if m == 1:
        yield []
        return
    for seq in product(range(1, m + 1), repeat=m - 2):
        yield decode_tree(list(seq), m)


# -- anchor-fixing tree isomorphism -------------------------------------------

def tree_canonical_form(g: SimpleGraph) -> str:
    """Canonical encoding; equal forms mean anchor-fixing isomorphic trees."""
    adj = g.adjacency()
    n = g.vertex_count
    if n == 1:
        return "(1|)"

    degree = [0] + [len(adj[v]) for v in range(1, n + 1)]
    alive = set(range(1, n + 1))
    layer = [v for v in alive if degree[v] == 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for u in adj[v]:
                if u in alive:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centres = sorted(alive)

    def enc(v, parent):
        kids = sorted(enc(u, v) for u in adj[v] if u != parent)
        label = str(v) if v <= g.anchor_count else "*"
        return "(" + label + "|" + ",".join(kids) + ")"

    if len(centres) == 1:
        return enc(centres[0], 0)
    a, b = centres
    return "[" + ",".join(sorted((enc(a, b), enc(b, a)))) + "]"


def trees_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    return (
        a.anchor_count == b.anchor_count
        and a.vertex_count == b.vertex_count
        and tree_canonical_form(a) == tree_canonical_form(b)
    )


# -- small-graph catalogue -----------------------------------------------------

def _connected(n, edges) -> bool:
    if n == 1:
        return True
    return bfs_distances(n, edges, 1)[1 : n + 1].count(INF) == 0


def _graph_canon(n, edges):
    best = None
    for perm in permutations(range(1, n + 1)):
        mapped = tuple(
            sorted(
                (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
                for u, v in edges
            )
        )
        if best is None or mapped < best:
            best = mapped
    return best


def connected_graphs_up_to(max_n):
    """All connected graphs with at most max_n vertices, up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        seen = set()
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if not _connected(n, edges):
                continue
            canon = _graph_canon(n, edges)
            if canon in seen:
                continue
            seen.add(canon)
            out.append(SimpleGraph.make(n, n, edges))
    return out


def brute_chromatic(g: SimpleGraph) -> int:
    """Chromatic number by plain product enumeration (independent path)."""
    n = g.vertex_count
    edges = list(g.edges)
    for k in range(1, n + 1):
        for colours in product(range(k), repeat=n):
            if all(colours[u - 1] != colours[v - 1] for u, v in edges):
                return k
    raise AssertionError("unreachable")


# -- seeded instance streams ---------------------------------------------------

def metric_stream(count, max_vertices=7, seed0=1000):
    """Deterministic stream of (matrix, host_vertex_count) pairs.

    Edge density cycles from pure trees to dense graphs so that both
    realisable and unrealisable instances appear at every extra-vertex
    budget.
    """
    densities = (0.0, 0.15, 0.35, 0.6)
    out = []
    seed = seed0
    while len(out) < count:
        rng = random.Random(seed)
        seed += 1
        h = rng.randrange(2, max_vertices + 1)
        n = rng.randrange(2, h + 1)
        g = generate.random_connected_graph(rng, h, densities[seed % len(densities)])
        pool = list(range(1, h + 1))
        chosen = sorted(pool.pop(rng.randrange(len(pool))) for _ in range(n))
        rows = []
        for a in chosen:
            dist = bfs_distances(h, g.edges, a)
            rows.append([int(dist[b]) for b in chosen])
        out.append((dm(rows), h))
    return out


def minimal_tree_stream(count, seed0=5000):
    """Deterministic stream of (tree, anchor_metric) pairs, trees <= 12 vertices."""
    out = []
    seed = seed0
    while len(out) < count:
        rng = random.Random(seed)
        seed += 1
        n = rng.randrange(2, 8)
        t = generate.random_minimal_tree(rng, n)
        if t.vertex_count > 12:
            continue
        rows = []
        for a in range(1, n + 1):
            dist = bfs_distances(t.vertex_count, t.edges, a)
            rows.append([int(dist[b]) for b in range(1, n + 1)])
        out.append((t, dm(rows)))
    return out
