"""Deciders for realisability with at most k extra vertices.

For k = 0 the unit graph either works or nothing does.  For k = 1 and k = 2
the free choices are exactly which anchors the extra vertices attach to, and
those choices are captured by 2-CNF formulas over edge variables: one
formula for a single extra vertex, one for two non-adjacent extras, and an
extended one for two adjacent extras.  Any single satisfying assignment is
as good as any other (the induced anchor metric is assignment-invariant),
so each decider solves once, builds the induced graph, and compares anchor
distances against the target matrix.

``solve_exact`` is the independent brute-force oracle: it fixes the anchor
subgraph to the unit graph (forced in every realisation) and enumerates all
subsets of the candidate edges touching the extra vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import twosat
from .graph import (
    Realisation,
    SimpleGraph,
    anchor_distances,
    bfs_apsp,
    q_skeleton,
    q_zero,
    skeleton_distances,
    unit_graph,
    verify_realisation,
)
from .matrix import DistanceMatrix
from .twosat import TwoSatInstance, neg, pos


class SearchSpaceTooLarge(Exception):
    """An exhaustive search guard was exceeded."""


@dataclass(frozen=True)
class SolveOutcome:
    answer: bool
    realisation: Realisation | None
    extra_vertices_used: int


@dataclass(frozen=True)
class Bounds:
    """Vertex-count bounds for any realisation of a matrix.

    ``lower`` is n + (q0 - 1): some pair needs an elementary path of length
    q0, whose interior is all auxiliary.  ``upper`` counts the canonical
    construction that expands every q0-skeleton edge into an elementary path.
    """

    q0: int
    lower: int
    upper: int


_NO = SolveOutcome(False, None, 0)


def bounds(d: DistanceMatrix) -> Bounds:
    q0 = q_zero(d)
    n = d.n
    extra = sum(
        d.dist(i, j) - 1
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if 2 <= d.dist(i, j) <= q0
    )
    return Bounds(q0, n + q0 - 1, n + extra)


def solve_k0(d: DistanceMatrix) -> SolveOutcome:
    """Realisable on exactly the anchors iff the unit graph already works."""
    g = unit_graph(d)
    if verify_realisation(g, d):
        return SolveOutcome(True, Realisation(g, d), 0)
    return _NO


def build_phi1(d: DistanceMatrix) -> TwoSatInstance:
    """2-CNF over x_i = "anchor i is adjacent to the single extra vertex".

    Pairs at distance > 2 must not both attach (that would shortcut them to
    2); pairs at distance exactly 2 that the unit graph leaves further apart
    than 2 have no other way to meet, so both their variables are forced.
    """
    n = d.n
    gd = bfs_apsp(unit_graph(d))
    clauses: list[twosat.Clause] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.dist(i, j) > 2:
                clauses.append((neg(i), neg(j)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.dist(i, j) == 2 and gd.dist(i, j) > 2:
                clauses.append((pos(i), pos(i)))
                clauses.append((pos(j), pos(j)))
    return TwoSatInstance(n, tuple(clauses))


def build_phi2(d: DistanceMatrix) -> TwoSatInstance:
    """2-CNF for two non-adjacent extra vertices.

    Variable numbering: attachment of anchor i to the first extra vertex is
    variable i, to the second is n + i.  The forced pairs now only need one
    of the two extras to carry both endpoints; expanding that disjunction of
    conjunctions distributively gives four clauses per pair.
    """
    n = d.n
    gd = bfs_apsp(unit_graph(d))

    def x1(i: int) -> int:
        return i

    def x2(i: int) -> int:
        return n + i

    clauses: list[twosat.Clause] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.dist(i, j) > 2:
                clauses.append((neg(x1(i)), neg(x1(j))))
                clauses.append((neg(x2(i)), neg(x2(j))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.dist(i, j) == 2 and gd.dist(i, j) > 2:
                clauses.append((pos(x1(i)), pos(x2(i))))
                clauses.append((pos(x1(i)), pos(x2(j))))
                clauses.append((pos(x1(j)), pos(x2(i))))
                clauses.append((pos(x1(j)), pos(x2(j))))
    return TwoSatInstance(2 * n, tuple(clauses))


def build_phi2_prime(d: DistanceMatrix) -> TwoSatInstance:
    """2-CNF for two adjacent extra vertices: a superset of ``build_phi2``.

    The extra edge makes a path of length 3 through both extras available,
    so pairs at distance > 3 must not attach across the two extras, and
    pairs at distance exactly 3 that the 2-skeleton cannot serve must be
    routed through that path in one of the two orientations.
    """
    n = d.n
    d2 = skeleton_distances(q_skeleton(d, 2))

    def x1(i: int) -> int:
        return i

    def x2(i: int) -> int:
        return n + i

    clauses = list(build_phi2(d).clauses)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.dist(i, j) > 3:
                clauses.append((neg(x1(i)), neg(x2(j))))
                clauses.append((neg(x2(i)), neg(x1(j))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.dist(i, j) == 3 and d2.dist(i, j) > 3:
                clauses.append((pos(x1(i)), pos(x2(i))))
                clauses.append((pos(x1(j)), pos(x2(j))))
                clauses.append((pos(x1(i)), pos(x1(j))))
                clauses.append((pos(x2(i)), pos(x2(j))))
    return TwoSatInstance(2 * n, tuple(clauses))


def _assignment_graph(
    d: DistanceMatrix,
    assignment: twosat.Assignment,
    extras: int,
    adjacent_extras: bool,
) -> SimpleGraph:
    """Unit graph plus extra vertices wired up according to an assignment."""
    n = d.n
    edges = set(unit_graph(d).edges)
    for t in range(extras):
        for i in range(1, n + 1):
            if assignment[t * n + i - 1]:
                edges.add((i, n + 1 + t))
    if adjacent_extras:
        edges.add((n + 1, n + 2))
    return SimpleGraph(n + extras, n, frozenset(edges))


def solve_k1(d: DistanceMatrix) -> SolveOutcome:
    """Decide realisability with at most one extra vertex."""
    base = solve_k0(d)
    if base.answer:
        return base
    assignment = twosat.solve(build_phi1(d))
    if assignment is None:
        return _NO
    g = _assignment_graph(d, assignment, 1, False)
    if anchor_distances(g).matches(d):
        return SolveOutcome(True, Realisation(g, d), 1)
    return _NO


def solve_k2(d: DistanceMatrix) -> SolveOutcome:
    """Decide realisability with at most two extra vertices."""
    base = solve_k1(d)
    if base.answer:
        return base
    assignment = twosat.solve(build_phi2(d))
    if assignment is None:
        # The non-adjacent formula is necessary for both cases.
        return _NO
    g = _assignment_graph(d, assignment, 2, False)
    if anchor_distances(g).matches(d):
        return SolveOutcome(True, Realisation(g, d), 2)
    assignment2 = twosat.solve(build_phi2_prime(d))
    if assignment2 is None:
        return _NO
    g2 = _assignment_graph(d, assignment2, 2, True)
    if anchor_distances(g2).matches(d):
        return SolveOutcome(True, Realisation(g2, d), 2)
    return _NO


def _candidate_edges(n: int, k: int) -> list[tuple[int, int]]:
    cands = [(i, n + 1 + t) for t in range(k) for i in range(1, n + 1)]
    cands.extend(
        (n + 1 + a, n + 1 + b) for a in range(k) for b in range(a + 1, k)
    )
    return cands


def solve_exact(
    d: DistanceMatrix, k: int, max_free_edges: int = 30
) -> SolveOutcome:
    """Brute-force decision for at most k extra vertices.

    Enumerates every subset of the candidate edges touching the k extra
    vertices (the anchor subgraph is forced) in increasing bitmask order and
    returns the first subset whose graph reproduces the matrix.  Isolated
    extras are allowed, so a YES means "at most n + k vertices".
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = d.n
    free = n * k + k * (k - 1) // 2
    if free > max_free_edges:
        raise SearchSpaceTooLarge(
            f"{free} free edges exceeds the guard of {max_free_edges}"
        )
    total = n + k
    base = unit_graph(d)
    base_adj = [0] * (total + 1)
    for u, v in base.edges:
        base_adj[u] |= 1 << v
        base_adj[v] |= 1 << u
    candidates = _candidate_edges(n, k)
    anchor_mask = ((1 << n) - 1) << 1
    # Bitmask of anchors required at each BFS level from each anchor.
    required: list[dict[int, int]] = [{} for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                lvl = d.dist(i, j)
                required[i][lvl] = required[i].get(lvl, 0) | (1 << j)

    def distances_match(adj: list[int]) -> bool:
        for s in range(1, n + 1):
            seen = 1 << s
            frontier = 1 << s
            level = 0
            req = required[s]
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                nxt &= ~seen
                level += 1
                if nxt & anchor_mask != req.get(level, 0):
                    return False
                seen |= nxt
                frontier = nxt
            if seen & anchor_mask != anchor_mask:
                return False
        return True

    for mask in range(1 << free):
        adj = base_adj[:]
        mm = mask
        while mm:
            low = mm & -mm
            u, v = candidates[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            mm ^= low
        if distances_match(adj):
            extra_edges = [
                candidates[b] for b in range(free) if mask >> b & 1
            ]
            g = SimpleGraph(total, n, base.edges | frozenset(extra_edges))
            return SolveOutcome(True, Realisation(g, d), k)
    return _NO
