"""Colourability gadgets: encode k-colouring questions as realisability ones.

Given a connected graph, every edge is subdivided twice (a path of length 3)
and every non-adjacent pair is bridged by a path of length 2; one further
matrix row demands distance 2 to every original vertex and 3 to every new
one.  The resulting matrix is realisable with k extra vertices exactly when
the input graph is k-colourable: extra vertices act as colour classes, since
no extra vertex may be adjacent to both endpoints of an original edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Realisation, SimpleGraph, bfs_apsp
from .matrix import DistanceMatrix, RawMatrix, validate
from .solvers import SearchSpaceTooLarge


class DisconnectedInput(ValueError):
    """The colourability input graph must be connected."""


class ImproperColouring(ValueError):
    """Adjacent vertices were assigned the same colour."""


class MalformedRealisation(ValueError):
    """The given graph cannot be a realisation of the gadget matrix."""


@dataclass(frozen=True)
class Colouring:
    """Colour per vertex, 1-based: vertex i has colour ``colours[i - 1]``."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        for c in self.colours:
            if not 1 <= c <= self.k:
                raise ValueError(f"colour {c} out of range 1..{self.k}")

    def colour_of(self, vertex: int) -> int:
        return self.colours[vertex - 1]


@dataclass(frozen=True)
class GadgetInstance:
    """A reduced instance: source graph, gadget graph, and target matrix.

    Gadget vertices 1..n_c are the source vertices; subdivision vertices
    come next (two per source edge, edges in lexicographic order), then one
    middle vertex per non-adjacent source pair (also lexicographic).  The
    matrix has dimension n = n_g + 1.
    """

    source: SimpleGraph
    gadget: SimpleGraph
    matrix: DistanceMatrix
    subdivision_map: dict[tuple[int, int], tuple[int, int]]
    nonadjacent_map: dict[tuple[int, int], int]

    @property
    def n_c(self) -> int:
        return self.source.vertex_count

    @property
    def n_g(self) -> int:
        return self.gadget.vertex_count

    @property
    def n(self) -> int:
        return self.matrix.n


def _is_connected(g: SimpleGraph) -> bool:
    adj = g.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.vertex_count


def reduce(g: SimpleGraph) -> GadgetInstance:
    """Build the gadget graph and its distance matrix for an input graph."""
    if g.anchor_count != g.vertex_count:
        raise ValueError("every vertex of the input graph must be colourable")
    if not _is_connected(g):
        raise DisconnectedInput("input graph must be connected")
    nc = g.vertex_count
    nxt = nc + 1
    gadget_edges: list[tuple[int, int]] = []
    subdivision: dict[tuple[int, int], tuple[int, int]] = {}
    nonadjacent: dict[tuple[int, int], int] = {}
    for u, v in g.sorted_edges():
        a, b = nxt, nxt + 1
        nxt += 2
        gadget_edges.extend([(u, a), (a, b), (v, b)])
        subdivision[(u, v)] = (a, b)
    for u in range(1, nc + 1):
        for v in range(u + 1, nc + 1):
            if (u, v) not in g.edges:
                mid = nxt
                nxt += 1
                gadget_edges.extend([(u, mid), (v, mid)])
                nonadjacent[(u, v)] = mid
    ng = nxt - 1
    gadget = SimpleGraph.make(ng, ng, gadget_edges)
    gd = bfs_apsp(gadget).entries
    rows = [
        tuple(gd[i]) + (2 if i < nc else 3,) for i in range(ng)
    ]
    rows.append(tuple(2 if i < nc else 3 for i in range(ng)) + (0,))
    matrix = validate(RawMatrix(tuple(rows)))
    return GadgetInstance(g, gadget, matrix, subdivision, nonadjacent)


def realise_from_colouring(inst: GadgetInstance, c: Colouring) -> Realisation:
    """Realisation of the gadget matrix on n + k vertices from a colouring.

    Extra vertex n + j holds colour class j: it is adjacent to vertex n and
    to exactly the original vertices coloured j.  Properness of the
    colouring is what keeps original edges at distance 3.
    """
    nc = inst.n_c
    if len(c.colours) != nc:
        raise ValueError("colouring size does not match the source graph")
    for u, v in inst.source.edges:
        if c.colour_of(u) == c.colour_of(v):
            raise ImproperColouring(f"vertices {u} and {v} share colour")
    n = inst.n
    edges = set(inst.gadget.edges)
    for j in range(1, c.k + 1):
        edges.add((n, n + j))
    for i in range(1, nc + 1):
        edges.add((i, n + c.colour_of(i)))
    g = SimpleGraph(n + c.k, n, frozenset(edges))
    return Realisation(g, inst.matrix)


def extract_colouring(inst: GadgetInstance, r: Realisation, k: int) -> Colouring:
    """Read a proper k-colouring back off a realisation of a gadget matrix.

    Each original vertex takes the colour of the lowest-indexed extra vertex
    adjacent to it.  In a genuine realisation every original vertex has such
    a neighbour (its distance-2 requirement to vertex n forces one) and no
    extra vertex can serve both ends of an original edge.
    """
    n = inst.n
    g = r.graph
    if g.anchor_count != n or g.vertex_count > n + k:
        raise ValueError("realisation does not fit the gadget instance")
    adj = g.adjacency()
    colours = []
    for i in range(1, inst.n_c + 1):
        extras = [u - n for u in adj[i] if u > n]
        if not extras:
            raise MalformedRealisation(
                f"original vertex {i} has no extra-vertex neighbour"
            )
        colours.append(min(extras))
    for u, v in inst.source.edges:
        if colours[u - 1] == colours[v - 1]:
            raise MalformedRealisation(
                f"adjacent vertices {u} and {v} would share a colour"
            )
    return Colouring(k, tuple(colours))


def proper_colouring(g: SimpleGraph, k: int) -> Colouring | None:
    """A proper k-colouring by backtracking, or None.

    Vertex 1 is pinned to colour 1, which prunes colour permutations.
    """
    n = g.vertex_count
    adj = g.adjacency()
    assign = [0] * (n + 1)

    def bt(v: int) -> bool:
        if v > n:
            return True
        limit = 1 if v == 1 else k
        for col in range(1, limit + 1):
            if all(assign[u] != col for u in adj[v]):
                assign[v] = col
                if bt(v + 1):
                    return True
                assign[v] = 0
        return False

    if not bt(1):
        return None
    return Colouring(k, tuple(assign[1:]))


def chromatic_number_bruteforce(g: SimpleGraph, max_vertices: int = 10) -> int:
    """Least k admitting a proper colouring, by exhaustive search."""
    if g.vertex_count > max_vertices:
        raise SearchSpaceTooLarge(
            f"{g.vertex_count} vertices exceeds the guard of {max_vertices}"
        )
    for k in range(1, g.vertex_count + 1):
        if proper_colouring(g, k) is not None:
            return k
    raise AssertionError("unreachable: n colours always suffice")
