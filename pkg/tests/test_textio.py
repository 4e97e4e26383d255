import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from combdmr import Colouring, SimpleGraph
from combdmr.matrix import distance_matrix
from combdmr.textio import (
    ParseError,
    emit_colouring,
    emit_graph,
    emit_matrix,
    emit_weighted_tree,
    parse_colouring,
    parse_graph,
    parse_matrix,
    to_dot,
)
from combdmr.tree import WeightedTree


def test_parse_matrix_example():
    raw = parse_matrix("0 2 2\n2 0 2\n2 2 0\n")
    assert raw.entries == tuple(tuple(r) for r in helpers.ALL_TWOS_3)


def test_parse_matrix_ignores_comments_and_blanks():
    raw = parse_matrix("# header\n\n0 1\n1 0\n\n")
    assert raw.n == 2


def test_parse_matrix_ragged_line_number():
    with pytest.raises(ParseError) as err:
        parse_matrix("0 1\n1 0 0\n")
    assert err.value.line == 2


def test_parse_matrix_rejects_garbage():
    with pytest.raises(ParseError):
        parse_matrix("0 x\n1 0\n")
    with pytest.raises(ParseError):
        parse_matrix("0 -1\n-1 0\n")
    with pytest.raises(ParseError):
        parse_matrix(f"0 {2**32}\n{2**32} 0\n")
    with pytest.raises(ParseError):
        parse_matrix("# nothing\n")


def test_matrix_round_trip():
    d = distance_matrix(helpers.EIGHT_BY_EIGHT)
    assert parse_matrix(emit_matrix(d)).entries == d.entries


def test_emit_graph_star():
    g = SimpleGraph.make(4, 3, [(1, 4), (2, 4), (3, 4)])
    assert emit_graph(g) == "graph 4 3\n1 4\n2 4\n3 4\n"


def test_parse_graph_header_errors():
    with pytest.raises(ParseError):
        parse_graph("4 3\n1 2\n")
    with pytest.raises(ParseError):
        parse_graph("graph 0 0\n")
    with pytest.raises(ParseError):
        parse_graph("graph 3 1\n1 1\n")
    with pytest.raises(ParseError):
        parse_graph("graph 3 1\n2 1\n")
    with pytest.raises(ParseError):
        parse_graph("graph 3 1\n1 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_graph("")


def test_graph_round_trip():
    g = SimpleGraph.make(5, 2, [(1, 2), (2, 5), (3, 4)])
    assert parse_graph(emit_graph(g)) == g


@settings(max_examples=150, deadline=None)
@given(st.randoms(use_true_random=False))
def test_graph_round_trip_random(rng):
    n = rng.randrange(1, 9)
    anchors = rng.randrange(1, n + 1)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < 0.4
    ]
    g = SimpleGraph.make(n, anchors, edges)
    assert parse_graph(emit_graph(g)) == g


def test_colouring_round_trip():
    c = Colouring(3, (1, 3, 2, 1))
    assert parse_colouring(emit_colouring(c)).colours == c.colours


def test_colouring_parse_errors():
    with pytest.raises(ParseError):
        parse_colouring("1 1\n3 2\n")  # vertex 2 missing
    with pytest.raises(ParseError):
        parse_colouring("1 1\n1 2\n")
    with pytest.raises(ParseError):
        parse_colouring("1\n")
    with pytest.raises(ParseError):
        parse_colouring("")


def test_weighted_tree_emit():
    t = WeightedTree(3, 2, frozenset({(1, 3, 2), (2, 3, 3)}))
    assert emit_weighted_tree(t) == "1 3 2\n2 3 3\n"


def test_dot_export_deterministic():
    g = SimpleGraph.make(3, 2, [(1, 3), (2, 3)])
    assert to_dot(g) == (
        "graph {\n"
        "  1;\n"
        "  2;\n"
        "  3 [style=dashed];\n"
        "  1 -- 3;\n"
        "  2 -- 3;\n"
        "}\n"
    )
