import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from combdmr.matrix import (
    RawMatrix,
    ValidationError,
    ViolationKind,
    distance_matrix,
    max_entry,
    validate,
)


def test_all_twos_validates():
    d = distance_matrix(helpers.ALL_TWOS_3)
    assert d.n == 3
    assert d.dist(1, 2) == 2


def test_single_vertex_validates():
    d = distance_matrix([[0]])
    assert d.n == 1
    assert max_entry(d) == 0


def test_triangle_violation_witness():
    with pytest.raises(ValidationError) as err:
        distance_matrix([[0, 5, 1], [5, 0, 1], [1, 1, 0]])
    assert err.value.kind is ViolationKind.TRIANGLE_VIOLATION
    assert err.value.witness == (1, 2, 3)
    i, j, w = err.value.witness
    rows = [[0, 5, 1], [5, 0, 1], [1, 1, 0]]
    assert rows[i - 1][w - 1] + rows[w - 1][j - 1] < rows[i - 1][j - 1]


def test_diagonal_witness():
    with pytest.raises(ValidationError) as err:
        distance_matrix([[0, 1], [1, 3]])
    assert err.value.kind is ViolationKind.DIAGONAL_NONZERO
    assert err.value.witness == (2,)


def test_asymmetric_witness():
    with pytest.raises(ValidationError) as err:
        distance_matrix([[0, 1, 2], [1, 0, 1], [3, 1, 0]])
    assert err.value.kind is ViolationKind.ASYMMETRIC
    assert err.value.witness == (1, 3)


def test_off_diagonal_zero():
    with pytest.raises(ValidationError) as err:
        distance_matrix([[0, 0], [0, 0]])
    assert err.value.kind is ViolationKind.OFF_DIAGONAL_ZERO
    assert err.value.witness == (1, 2)


def test_ragged_rejected():
    with pytest.raises(ValidationError) as err:
        RawMatrix.from_rows([[0, 1], [1, 0, 0]])
    assert err.value.kind is ViolationKind.NOT_SQUARE


def test_max_entry_reference_matrices():
    assert max_entry(distance_matrix(helpers.ALL_TWOS_3)) == 2
    assert max_entry(distance_matrix(helpers.EIGHT_BY_EIGHT)) == 4


def test_validate_idempotent():
    d = distance_matrix(helpers.EIGHT_BY_EIGHT)
    again = validate(RawMatrix(d.entries))
    assert again.entries == d.entries


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.randoms(use_true_random=False))
def test_validate_agrees_with_brute_force(n, rng):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                rows[i][j] = rng.randrange(0, 5)
    if rng.random() < 0.5:
        # Symmetrise half the time so valid matrices actually appear.
        for i in range(n):
            for j in range(i + 1, n):
                rows[j][i] = rows[i][j]
    ok = helpers.brute_is_distance_matrix(rows)
    try:
        validate(RawMatrix.from_rows(rows))
        assert ok
    except ValidationError as err:
        assert not ok
        # The witness must exhibit the claimed violation.
        kind, witness = err.kind, err.witness
        if kind is ViolationKind.DIAGONAL_NONZERO:
            (i,) = witness
            assert rows[i - 1][i - 1] != 0
        elif kind is ViolationKind.ASYMMETRIC:
            i, j = witness
            assert rows[i - 1][j - 1] != rows[j - 1][i - 1]
        elif kind is ViolationKind.OFF_DIAGONAL_ZERO:
            i, j = witness
            assert i != j and rows[i - 1][j - 1] == 0
        elif kind is ViolationKind.TRIANGLE_VIOLATION:
            i, j, t = witness
            assert rows[i - 1][t - 1] + rows[t - 1][j - 1] < rows[i - 1][j - 1]


def test_random_bfs_metrics_always_validate():
    for d, _ in helpers.metric_stream(40, seed0=7000):
        assert helpers.brute_is_distance_matrix([list(r) for r in d.entries])
