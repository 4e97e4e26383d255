"""Validated integer distance matrices.

A distance matrix is a square symmetric matrix of non-negative integers with
zero diagonal, strictly positive off-diagonal entries, and the triangle
inequality.  These are exactly the matrices that arise as pairwise
shortest-path hop counts among a set of anchor vertices in some unweighted
graph, so validation is the entry gate for every solver in this package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

# Hop counts in any realisation are bounded by the vertex count, so entries
# beyond 32 bits are rejected at the parsing layer.
MAX_ENTRY = 2**32 - 1


class ViolationKind(enum.Enum):
    NOT_SQUARE = "not-square"
    DIAGONAL_NONZERO = "diagonal-nonzero"
    OFF_DIAGONAL_ZERO = "off-diagonal-zero"
    ASYMMETRIC = "asymmetric"
    TRIANGLE_VIOLATION = "triangle-violation"


class ValidationError(ValueError):
    """One concrete axiom violation, with 1-based indices exhibiting it."""

    def __init__(self, kind: ViolationKind, witness: tuple[int, ...]):
        self.kind = kind
        self.witness = witness
        super().__init__(f"{kind.value} at {witness}")


@dataclass(frozen=True)
class RawMatrix:
    """A square matrix of non-negative integers, not yet validated."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValidationError(ViolationKind.NOT_SQUARE, ())
        for idx, row in enumerate(self.entries, 1):
            if len(row) != n:
                raise ValidationError(ViolationKind.NOT_SQUARE, (idx,))
            for x in row:
                if x < 0:
                    raise ValueError(f"negative entry in row {idx}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "RawMatrix":
        return RawMatrix(tuple(tuple(int(x) for x in row) for row in rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """A matrix that passed :func:`validate`.  Construct via ``validate``."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def dist(self, i: int, j: int) -> int:
        """Entry at row i, column j, 1-based."""
        return self.entries[i - 1][j - 1]


def validate(m: RawMatrix) -> DistanceMatrix:
    """Check the distance-matrix axioms and return the validated matrix.

    Raises :class:`ValidationError` carrying the first violation found, in a
    fixed scan order: diagonal, then symmetry, then off-diagonal positivity,
    then the triangle inequality, each in row-major index order.
    """
    e = m.entries
    n = m.n
    for i in range(n):
        if e[i][i] != 0:
            raise ValidationError(ViolationKind.DIAGONAL_NONZERO, (i + 1,))
    for i in range(n):
        for j in range(i + 1, n):
            if e[i][j] != e[j][i]:
                raise ValidationError(ViolationKind.ASYMMETRIC, (i + 1, j + 1))
    for i in range(n):
        for j in range(n):
            if i != j and e[i][j] == 0:
                raise ValidationError(ViolationKind.OFF_DIAGONAL_ZERO, (i + 1, j + 1))
    for i in range(n):
        for j in range(n):
            for w in range(n):
                if e[i][w] + e[w][j] < e[i][j]:
                    raise ValidationError(
                        ViolationKind.TRIANGLE_VIOLATION, (i + 1, j + 1, w + 1)
                    )
    return DistanceMatrix(e)


def distance_matrix(rows: Iterable[Sequence[int]]) -> DistanceMatrix:
    """Convenience: build and validate in one step."""
    return validate(RawMatrix.from_rows(rows))


def max_entry(d: DistanceMatrix) -> int:
    """Largest entry of the matrix; 0 exactly when n = 1."""
    return max(max(row) for row in d.entries)
