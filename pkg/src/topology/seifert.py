from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Sequence, Tuple

from src.topology.components.laurent_poly import LaurentPoly
from src.topology.witness import LensSpace, SurfaceParams


class SeifertInvariantViolated(ValueError):
    """Raised when a matrix is not square of even size or ``S - S^T != J``."""


class NonIntegralResult(ArithmeticError):
    """Raised when an Alexander polynomial comes out non-integral; the ``H_1`` order does
    not belong to the matrix."""


def _symplectic_entry(i: int, j: int) -> int:
    # J = direct sum of [[0, -1], [1, 0]]
    if i // 2 != j // 2 or i == j:
        return 0
    return -1 if i < j else 1


def determinant(rows: Sequence[Sequence[Any]]) -> Any:
    """Fraction-free cofactor expansion along the first row.

    Works over any commutative ring whose elements support ``+``, ``-`` and ``*``: exact
    rationals for ``det S``, Laurent polynomials for ``det(t S - S^T)``.
    """
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]

    total = None
    for column, entry in enumerate(rows[0]):
        minor = [list(row[:column]) + list(row[column + 1 :]) for row in rows[1:]]
        term = entry * determinant(minor)
        if column % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class SeifertMatrix:
    """A ``2g x 2g`` rational Seifert matrix; construction asserts ``S - S^T = J``."""

    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.entries)
        if size == 0 or size % 2 == 1 or any(len(row) != size for row in self.entries):
            raise SeifertInvariantViolated(f"Seifert matrices are 2g x 2g, got {self.entries}")
        for i in range(size):
            for j in range(size):
                if self.entries[i][j] - self.entries[j][i] != _symplectic_entry(i, j):
                    raise SeifertInvariantViolated(
                        f"S - S^T differs from J at ({i}, {j}) in {self.rows()}"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> "SeifertMatrix":
        return cls(tuple(tuple(Fraction(entry) for entry in row) for row in rows))

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self.entries

    def determinant(self) -> Fraction:
        return determinant(self.entries)


@dataclass(frozen=True)
class ConnSumSurfaceParams:
    """Integers naming the genus-one surface in ``L(p1, q1) # L(p2, q2)``."""

    a: int
    b: int
    c: int
    u1: int
    u2: int
    v1: int
    v2: int

    def as_tuple(self) -> Tuple[int, ...]:
        return self.a, self.b, self.c, self.u1, self.u2, self.v1, self.v2


def seifert_matrix_lens(space: LensSpace, params: SurfaceParams) -> SeifertMatrix:
    """Seifert matrix of ``Sigma_{a,b,c,u,v}`` in ``L(p, q)`` with ``lk(mu', mu'') = q/p``."""
    a, b, c, u, v = params.as_tuple()
    alpha = Fraction(space.q, space.p)
    return SeifertMatrix.from_rows(
        [
            [a + alpha * u * u, c - alpha * u * v],
            [c + 1 - alpha * u * v, b + alpha * v * v],
        ]
    )


def seifert_matrix_connsum(
    first: LensSpace, second: LensSpace, params: ConnSumSurfaceParams
) -> SeifertMatrix:
    """Seifert matrix of ``Sigma_{a,b,c,u1,u2,v1,v2}`` in ``L(p1, q1) # L(p2, q2)``."""
    a, b, c, u1, u2, v1, v2 = params.as_tuple()
    alpha1 = Fraction(first.q, first.p)
    alpha2 = Fraction(second.q, second.p)
    off_diagonal = alpha1 * u1 * v1 + alpha2 * u2 * v2
    return SeifertMatrix.from_rows(
        [
            [a + alpha1 * u1 * u1 + alpha2 * u2 * u2, c - off_diagonal],
            [c + 1 - off_diagonal, b + alpha1 * v1 * v1 + alpha2 * v2 * v2],
        ]
    )


def is_homology_cobordism(matrix: SeifertMatrix, h1_order: int) -> bool:
    """``|H_1(Y)| |det S| = 1``."""
    if h1_order < 1:
        raise ValueError(f"|H_1| must be positive, got {h1_order}")
    return h1_order * abs(matrix.determinant()) == 1


def alexander(matrix: SeifertMatrix, h1_order: int) -> LaurentPoly:
    """Alexander polynomial ``|H_1(Y)| t^-g det(t S - S^T)``.

    Factoring ``t^(1/2)`` out of each of the ``2g`` columns of
    ``t^(1/2) S - t^(-1/2) S^T`` leaves this integral-exponent form.

    :param matrix: The Seifert matrix.
    :param h1_order: Order of ``H_1`` of the ambient rational homology sphere.
    :return: The (integral) Alexander polynomial.
    """
    if h1_order < 1:
        raise ValueError(f"|H_1| must be positive, got {h1_order}")

    t = LaurentPoly.monomial(1, 1)
    size = len(matrix.entries)
    pencil = [[t * matrix[i, j] - matrix[j, i] for j in range(size)] for i in range(size)]

    poly = (determinant(pencil) * h1_order).shift(-matrix.genus)
    if not poly.is_integral():
        raise NonIntegralResult(f"|H_1| = {h1_order} gives non-integral {poly}")
    return poly


def is_homologically_fibered(poly: LaurentPoly, g: int) -> bool:
    """Monic up to sign with breadth exactly ``2g``."""
    if poly.is_zero():
        return False
    return poly.top_coefficient in (1, -1) and poly.breadth == 2 * g
