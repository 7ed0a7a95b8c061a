from dataclasses import dataclass
from typing import Tuple


class CongruenceViolated(ValueError):
    """Raised when ``z0^2 = Delta (mod 4 n)`` fails for a requested form."""


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """The form ``f(x, y) = a x^2 + b x y + c y^2``."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.a, self.b, self.c


def discriminant(f: BinaryQuadraticForm) -> int:
    return f.discriminant


def evaluate(f: BinaryQuadraticForm, x: int, y: int) -> int:
    return f.evaluate(x, y)


def form_from_sqrt(
    z0: int, n_rep: int, delta: int
) -> Tuple[BinaryQuadraticForm, int, int]:
    """Builds a form of discriminant ``delta`` that represents ``n_rep`` primitively.

    The form is ``(n_rep, z0, (z0^2 - delta) / (4 n_rep))`` and the representation is
    the principal one, ``f(1, 0) = n_rep``. ``n_rep`` may be negative.

    :param z0: A square root of ``delta`` modulo ``4 n_rep``.
    :param n_rep: The nonzero integer to represent.
    :param delta: The discriminant.
    :return: The form and the primitive solution ``(1, 0)``.
    """
    if n_rep == 0:
        raise ValueError("The represented integer must be nonzero")

    numerator = z0 * z0 - delta
    if numerator % (4 * n_rep) != 0:
        raise CongruenceViolated(
            f"{z0}^2 is not congruent to {delta} modulo {4 * n_rep}"
        )

    f = BinaryQuadraticForm(a=n_rep, b=z0, c=numerator // (4 * n_rep))
    assert f.discriminant == delta and f.evaluate(1, 0) == n_rep
    return f, 1, 0
