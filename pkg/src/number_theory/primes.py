from dataclasses import dataclass
from math import gcd
from typing import Iterator

from src.number_theory.arith import is_prime, jacobi, mod_inverse, sqrt_mod_prime
from src.utils import pylogger

log = pylogger.WorkerLogger(__name__)

DEFAULT_PRIME_BOUND = 10**8


class NoSolutionClass(ValueError):
    """Raised for the residue class ``m = 2 (mod 5)``, where no prime witness exists."""


class SearchExhausted(RuntimeError):
    """Raised when a bounded search ends without a result; retry with a larger bound."""


@dataclass(frozen=True)
class PrimeWitness:
    """An odd prime ``l = m (mod n)`` with a root of ``n x (x + 1) = epsilon (mod l)``."""

    epsilon: int
    l: int
    root_x0: int

    def holds_for(self, m: int, n: int) -> bool:
        return (self.l - m) % n == 0 and (
            n * self.root_x0 * (self.root_x0 + 1) - self.epsilon
        ) % self.l == 0


def _validate_query(m: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if gcd(m, n) != 1:
        raise ValueError(f"m={m} and n={n} must be coprime")


def check_prime_witness(m: int, n: int, epsilon: int, l: int) -> bool:
    """Checks that ``l`` is an odd prime, ``l = m (mod n)`` and ``n x (x + 1) = epsilon
    (mod l)`` is solvable.

    Solvability is tested as ``n (n + 4 epsilon)`` being a square modulo ``l`` (zero
    included), which is the same congruence after completing the square:
    ``(2 n x + n)^2 = n^2 + 4 epsilon n (mod l)``.

    :return: ``False`` for any failing condition, including invalid queries.
    """
    if n < 1 or gcd(m, n) != 1 or epsilon not in (1, -1):
        return False
    if l < 3 or l % 2 == 0 or (l - m) % n != 0 or not is_prime(l):
        return False
    return jacobi(n * (n + 4 * epsilon), l) != -1


def _candidates(m: int, n: int, bound: int) -> Iterator[int]:
    # l = m + k n for k from the smallest k giving l >= 3
    l = m - ((m - 3) // n) * n
    while l <= bound:
        if l % 2 == 1:
            yield l
        l += n


def find_prime_witness(m: int, n: int, bound: int = DEFAULT_PRIME_BOUND) -> PrimeWitness:
    """Finds the smallest odd prime ``l = m (mod n)`` for which ``n x (x + 1) = epsilon
    (mod l)`` is solvable for some ``epsilon`` in ``{1, -1}``.

    Ties between both signs at the same ``l`` go to ``epsilon = 1``. The root is
    ``x0 = (z - n) (2 n)^-1 (mod l)`` with ``z`` the smaller square root of
    ``n (n + 4 epsilon)``.

    :param m: Residue class of the prime.
    :param n: Modulus of the class, coprime to ``m``.
    :param bound: Largest prime examined.
    :return: The minimal ``PrimeWitness``.
    """
    _validate_query(m, n)
    if n == 5 and m % 5 == 2:
        raise NoSolutionClass(
            "For n = 5 and m = 2 (mod 5) neither 5*9 nor 5*1 is a quadratic residue "
            "modulo any admissible prime"
        )

    for l in _candidates(m, n, bound):
        if not is_prime(l):
            continue
        for epsilon in (1, -1):
            if not check_prime_witness(m, n, epsilon, l):
                continue
            z = sqrt_mod_prime(n * (n + 4 * epsilon), l)
            x0 = (z - n) * mod_inverse(2 * n, l) % l
            witness = PrimeWitness(epsilon=epsilon, l=l, root_x0=x0)
            assert witness.holds_for(m, n)
            log.debug(f"Prime witness for m={m}, n={n}: {witness}")
            return witness

    raise SearchExhausted(f"No prime witness for m={m}, n={n} up to bound {bound}")
