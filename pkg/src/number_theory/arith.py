from dataclasses import dataclass
from random import Random
from typing import List, Optional, Tuple

# trial-division factorization never touches inputs above this magnitude
DEFAULT_FACTOR_CAP = 10**12

# largest n for which the first 13 primes are a proven Miller-Rabin witness set
DETERMINISTIC_MR_LIMIT = 3_317_044_064_679_887_385_961_981

PROBABILISTIC_MR_ROUNDS = 40

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# (exclusive upper limit, bases) pairs, smallest first
_MR_WITNESS_SETS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (DETERMINISTIC_MR_LIMIT, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)


class NonResidue(ValueError):
    """Raised when a square root is requested for a quadratic non-residue."""


class ModulusTooLarge(ValueError):
    """Raised when an input exceeds the trial-division factorization cap."""


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization ``sign * prod(prime ** exponent)``."""

    sign: int
    factors: Tuple[Tuple[int, int], ...]

    def value(self) -> int:
        result = self.sign
        for prime, exponent in self.factors:
            result *= prime**exponent
        return result


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended Euclidean algorithm.

    :param a: First integer.
    :param b: Second integer.
    :return: ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y = g``.
    """
    if a == 0 and b == 0:
        raise ValueError("ext_gcd is undefined for (0, 0)")

    x0, x1, y0, y1 = 0, 1, 1, 0
    while a != 0:
        q, b, a = b // a, a, b % a
        y0, y1 = y1, y0 - q * y1
        x0, x1 = x1, x0 - q * x1

    if b < 0:
        return -b, -x0, -y0
    return b, x0, y0


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``; ``m`` need not be prime."""
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {m}")
    return x % m


def crt(residues: List[Tuple[int, int]]) -> Tuple[int, int]:
    """Combines ``x = r (mod m)`` congruences with pairwise coprime moduli.

    :param residues: A list of ``(r, m)`` pairs.
    :return: ``(x, M)`` with ``0 <= x < M`` and ``M`` the product of the moduli.
    """
    x, modulus = 0, 1
    for r, m in residues:
        # x + modulus * t = r (mod m)
        t = ((r - x) * mod_inverse(modulus, m)) % m
        x += modulus * t
        modulus *= m
    return x % modulus, modulus


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol ``(a | m)``; equals the Legendre symbol when ``m`` is prime.

    :param a: Any integer.
    :param m: An odd positive modulus.
    :return: One of ``-1``, ``0``, ``1``.
    """
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {m}")

    negate = False
    a %= m
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                negate = not negate
        # reciprocity
        if a % 4 == 3 and m % 4 == 3:
            negate = not negate
        a, m = m, a
        a %= m

    if m == 1:
        return -1 if negate else 1
    return 0


def _miller_rabin_round(n: int, d: int, s: int, base: int) -> bool:
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality of ``|n|``.

    Deterministic Miller-Rabin below ``DETERMINISTIC_MR_LIMIT``; above it a
    probabilistic test with ``PROBABILISTIC_MR_ROUNDS`` rounds whose bases are
    drawn from a generator seeded by ``n``, so the answer is reproducible.
    """
    n = abs(n)
    if n < 2:
        return False
    for prime in _SMALL_PRIMES:
        if n % prime == 0:
            return n == prime

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for limit, bases in _MR_WITNESS_SETS:
        if n < limit:
            return all(_miller_rabin_round(n, d, s, base) for base in bases)

    rng = Random(n)
    return all(
        _miller_rabin_round(n, d, s, rng.randrange(2, n - 1))
        for _ in range(PROBABILISTIC_MR_ROUNDS)
    )


def sqrt_mod_prime(a: int, l: int) -> int:
    """Square root of ``a`` modulo the prime ``l`` by Tonelli-Shanks.

    :param a: The radicand.
    :param l: A prime modulus.
    :return: The smaller of the two roots ``z`` and ``l - z``.
    """
    a %= l
    if a == 0 or l == 2:
        return a
    if jacobi(a, l) != 1:
        raise NonResidue(f"{a} is not a quadratic residue modulo {l}")

    if l % 4 == 3:
        z = pow(a, (l + 1) // 4, l)
    else:
        # l - 1 = q * 2^s with q odd
        q, s = l - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1

        nonresidue = 2
        while jacobi(nonresidue, l) != -1:
            nonresidue += 1

        c = pow(nonresidue, q, l)
        z = pow(a, (q + 1) // 2, l)
        t = pow(a, q, l)
        m = s
        while t != 1:
            # least i with t^(2^i) = 1
            i, t2i = 0, t
            while t2i != 1:
                t2i = t2i * t2i % l
                i += 1
            b = pow(c, 1 << (m - i - 1), l)
            z = z * b % l
            c = b * b % l
            t = t * c % l
            m = i

    assert z * z % l == a
    return min(z, l - z)


def _sqrt_mod_unit_prime_power(a: int, prime: int, exponent: int) -> Optional[int]:
    """Root of a unit ``a`` modulo ``prime ** exponent``."""
    modulus = prime**exponent
    a %= modulus

    if prime == 2:
        if exponent == 1:
            return 1
        if exponent == 2:
            return 1 if a % 4 == 1 else None
        if a % 8 != 1:
            return None
        z = 1
        for j in range(4, exponent + 1):
            if (z * z - a) % (1 << j) != 0:
                z += 1 << (j - 2)
        return z % modulus

    try:
        z = sqrt_mod_prime(a, prime)
    except NonResidue:
        return None

    # Hensel lifting one power at a time
    power = prime
    for _ in range(exponent - 1):
        power *= prime
        z = (z - (z * z - a) * mod_inverse(2 * z, power)) % power
    return z


def _sqrt_mod_prime_power(a: int, prime: int, exponent: int) -> Optional[int]:
    modulus = prime**exponent
    a %= modulus
    if a == 0:
        return 0

    valuation = 0
    while a % prime == 0:
        a //= prime
        valuation += 1
    if valuation % 2 == 1:
        return None

    unit_root = _sqrt_mod_unit_prime_power(a, prime, exponent - valuation)
    if unit_root is None:
        return None
    return prime ** (valuation // 2) * unit_root % modulus


def sqrt_mod(a: int, m: int, cap: int = DEFAULT_FACTOR_CAP) -> Optional[int]:
    """Some ``z`` with ``z^2 = a (mod m)``, or ``None`` when there is none.

    The modulus is factored by trial division, roots are found per prime power
    (the prime 2 lifted separately) and recombined by the CRT.

    :param a: The radicand.
    :param m: A modulus ``>= 2``.
    :param cap: Largest modulus magnitude accepted for factorization.
    :return: A root in ``[0, m)`` or ``None``.
    """
    if m < 2:
        raise ValueError(f"sqrt_mod needs a modulus >= 2, got {m}")

    residues = []
    for prime, exponent in factorize(m, cap=cap).factors:
        root = _sqrt_mod_prime_power(a, prime, exponent)
        if root is None:
            return None
        residues.append((root, prime**exponent))

    z, _ = crt(residues)
    return z


def factorize(n: int, cap: int = DEFAULT_FACTOR_CAP) -> Factorization:
    """Trial-division factorization of a nonzero integer.

    :param n: The integer to factor.
    :param cap: Largest ``|n|`` accepted.
    :return: The signed factorization of ``n`` with increasing primes.
    """
    if n == 0:
        raise ValueError("Cannot factor zero")
    if abs(n) > cap:
        raise ModulusTooLarge(f"|{n}| exceeds the factorization cap {cap}")

    sign = 1 if n > 0 else -1
    n = abs(n)
    factors = []

    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            exponent = 0
            while n % divisor == 0:
                n //= divisor
                exponent += 1
            factors.append((divisor, exponent))
        divisor += 1 if divisor == 2 else 2
    if n > 1:
        factors.append((n, 1))

    return Factorization(sign=sign, factors=tuple(factors))


def squarefree_part(n: int, cap: int = DEFAULT_FACTOR_CAP) -> int:
    """Signed squarefree ``s`` with ``n = s * k^2``; ``s`` has the sign of ``n``."""
    factorization = factorize(n, cap=cap)
    s = factorization.sign
    for prime, exponent in factorization.factors:
        if exponent % 2 == 1:
            s *= prime
    return s


def two_adic_valuation(n: int) -> int:
    """Exponent of 2 in a nonzero integer."""
    if n == 0:
        raise ValueError("The 2-adic valuation of zero is infinite")
    return (n & -n).bit_length() - 1
