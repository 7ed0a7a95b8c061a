from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import gcd
from typing import Optional, Set, Tuple

from src.number_theory.arith import DEFAULT_FACTOR_CAP, sqrt_mod
from src.number_theory.primes import DEFAULT_PRIME_BOUND, SearchExhausted, find_prime_witness
from src.number_theory.quadform import form_from_sqrt
from src.utils import pylogger

log = pylogger.WorkerLogger(__name__)

DEFAULT_BRUTE_BOX = 6


@dataclass(frozen=True)
class LensSpace:
    """The lens space ``L(p, q)``: ``-p/q`` surgery on the unknot, ``H_1 = Z/p``.

    ``q`` is kept as given; ``L(p, q)`` and ``L(p, q + p)`` are homeomorphic but their
    certificate arithmetic differs.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"L(p, q) needs p >= 2, got p={self.p}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"L(p, q) needs coprime p and q, got ({self.p}, {self.q})")

    def normalized(self) -> "LensSpace":
        """The same space with ``q`` reduced into ``[1, p - 1]``."""
        return LensSpace(self.p, self.q % self.p)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class SurfaceParams:
    """Integers naming the genus-one surface ``Sigma_{a,b,c,u,v}`` in ``L(p, q)``."""

    a: int
    b: int
    c: int
    u: int
    v: int

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return self.a, self.b, self.c, self.u, self.v

    def linking_pair(self) -> Tuple[int, int]:
        """``(b u^2 + (2c + 1) u v + a v^2, c^2 + c - a b)``."""
        a, b, c, u, v = self.as_tuple()
        return b * u * u + (2 * c + 1) * u * v + a * v * v, c * c + c - a * b


@dataclass(frozen=True)
class BezoutPair:
    """Canonical solution of ``p y - q x = 1`` with ``1 <= r0 <= p - 1``."""

    p: int
    q: int
    r0: int
    s0: int

    def at(self, k: int) -> Tuple[int, int]:
        """``(r_k, s_k) = (r0 + k p, s0 + k q)``."""
        return self.r0 + k * self.p, self.s0 + k * self.q


class WitnessMethod(str, Enum):
    CONSTRUCTED = "constructed"
    BRUTE_FORCE = "brute_force"
    BUILTIN_SPECIAL = "builtin_special"
    SUPPLIED = "supplied"


@dataclass(frozen=True)
class WitnessCertificate:
    """A surface whose complement in ``L(p, q)`` is a homology cobordism, with the
    integers ``epsilon, k, r_k, s_k`` that certify it."""

    space: LensSpace
    params: SurfaceParams
    epsilon: int
    k: int
    r_k: int
    s_k: int
    method: WitnessMethod
    identity_value: int

    def check(self) -> None:
        """Re-checks both certificate equations exactly."""
        first, second = self.params.linking_pair()
        if (first, second) != (self.epsilon * self.r_k, self.epsilon * self.s_k):
            raise AssertionError(
                f"Linking pair {(first, second)} of {self.params} is not epsilon (r_k, s_k)"
            )
        if not self.identity_value == abs(lemma_identity(self.space, self.params)) == 1:
            raise AssertionError(f"Identity value of {self.params} in {self.space} is not 1")


# surfaces tried first for p = 5
BUILTIN_SURFACES_P5 = (SurfaceParams(0, 0, 0, 1, 1), SurfaceParams(0, 0, 1, 1, 1))


def solve_bezout(space: LensSpace) -> BezoutPair:
    """Canonical ``(r0, s0)`` with ``p s0 - q r0 = 1`` and ``1 <= r0 <= p - 1``."""
    p, q = space.p, space.q
    r0 = -pow(q, -1, p) % p
    s0, remainder = divmod(1 + q * r0, p)
    assert remainder == 0 and 1 <= r0 <= p - 1
    return BezoutPair(p=p, q=q, r0=r0, s0=s0)


def lemma_identity(space: LensSpace, params: SurfaceParams) -> int:
    """``p (c^2 + c - a b) - q (b u^2 + (2c + 1) u v + a v^2)``."""
    first, second = params.linking_pair()
    return space.p * second - space.q * first


def verify_witness(
    space: LensSpace,
    params: SurfaceParams,
    method: WitnessMethod = WitnessMethod.SUPPLIED,
) -> Optional[WitnessCertificate]:
    """Decides whether the complement of ``Sigma_{a,b,c,u,v}`` in ``L(p, q)`` is a homology
    cobordism, i.e. whether the linking pair equals ``epsilon (r_k, s_k)``.

    :param space: The lens space.
    :param params: The surface parameters.
    :param method: How the parameters were obtained, recorded on the certificate.
    :return: A certificate, or ``None`` when the identity value is not 1.
    """
    identity = lemma_identity(space, params)
    if abs(identity) != 1:
        return None

    # p (eps s_k) - q (eps r_k) = eps, so the identity value is epsilon itself
    epsilon = identity
    first, second = params.linking_pair()
    r_k, s_k = epsilon * first, epsilon * second

    bezout = solve_bezout(space)
    k, remainder = divmod(r_k - bezout.r0, space.p)
    assert remainder == 0 and bezout.at(k) == (r_k, s_k)

    certificate = WitnessCertificate(
        space=space,
        params=params,
        epsilon=epsilon,
        k=k,
        r_k=r_k,
        s_k=s_k,
        method=method,
        identity_value=abs(identity),
    )
    certificate.check()
    return certificate


def brute_search(space: LensSpace, box: int) -> Optional[WitnessCertificate]:
    """Lexicographically smallest ``(a, b, c, u, v)`` in ``[-box, box]^5`` that verifies.

    :param space: The lens space.
    :param box: Bound on the absolute value of every parameter.
    :return: A certificate or ``None``.
    """
    if box < 0:
        raise ValueError(f"Search box must be nonnegative, got {box}")

    p, q = space.p, space.q
    for a, b, c, u, v in product(range(-box, box + 1), repeat=5):
        if abs(p * (c * c + c - a * b) - q * (b * u * u + (2 * c + 1) * u * v + a * v * v)) == 1:
            return verify_witness(space, SurfaceParams(a, b, c, u, v), WitnessMethod.BRUTE_FORCE)
    return None


def _construct_from_prime(space: LensSpace, bezout: BezoutPair, bound: int) -> WitnessCertificate:
    witness = find_prime_witness(bezout.r0, space.p, bound)
    k = (witness.l - bezout.r0) // space.p
    r_k, s_k = bezout.at(k)
    epsilon = witness.epsilon

    # z0^2 = 1 + 4 eps s_k (mod 4 eps r_k)
    z0 = 1 + 2 * witness.root_x0
    form, u, v = form_from_sqrt(z0, epsilon * r_k, 1 + 4 * epsilon * s_k)
    params = SurfaceParams(a=form.c, b=form.a, c=(form.b - 1) // 2, u=u, v=v)

    certificate = verify_witness(space, params, WitnessMethod.CONSTRUCTED)
    if certificate is None or (certificate.epsilon, certificate.k) != (epsilon, k):
        raise AssertionError(f"Constructed surface {params} does not verify in {space}")
    return certificate


def construct_witness(
    space: LensSpace,
    bound: int = DEFAULT_PRIME_BOUND,
    brute_box: int = DEFAULT_BRUTE_BOX,
) -> WitnessCertificate:
    """Constructs a genus-one homologically fibered knot witness in ``L(p, q)``.

    For ``p = 5`` the two surfaces of the constructive proof are tried first. Otherwise
    (and for ``p = 5`` with ``r0 != 2 (mod 5)``) a prime ``r_k`` with a root of
    ``p x (x + 1) = epsilon (mod r_k)`` yields a quadratic form whose coefficients are the
    surface. Exhaustive search over growing boxes is the fallback.

    :param space: The lens space.
    :param bound: Bound for the prime search.
    :param brute_box: Largest box for the fallback search.
    :return: A verified certificate.
    """
    if space.p == 5:
        for params in BUILTIN_SURFACES_P5:
            certificate = verify_witness(space, params, WitnessMethod.BUILTIN_SPECIAL)
            if certificate is not None:
                return certificate

    bezout = solve_bezout(space)
    if space.p == 5 and bezout.r0 % 5 == 2:
        log.info(f"No prime witness class for {space} (r0 = 2 mod 5)! Using exhaustive search...")
    else:
        try:
            return _construct_from_prime(space, bezout, bound)
        except SearchExhausted as ex:
            log.warning(f"{ex}. Falling back to exhaustive search for {space}...")

    for box in range(brute_box + 1):
        certificate = brute_search(space, box)
        if certificate is not None:
            return certificate

    raise SearchExhausted(
        f"No witness for {space} with prime bound {bound} and search box {brute_box}"
    )


def _homeomorphic_residues(space: LensSpace) -> Set[int]:
    p, q = space.p, space.q
    q_inverse = pow(q, -1, p)
    return {q % p, -q % p, q_inverse, -q_inverse % p}


def lens_homeomorphic(first: LensSpace, second: LensSpace) -> bool:
    """``L(p, q) = L(p, q')`` iff ``q' = +-q^{+-1} (mod p)``."""
    return first.p == second.p and second.q % second.p in _homeomorphic_residues(first)


def sakasai_condition(p: int, q: int, cap: int = DEFAULT_FACTOR_CAP) -> bool:
    """Whether ``p (p + 4)`` or ``p (p - 4)`` is a quadratic residue modulo the odd ``q``."""
    if q % 2 == 0:
        raise ValueError(f"The residue condition is stated for odd q, got {q}")
    modulus = abs(q)
    if modulus == 1:
        return True
    return any(sqrt_mod(p * (p + 4 * sign), modulus, cap=cap) is not None for sign in (1, -1))


def sakasai_representative(
    space: LensSpace, bound: int = DEFAULT_PRIME_BOUND, cap: int = DEFAULT_FACTOR_CAP
) -> int:
    """Smallest odd ``q' >= 3`` with ``L(p, q') = L(p, q)`` satisfying the residue condition.

    :param space: The lens space.
    :param bound: Largest ``q'`` examined.
    :param cap: Factorization cap for the residue tests.
    :return: The representative ``q'``.
    """
    residues = _homeomorphic_residues(space)
    for candidate in range(3, bound + 1, 2):
        if candidate % space.p in residues and sakasai_condition(space.p, candidate, cap=cap):
            return candidate
    raise SearchExhausted(f"No odd representative of {space} up to {bound}")
