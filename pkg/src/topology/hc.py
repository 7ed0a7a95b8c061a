from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import List, Optional, Sequence

from src.number_theory.arith import (
    DEFAULT_FACTOR_CAP,
    factorize,
    sqrt_mod,
    squarefree_part,
    two_adic_valuation,
)
from src.number_theory.primes import DEFAULT_PRIME_BOUND
from src.topology.seifert import (
    ConnSumSurfaceParams,
    is_homology_cobordism,
    seifert_matrix_connsum,
)
from src.topology.witness import (
    DEFAULT_BRUTE_BOX,
    LensSpace,
    WitnessCertificate,
    construct_witness,
)
from src.utils import pylogger

log = pylogger.WorkerLogger(__name__)

DEFAULT_CONNSUM_BOX = 2


class HypothesisViolated(ValueError):
    """Raised when an input falls outside the hypotheses of the hc bound."""


@dataclass(frozen=True)
class HcResult:
    """Exact value (``lo == hi``) or interval for the hc invariant, with its justification."""

    lo: int
    hi: int
    reason: str
    certificate: Optional[WitnessCertificate] = None
    connsum_params: Optional[ConnSumSurfaceParams] = None

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"Invalid hc interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: int, reason: str, **evidence) -> "HcResult":
        return cls(lo=value, hi=value, reason=reason, **evidence)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.is_exact else None

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}] ({self.reason})"


def qr_mod(a: int, m: int, cap: int = DEFAULT_FACTOR_CAP) -> bool:
    """Whether ``x^2 = a (mod m)`` is solvable."""
    return sqrt_mod(a, m, cap=cap) is not None


def hc_trivial() -> HcResult:
    return HcResult.exact(0, "H_1 is trivial")


def hc_free_abelian(rank: int) -> HcResult:
    """``hc = g`` for ``H_1 = Z^(2g - 1)`` or ``Z^(2g)``."""
    if rank < 1:
        raise ValueError(f"Free abelian rank must be positive, got {rank}")
    return HcResult.exact((rank + 1) // 2, f"H_1 is free abelian of rank {rank}")


def hc_lens(
    space: LensSpace, bound: int = DEFAULT_PRIME_BOUND, brute_box: int = DEFAULT_BRUTE_BOX
) -> HcResult:
    """``hc(L(p, q)) = 1``, with a genus-one witness attached as evidence."""
    certificate = construct_witness(space, bound=bound, brute_box=brute_box)
    return HcResult.exact(1, f"genus-one witness in {space}", certificate=certificate)


def hc_qhs_bound(invariant_factors: Sequence[int]) -> HcResult:
    """Bounds hc of a rational homology sphere with ``H_1 = Z/p1 + ... + Z/ps``.

    The upper bound is ``s = d(H_1)``; the lower bound comes from ``d(H_1) <= 2 hc``.

    :param invariant_factors: A divisibility chain ``p1 | p2 | ... | ps`` of integers
        ``>= 2`` with cyclic 2-torsion, i.e. at most one even factor.
    :return: The interval ``[ceil(s / 2), s]``.
    """
    factors = list(invariant_factors)
    if not factors:
        raise ValueError("A rational homology sphere with trivial H_1 has hc = 0")
    if any(factor < 2 for factor in factors):
        raise ValueError(f"Invariant factors must be >= 2, got {factors}")
    if any(later % earlier != 0 for earlier, later in zip(factors, factors[1:])):
        raise ValueError(f"Invariant factors must form a divisibility chain, got {factors}")
    if sum(1 for factor in factors if factor % 2 == 0) > 1:
        raise HypothesisViolated(f"2-torsion of {factors} is not cyclic")

    s = len(factors)
    return HcResult(lo=(s + 1) // 2, hi=s, reason=f"d(H_1) = {s} <= 2 hc and hc <= d(H_1)")


def hc_cyclic(p: int) -> HcResult:
    """``hc = 1`` for ``H_1 = Z/p``."""
    return hc_qhs_bound([p])


def _connsum_search(
    first: LensSpace, second: LensSpace, box: int
) -> Optional[ConnSumSurfaceParams]:
    h1_order = first.p * second.p
    # P S is integral for P = p1 p2, and P |det S| = 1 iff |det(P S)| = P
    w1, w2 = first.q * second.p, second.q * first.p

    for a, b, c, u1, u2, v1, v2 in product(range(-box, box + 1), repeat=7):
        s11 = h1_order * a + w1 * u1 * u1 + w2 * u2 * u2
        s22 = h1_order * b + w1 * v1 * v1 + w2 * v2 * v2
        s12 = h1_order * c - w1 * u1 * v1 - w2 * u2 * v2
        if abs(s11 * s22 - s12 * (s12 + h1_order)) != h1_order:
            continue
        params = ConnSumSurfaceParams(a, b, c, u1, u2, v1, v2)
        assert is_homology_cobordism(seifert_matrix_connsum(first, second, params), h1_order)
        return params
    return None


def hc_connsum(
    first: LensSpace,
    second: LensSpace,
    search_box: int = DEFAULT_CONNSUM_BOX,
    cap: int = DEFAULT_FACTOR_CAP,
) -> HcResult:
    """hc of ``L(p1, q1) # L(p2, q2)``, which always lies in ``[1, 2]``.

    Returns 2 when ``p1 | p2`` and neither ``q1 q2`` nor ``-q1 q2`` is a square modulo
    ``p1``; 1 when exhaustive search finds a genus-one surface; otherwise the honest
    interval.

    :param first: First summand.
    :param second: Second summand; the summands are ordered so that ``p1 <= p2``.
    :param search_box: Bound on the surface parameters searched.
    :param cap: Factorization cap for the residue tests.
    :return: The hc result.
    """
    if first.p > second.p:
        first, second = second, first

    product_q = first.q * second.q
    if second.p % first.p == 0 and not (
        qr_mod(product_q, first.p, cap=cap) or qr_mod(-product_q, first.p, cap=cap)
    ):
        return HcResult.exact(
            2, f"p1 | p2 and neither +-{product_q} is a square mod {first.p}"
        )

    params = _connsum_search(first, second, search_box)
    if params is not None:
        return HcResult.exact(1, "genus-one surface found by search", connsum_params=params)

    log.warning(f"No genus-one surface in {first} # {second} within box {search_box}!")
    return HcResult(lo=1, hi=2, reason=f"inconclusive within search box {search_box}")


def hc_z_plus_zp(p: int, q: int, cap: int = DEFAULT_FACTOR_CAP) -> HcResult:
    """hc for ``H_1 = Z + Z/p`` with torsion linking form ``(q/p)``."""
    if p < 2 or gcd(p, q) != 1:
        raise ValueError(f"Need p >= 2 coprime to q, got ({p}, {q})")
    if qr_mod(q, p, cap=cap) or qr_mod(-q, p, cap=cap):
        return HcResult.exact(1, f"{q} or {-q} is a square mod {p}")
    return HcResult.exact(2, f"neither {q} nor {-q} is a square mod {p}")


def sqrt_in_cyclotomic(a: int, n: int, cap: int = DEFAULT_FACTOR_CAP) -> bool:
    """Whether ``sqrt(a)`` lies in the ``n``-th cyclotomic field.

    Up to squares ``a`` must be a product of ``l* = (-1)^((l - 1) / 2) l`` over odd primes
    ``l | n``, together with ``-1`` when ``4 | n`` and ``-1, 2`` when ``8 | n``.

    :param a: A nonzero integer.
    :param n: A positive integer.
    :return: The membership.
    """
    if a == 0:
        raise ValueError("sqrt_in_cyclotomic needs a nonzero radicand")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    s = squarefree_part(a, cap=cap)
    forced = 1
    for prime, _ in factorize(s, cap=cap).factors:
        if prime == 2:
            continue
        if n % prime != 0:
            return False
        forced *= prime if prime % 4 == 1 else -prime

    rest = s // forced
    valuation = two_adic_valuation(n)
    if valuation < 2:
        allowed = {1}
    elif valuation == 2:
        allowed = {1, -1}
    else:
        allowed = {1, -1, 2, -2}
    return rest in allowed


def lemma34_scan(n_max: int, cap: int = DEFAULT_FACTOR_CAP) -> List[int]:
    """All ``n <= n_max`` for which both ``sqrt(n (n + 4))`` and ``sqrt(n (n - 4))`` lie in
    the ``n``-th cyclotomic field; ``sqrt(0)`` always does."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")

    def member(a: int, n: int) -> bool:
        return a == 0 or sqrt_in_cyclotomic(a, n, cap=cap)

    return [n for n in range(1, n_max + 1) if member(n * (n + 4), n) and member(n * (n - 4), n)]
