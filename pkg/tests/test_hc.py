from random import Random

import pytest

from src.topology.hc import (
    HcResult,
    HypothesisViolated,
    hc_connsum,
    hc_cyclic,
    hc_free_abelian,
    hc_lens,
    hc_qhs_bound,
    hc_trivial,
    hc_z_plus_zp,
    lemma34_scan,
    qr_mod,
    sqrt_in_cyclotomic,
)
from src.topology.seifert import is_homology_cobordism, seifert_matrix_connsum
from src.topology.witness import LensSpace, verify_witness


def test_hc_result() -> None:
    exact = HcResult.exact(2, "reason")
    assert exact.is_exact and exact.value == 2
    assert str(exact) == "2"

    interval = HcResult(lo=1, hi=2, reason="inconclusive")
    assert not interval.is_exact and interval.value is None
    assert str(interval) == "[1, 2] (inconclusive)"

    with pytest.raises(ValueError):
        HcResult(lo=2, hi=1, reason="empty")


def test_qr_mod() -> None:
    assert qr_mod(4, 5)
    assert not qr_mod(2, 5)
    assert qr_mod(0, 9)
    assert not qr_mod(3, 8)


@pytest.mark.parametrize("rank, expected", [(1, 1), (2, 1), (3, 2), (4, 2), (7, 4)])
def test_hc_free_abelian(rank: int, expected: int) -> None:
    assert hc_free_abelian(rank).value == expected


def test_hc_exact_families() -> None:
    assert hc_trivial().value == 0
    assert hc_cyclic(7).value == 1
    with pytest.raises(ValueError):
        hc_free_abelian(0)

    result = hc_lens(LensSpace(7, 1))
    assert result.value == 1
    assert result.certificate.params.as_tuple() == (10, 13, 11, 1, 0)


@pytest.mark.parametrize(
    "factors, lo, hi",
    [([3], 1, 1), ([3, 9], 1, 2), ([3, 9, 27], 2, 3), ([3, 6], 1, 2), ([2], 1, 1)],
)
def test_hc_qhs_bound(factors: list, lo: int, hi: int) -> None:
    result = hc_qhs_bound(factors)
    assert (result.lo, result.hi) == (lo, hi)


@pytest.mark.parametrize("factors", [[], [1], [3, 4], [9, 3]])
def test_hc_qhs_bound_invalid(factors: list) -> None:
    with pytest.raises(ValueError):
        hc_qhs_bound(factors)


@pytest.mark.parametrize("factors", [[2, 4], [2, 6]])
def test_hc_qhs_bound_non_cyclic_two_torsion(factors: list) -> None:
    with pytest.raises(HypothesisViolated):
        hc_qhs_bound(factors)


def test_hc_connsum_obstructed() -> None:
    """``L(5,1) # L(5,2)``: neither 2 nor -2 is a square modulo 5."""
    result = hc_connsum(LensSpace(5, 1), LensSpace(5, 2))
    assert result.value == 2
    assert result.connsum_params is None


@pytest.mark.parametrize("box", [1, 2])
def test_hc_connsum_genus_one(box: int) -> None:
    first = second = LensSpace(5, 1)
    result = hc_connsum(first, second, search_box=box)
    assert result.value == 1
    matrix = seifert_matrix_connsum(first, second, result.connsum_params)
    assert is_homology_cobordism(matrix, 25)


def test_hc_connsum_inconclusive() -> None:
    result = hc_connsum(LensSpace(5, 1), LensSpace(5, 1), search_box=0)
    assert (result.lo, result.hi) == (1, 2)
    assert str(result) == "[1, 2] (inconclusive within search box 0)"


def test_hc_connsum_orders_summands() -> None:
    """The obstruction applies whichever summand comes first."""
    assert hc_connsum(LensSpace(10, 3), LensSpace(5, 1)).value == 2


@pytest.mark.parametrize("p, q, expected", [(5, 2, 2), (5, 1, 1), (7, 3, 1), (3, 1, 1)])
def test_hc_z_plus_zp(p: int, q: int, expected: int) -> None:
    assert hc_z_plus_zp(p, q).value == expected


def test_hc_z_plus_zp_invalid() -> None:
    with pytest.raises(ValueError):
        hc_z_plus_zp(4, 2)


@pytest.mark.parametrize(
    "a, n, expected",
    [
        (5, 5, True),
        (-3, 3, True),
        (3, 3, False),
        (3, 12, True),
        (2, 8, True),
        (2, 4, False),
        (-1, 4, True),
        (-1, 6, False),
        (7, 5, False),
        (45, 5, True),
        (6, 24, True),
        (6, 12, False),
    ],
)
def test_sqrt_in_cyclotomic(a: int, n: int, expected: bool) -> None:
    """Tests membership of square roots in cyclotomic fields.

    :param a: The radicand.
    :param n: Order of the root of unity.
    :param expected: The membership.
    """
    assert sqrt_in_cyclotomic(a, n) == expected


def test_sqrt_in_cyclotomic_invalid() -> None:
    with pytest.raises(ValueError):
        sqrt_in_cyclotomic(0, 5)
    with pytest.raises(ValueError):
        sqrt_in_cyclotomic(5, 0)


def test_lemma34_scan() -> None:
    assert lemma34_scan(500) == [5]
    assert lemma34_scan(4) == []
    with pytest.raises(ValueError):
        lemma34_scan(0)


@pytest.mark.parametrize(
    "first, second", [((5, 1), (5, 4)), ((3, 1), (3, 2)), ((3, 1), (5, 2)), ((4, 1), (7, 3))]
)
def test_hc_connsum_symmetric_on_search(first: tuple, second: tuple) -> None:
    """Tests that both orders of the summands give the same answer when the search runs."""
    forward = hc_connsum(LensSpace(*first), LensSpace(*second), search_box=1)
    backward = hc_connsum(LensSpace(*second), LensSpace(*first), search_box=1)
    assert (forward.lo, forward.hi) == (backward.lo, backward.hi)


@pytest.mark.parametrize("p, q", [(2, 1), (5, 2), (7, 3), (12, 5), (29, 17)])
def test_hc_lens_certificate_verifies(p: int, q: int) -> None:
    space = LensSpace(p, q)
    result = hc_lens(space)
    assert result.value == 1
    assert result.certificate.space == space
    assert verify_witness(space, result.certificate.params) is not None


def _random_radicand(rng: Random) -> int:
    return rng.choice([-1, 1]) * rng.randint(1, 300)


def test_sqrt_in_cyclotomic_ignores_square_factors() -> None:
    rng = Random(31)
    for _ in range(2000):
        a, k, n = _random_radicand(rng), rng.randint(1, 40), rng.randint(1, 200)
        assert sqrt_in_cyclotomic(a * k * k, n) == sqrt_in_cyclotomic(a, n)


def test_sqrt_in_cyclotomic_closed_under_products() -> None:
    rng = Random(37)
    members = 0
    for _ in range(4000):
        a, b, n = _random_radicand(rng), _random_radicand(rng), rng.choice([15, 24, 60, 105, 120])
        if sqrt_in_cyclotomic(a, n) and sqrt_in_cyclotomic(b, n):
            assert sqrt_in_cyclotomic(a * b, n)
            members += 1
    assert members > 0


def test_sqrt_in_cyclotomic_monotone_in_odd_multiples() -> None:
    """Tests that membership passes from ``n`` to ``n m`` for odd ``m``."""
    rng = Random(41)
    for _ in range(2000):
        a, n, m = _random_radicand(rng), rng.randint(1, 120), 2 * rng.randint(0, 10) + 1
        if sqrt_in_cyclotomic(a, n):
            assert sqrt_in_cyclotomic(a, n * m)
