from dataclasses import replace
from math import gcd

import pytest

from src.number_theory.primes import SearchExhausted
from src.topology.witness import (
    BUILTIN_SURFACES_P5,
    LensSpace,
    SurfaceParams,
    WitnessMethod,
    brute_search,
    construct_witness,
    lemma_identity,
    lens_homeomorphic,
    sakasai_condition,
    sakasai_representative,
    solve_bezout,
    verify_witness,
)


@pytest.mark.parametrize("p, q", [(1, 1), (0, 1), (4, 2), (6, 9)])
def test_lens_space_rejects_invalid(p: int, q: int) -> None:
    with pytest.raises(ValueError):
        LensSpace(p, q)


def test_lens_space_normalized() -> None:
    assert LensSpace(5, 9).normalized() == LensSpace(5, 4)
    assert LensSpace(5, -1).normalized() == LensSpace(5, 4)
    assert str(LensSpace(7, 2)) == "L(7,2)"


@pytest.mark.parametrize("p, q, r0, s0", [(7, 1, 6, 1), (5, 4, 1, 1), (2, 1, 1, 1), (5, 2, 2, 1)])
def test_solve_bezout(p: int, q: int, r0: int, s0: int) -> None:
    bezout = solve_bezout(LensSpace(p, q))
    assert (bezout.r0, bezout.s0) == (r0, s0)
    assert p * bezout.s0 - q * bezout.r0 == 1
    r_k, s_k = bezout.at(3)
    assert p * s_k - q * r_k == 1


def test_verify_witness_surfaces_for_p5() -> None:
    """Tests both surfaces of the constructive proof and the recovered signs."""
    first = verify_witness(LensSpace(5, 1), SurfaceParams(0, 0, 0, 1, 1))
    assert first is not None
    assert first.epsilon == -1
    assert first.identity_value == 1
    assert first.method == WitnessMethod.SUPPLIED

    second = verify_witness(LensSpace(5, 3), SurfaceParams(0, 0, 1, 1, 1))
    assert second is not None
    assert second.epsilon == 1
    assert (second.r_k, second.s_k) == (3, 2)


def test_verify_witness_rejects() -> None:
    assert verify_witness(LensSpace(5, 1), SurfaceParams(0, 0, 0, 0, 0)) is None
    assert lemma_identity(LensSpace(5, 1), SurfaceParams(0, 0, 0, 0, 0)) == 0


def test_certificate_check_rejects_tampering() -> None:
    certificate = verify_witness(LensSpace(5, 1), SurfaceParams(0, 0, 0, 1, 1))
    certificate.check()

    with pytest.raises(AssertionError):
        replace(certificate, r_k=certificate.r_k + 5).check()
    with pytest.raises(AssertionError):
        replace(certificate, identity_value=0).check()
    with pytest.raises(AssertionError):
        replace(certificate, space=LensSpace(5, 2)).check()


@pytest.mark.parametrize(
    "p, q, params, epsilon, k, r_k, s_k",
    [
        (7, 1, (10, 13, 11, 1, 0), 1, 1, 13, 2),
        (2, 1, (0, 3, 1, 1, 0), 1, 1, 3, 2),
        (5, 4, (1, 11, 4, 1, 0), 1, 2, 11, 9),
    ],
)
def test_construct_witness_pipeline(
    p: int, q: int, params: tuple, epsilon: int, k: int, r_k: int, s_k: int
) -> None:
    """Tests the prime pipeline on spaces whose certificates are known in full."""
    certificate = construct_witness(LensSpace(p, q))
    assert certificate.method == WitnessMethod.CONSTRUCTED
    assert certificate.params.as_tuple() == params
    assert (certificate.epsilon, certificate.k, certificate.r_k, certificate.s_k) == (
        epsilon,
        k,
        r_k,
        s_k,
    )
    certificate.check()


def test_construct_witness_p5_uses_builtin_surfaces() -> None:
    for q in (1, 3):
        certificate = construct_witness(LensSpace(5, q))
        assert certificate.method == WitnessMethod.BUILTIN_SPECIAL
        assert certificate.params in BUILTIN_SURFACES_P5


def test_construct_witness_class_two_mod_five() -> None:
    """``L(5, 2)`` has ``r0 = 2``; only the exhaustive search applies."""
    certificate = construct_witness(LensSpace(5, 2))
    assert certificate.method == WitnessMethod.BRUTE_FORCE
    assert certificate.params.as_tuple() == (-1, -1, -1, -1, -1)
    assert verify_witness(LensSpace(5, 2), certificate.params) is not None


def test_construct_witness_exhausted() -> None:
    with pytest.raises(SearchExhausted):
        construct_witness(LensSpace(5, 2), brute_box=0)


def test_brute_search() -> None:
    certificate = brute_search(LensSpace(5, 3), 1)
    assert certificate is not None
    assert certificate.method == WitnessMethod.BRUTE_FORCE
    assert abs(lemma_identity(LensSpace(5, 3), certificate.params)) == 1

    assert brute_search(LensSpace(5, 3), 0) is None
    with pytest.raises(ValueError):
        brute_search(LensSpace(5, 3), -1)


def test_construct_witness_keeps_literal_q() -> None:
    """``L(5, 6)`` and ``L(5, 1)`` are the same space with different certificate arithmetic."""
    certificate = construct_witness(LensSpace(5, 6))
    assert certificate.space == LensSpace(5, 6)
    assert verify_witness(LensSpace(5, 6), certificate.params) is not None


# spaces with p <= 30 that have no verifying surface in [-4, 4]^5
BOX_FOUR_GAPS = ((19, 16), (21, 10), (25, 4), (30, 17))
BOX_FOUR_GAP_COUNT = 19


@pytest.mark.slow
def test_brute_search_agrees_with_construction() -> None:
    """Tests both searches on every lens space with ``p <= 30``.

    Box 4 certifies all but a fixed set of spaces; the construction certifies every one.
    """
    gaps = []
    for p in range(2, 31):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            space = LensSpace(p, q)
            brute = brute_search(space, 4)
            if brute is None:
                gaps.append((p, q))
            else:
                assert verify_witness(space, brute.params) is not None

            constructed = construct_witness(space)
            assert verify_witness(space, constructed.params) is not None

    assert set(BOX_FOUR_GAPS) <= set(gaps)
    assert len(gaps) == BOX_FOUR_GAP_COUNT


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ((5, 1), (5, 4), True),
        ((5, 2), (5, 3), True),
        ((5, 1), (5, 2), False),
        ((7, 2), (7, 4), True),
        ((7, 2), (8, 3), False),
    ],
)
def test_lens_homeomorphic(first: tuple, second: tuple, expected: bool) -> None:
    assert lens_homeomorphic(LensSpace(*first), LensSpace(*second)) == expected


def test_sakasai_condition() -> None:
    assert sakasai_condition(5, 3)
    assert not sakasai_condition(5, 7)
    assert sakasai_condition(7, 13)
    assert sakasai_condition(7, -1)
    with pytest.raises(ValueError):
        sakasai_condition(5, 4)


@pytest.mark.parametrize("p, q, expected", [(7, 1, 13), (2, 1, 3), (5, 2, 3)])
def test_sakasai_representative(p: int, q: int, expected: int) -> None:
    assert sakasai_representative(LensSpace(p, q)) == expected


def test_sakasai_representative_exhausted() -> None:
    with pytest.raises(SearchExhausted):
        sakasai_representative(LensSpace(7, 1), bound=11)
