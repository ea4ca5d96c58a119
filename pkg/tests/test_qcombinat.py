from math import comb

import pytest

from qpositivity.qcombinat import (
    INVERSE_VANISHES,
    NegativeIndex,
    choose2,
    gauss_binom,
    gauss_binom_pascal,
    q_factorial,
    q_int,
    q_poch,
)
from qpositivity.qpoly import IntPoly, ONE, ZERO


def P(*coeffs):
    return IntPoly(coeffs)


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(3) == P(1, 1, 1)
    with pytest.raises(NegativeIndex):
        q_int(-1)


def test_q_factorial():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == P(1, 1)
    assert q_factorial(3) == P(1, 2, 2, 1)
    with pytest.raises(NegativeIndex):
        q_factorial(-2)


def test_q_poch():
    assert q_poch(0) == ONE
    assert q_poch(2) == P(1, -1, -1, 1)
    assert q_poch(-1) is INVERSE_VANISHES
    assert q_poch(-5) is INVERSE_VANISHES


def test_q_poch_relates_to_factorial():
    # (q;q)_n = (1-q)^n [n]!
    sign = ONE
    for n in range(21):
        assert q_poch(n) == sign * q_factorial(n)
        sign = sign * P(1, -1)


def test_gauss_binom_examples():
    assert gauss_binom(5, 7) == ZERO
    assert gauss_binom(5, -1) == ZERO
    assert gauss_binom(-2, 0) == ZERO
    for N in range(6):
        assert gauss_binom(N, 0) == ONE
    assert gauss_binom(4, 2) == P(1, 1, 2, 1, 1)


def test_gauss_binom_symmetry():
    for N in range(13):
        for K in range(N + 1):
            assert gauss_binom(N, K) == gauss_binom(N, N - K)


def test_gauss_binom_two_routes_agree():
    # Division route against the independent q-Pascal recurrence route.
    for N in range(21):
        for K in range(N + 1):
            assert gauss_binom(N, K) == gauss_binom_pascal(N, K)


def test_gauss_binom_q_pascal_recurrence():
    for N in range(1, 21):
        for K in range(N + 1):
            expected = gauss_binom(N - 1, K - 1) + gauss_binom(N - 1, K).shift(K)
            assert gauss_binom(N, K) == expected


def test_gauss_binom_specializes_to_binomial():
    for N in range(31):
        for K in range(N + 1):
            assert gauss_binom(N, K).eval_at_one() == comb(N, K)


def test_gauss_binom_nonneg():
    for N in range(21):
        for K in range(N + 1):
            assert gauss_binom(N, K).is_nonneg()


def test_choose2():
    assert choose2(0) == 0
    assert choose2(1) == 0
    assert choose2(-1) == 1
    assert choose2(4) == 6
    for k in range(-100, 101):
        assert choose2(k) >= 0
        assert choose2(k) == choose2(1 - k)
