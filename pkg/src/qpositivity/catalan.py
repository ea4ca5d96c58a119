"""The super Catalan family.

Three factorial-ratio families are computed by exact division:

    A(m, n) = [2m]![2n]! / ([m+n]![m]![n]!)
    B(n, m) = [2n]![m]! / ([n]![2m]![n-m]!)        for n >= m
    C(m, n) = [2m+1]![2n]! / ([m+n+1]![m]![n]!)

C is additionally computed by a pair of recurrences (one for each
off-diagonal direction), giving two fully independent evaluation paths
whose agreement is checked by the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .qcombinat import InvalidRange, NegativeIndex, gauss_binom, q_factorial
from .qpoly import IntPoly, ZERO
from .reporting import IdentityCheckResult


@lru_cache(maxsize=None)
def super_catalan_A(m: int, n: int) -> IntPoly:
    """The q-super Catalan number [2m]![2n]!/([m+n]![m]![n]!)."""
    if m < 0 or n < 0:
        raise NegativeIndex(f"super_catalan_A({m}, {n})")
    num = q_factorial(2 * m) * q_factorial(2 * n)
    den = q_factorial(m + n) * q_factorial(m) * q_factorial(n)
    return num.exact_div(den)


@lru_cache(maxsize=None)
def ratio_B(n: int, m: int) -> IntPoly:
    """[2n]![m]!/([n]![2m]![n-m]!), defined for n >= m >= 0."""
    if m < 0 or n < m:
        raise InvalidRange(f"ratio_B({n}, {m}) requires n >= m >= 0")
    num = q_factorial(2 * n) * q_factorial(m)
    den = q_factorial(n) * q_factorial(2 * m) * q_factorial(n - m)
    return num.exact_div(den)


@lru_cache(maxsize=None)
def odd_super_catalan_direct(m: int, n: int) -> IntPoly:
    """The odd q-super Catalan number [2m+1]![2n]!/([m+n+1]![m]![n]!)."""
    if m < 0 or n < 0:
        raise NegativeIndex(f"odd_super_catalan_direct({m}, {n})")
    num = q_factorial(2 * m + 1) * q_factorial(2 * n)
    den = q_factorial(m + n + 1) * q_factorial(m) * q_factorial(n)
    return num.exact_div(den)


def odd_super_catalan_value_at_one(m: int, n: int) -> int:
    """Integer specialization (2m+1)!(2n)!/((m+n+1)! m! n!) at q = 1."""
    num = factorial(2 * m + 1) * factorial(2 * n)
    den = factorial(m + n + 1) * factorial(m) * factorial(n)
    value, rem = divmod(num, den)
    if rem:
        raise NotImplementedError(f"non-integer specialization at ({m}, {n})")
    return value


def _inner_sum(N: int, h: int, k: int) -> IntPoly:
    # sum over j of q^{k(N+k+1)+j(N+j+1)} * gauss_binom(h-2k-1, j-k)
    total = ZERO
    for j in range(k, h - k):
        term = gauss_binom(h - 2 * k - 1, j - k)
        if term.is_zero():
            continue
        total = total + term.shift(k * (N + k + 1) + j * (N + j + 1))
    return total


@lru_cache(maxsize=None)
def odd_super_catalan_recursive(m: int, n: int) -> IntPoly:
    """C(m, n) computed by recurrence rather than division.

    Diagonal entries are Gaussian coefficients; the m > n case descends via
    C(k, n) with k <= (m-n-1)/2, the n > m case via C(m, k).  Memoized on
    the raw pair (m, n); equality with odd_super_catalan_direct is the
    correctness oracle.
    """
    if m < 0 or n < 0:
        raise NegativeIndex(f"odd_super_catalan_recursive({m}, {n})")
    if m == n:
        return gauss_binom(2 * n, n)
    if m > n:
        N, h = n, m - n
        total = super_catalan_A(m, n).shift(h)
        for k in range((h - 1) // 2 + 1):
            outer = gauss_binom(h, 2 * k + 1)
            if outer.is_zero():
                continue
            total = total + odd_super_catalan_recursive(k, N) * outer * _inner_sum(N, h, k)
        return total
    N, h = m, n - m
    total = ZERO
    for k in range((h - 1) // 2 + 1):
        outer = gauss_binom(h - 1, 2 * k)
        if outer.is_zero():
            continue
        total = total + odd_super_catalan_recursive(N, k) * outer * _inner_sum(N, h, k)
    return total


def double_expansion_check(N: int, h: int) -> IdentityCheckResult:
    """Check the double-sum expansion of gauss_binom(2N+2h, h-1).

    The right-hand side sums q^{k(N+k+1)+j(N+j+1)} times a product of three
    Gaussian coefficients over 0 <= k <= (h-1)/2, k <= j <= h-k-1.
    """
    if N < 0 or h < 1:
        raise InvalidRange(f"double_expansion_check({N}, {h}) requires N >= 0, h >= 1")
    lhs = gauss_binom(2 * N + 2 * h, h - 1)
    rhs = ZERO
    for k in range((h - 1) // 2 + 1):
        for j in range(k, h - k):
            term = gauss_binom(N + h, j) * gauss_binom(j, k) * gauss_binom(N + h - j, h - j - k - 1)
            if term.is_zero():
                continue
            rhs = rhs + term.shift(k * (N + k + 1) + j * (N + j + 1))
    diff = lhs - rhs
    return IdentityCheckResult("double-expansion", {"N": N, "h": h}, diff.is_zero(), diff)
