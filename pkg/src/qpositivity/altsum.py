"""Alternating sums of products of Gaussian coefficients.

The central object is

    F(m; n; a, b) = pre(m, n) * sum_{k=-n1}^{n1} (-1)^k q^{a k^2 + (2b-1) k(k-1)/2}
                    * prod_i gauss_binom(m_i + m_{i+1} + 1, m_i + k)
                    * prod_j gauss_binom(n_j + n_{j+1}, n_j + k)

with cyclic index wraparound and the prefactor

    pre(m, n) = [m1]![n1]![m_r + n_s + 1]! / ([m1 + m_r + 1]![n1 + n_s]!).

The whole k-sum is accumulated first and the prefactor division is the one
final exact division: individual terms are not generally polynomial, so a
NotDivisible there is a meaningful global signal, not a per-term accident.

The module also provides executable checks for the reciprocity relation
under q -> 1/q, the q-Chu-Vandermonde product identity, the deletion
recurrence that removes two adjacent m-parameters, and the cyclic-product
recombination step that recurrence relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .qcombinat import (
    INVERSE_VANISHES,
    InvalidRange,
    choose2,
    gauss_binom,
    q_factorial,
    q_poch,
)
from .qpoly import IntPoly, NotDivisible, ONE, ZERO
from .reporting import IdentityCheckResult


@dataclass(frozen=True)
class CyclicParams:
    """Parameters (m-vector, n-vector, a, b) of the alternating sum F.

    Validation is strict here and nowhere else: r, s >= 2, every m_i >= 0,
    every n_j >= 1, 0 <= a <= s and 1 <= b <= r.  The a/b window checks can
    be waived with unsafe=True for out-of-theorem exploration; the shape
    constraints always hold (n_1 = 0 has no defined summation convention
    and is rejected outright).
    """

    m: tuple[int, ...]
    n: tuple[int, ...]
    a: int
    b: int
    unsafe: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(self.m))
        object.__setattr__(self, "n", tuple(self.n))
        r, s = len(self.m), len(self.n)
        if r < 2 or s < 2:
            raise InvalidRange(f"need r >= 2 and s >= 2, got r={r}, s={s}")
        if any(mi < 0 for mi in self.m):
            raise InvalidRange(f"m entries must be >= 0, got {self.m}")
        if any(nj < 1 for nj in self.n):
            raise InvalidRange(f"n entries must be >= 1, got {self.n}")
        if not self.unsafe:
            if not 0 <= self.a <= s:
                raise InvalidRange(f"need 0 <= a <= s={s}, got a={self.a}")
            if not 1 <= self.b <= r:
                raise InvalidRange(f"need 1 <= b <= r={r}, got b={self.b}")

    @property
    def r(self) -> int:
        return len(self.m)

    @property
    def s(self) -> int:
        return len(self.n)

    def in_theorem(self) -> bool:
        """True when (a, b) lies in the proven window and all m_i >= 1."""
        return (
            0 <= self.a <= self.s
            and 1 <= self.b <= self.r
            and all(mi >= 1 for mi in self.m)
        )


@dataclass
class PositivityReport:
    """Per-instance verdict for a positivity scan of F."""

    params: CyclicParams
    poly: IntPoly | None
    is_polynomial: bool
    nonneg: bool
    degree: int | None
    value_at_one: int


def cyclic_product(m: tuple[int, ...], n: tuple[int, ...], k: int) -> IntPoly:
    """prod_i gauss_binom(m_i+m_{i+1}+1, m_i+k) * prod_j gauss_binom(n_j+n_{j+1}, n_j+k),
    with wraparound m_{r+1} = m_1, n_{s+1} = n_1."""
    r, s = len(m), len(n)
    out = ONE
    for i in range(r):
        factor = gauss_binom(m[i] + m[(i + 1) % r] + 1, m[i] + k)
        if factor.is_zero():
            return ZERO
        out = out * factor
    for j in range(s):
        factor = gauss_binom(n[j] + n[(j + 1) % s], n[j] + k)
        if factor.is_zero():
            return ZERO
        out = out * factor
    return out


_f_cache: dict[tuple[tuple[int, ...], tuple[int, ...], int, int], IntPoly] = {}


def F(params: CyclicParams) -> IntPoly:
    """Evaluate the alternating sum; raises NotDivisible when the prefactored
    sum is not a polynomial at these parameters."""
    key = (params.m, params.n, params.a, params.b)
    cached = _f_cache.get(key)
    if cached is not None:
        return cached
    m, n, a, b = params.m, params.n, params.a, params.b
    n1 = n[0]
    total = ZERO
    for k in range(-n1, n1 + 1):
        term = cyclic_product(m, n, k)
        if term.is_zero():
            continue
        e = a * k * k + (2 * b - 1) * choose2(k)
        assert e >= 0, f"negative exponent {e} at k={k}"
        term = term.shift(e)
        total = total - term if k % 2 else total + term
    num = q_factorial(m[0]) * q_factorial(n1) * q_factorial(m[-1] + n[-1] + 1) * total
    den = q_factorial(m[0] + m[-1] + 1) * q_factorial(n1 + n[-1])
    result = num.exact_div(den)
    _f_cache[key] = result
    return result


def delta(m: tuple[int, ...], n: tuple[int, ...]) -> int:
    """The reciprocity exponent; also an upper bound for deg F."""
    r, s = len(m), len(n)
    d = (
        choose2(m[0])
        + choose2(n[0])
        + choose2(m[-1] + n[-1] + 1)
        - choose2(m[0] + m[-1] + 1)
        - choose2(n[0] + n[-1])
    )
    d += sum(m[i] * (m[(i + 1) % r] + 1) for i in range(r))
    d += sum(n[j] * n[(j + 1) % s] for j in range(s))
    return d


def _int_binom(N: int, K: int) -> int:
    return comb(N, K) if 0 <= K <= N else 0


def value_at_one_reference(params: CyclicParams) -> Fraction:
    """Independent integer-only evaluation of F at q = 1 (exact rational;
    integral whenever F is a polynomial)."""
    m, n, _a, _b = params.m, params.n, params.a, params.b
    r, s = len(m), len(n)
    n1 = n[0]
    total = 0
    for k in range(-n1, n1 + 1):
        prod = 1
        for i in range(r):
            prod *= _int_binom(m[i] + m[(i + 1) % r] + 1, m[i] + k)
        for j in range(s):
            prod *= _int_binom(n[j] + n[(j + 1) % s], n[j] + k)
        total += -prod if k % 2 else prod
    pre = Fraction(
        factorial(m[0]) * factorial(n1) * factorial(m[-1] + n[-1] + 1),
        factorial(m[0] + m[-1] + 1) * factorial(n1 + n[-1]),
    )
    return pre * total


def positivity_report(params: CyclicParams) -> PositivityReport:
    """Evaluate F and package the verdict; NotDivisible becomes a
    not-a-polynomial verdict instead of an exception."""
    try:
        poly = F(params)
    except NotDivisible:
        ref = value_at_one_reference(params)
        at_one = int(ref) if ref.denominator == 1 else 0
        return PositivityReport(params, None, False, False, None, at_one)
    return PositivityReport(
        params, poly, True, poly.is_nonneg(), poly.degree, poly.eval_at_one()
    )


def reciprocity_check(params: CyclicParams) -> IdentityCheckResult:
    """Check that reversing F(s-a, r-b+1) at degree delta(m, n) recovers
    F(a, b), together with the degree bound making the reversal lossless."""
    r, s = params.r, params.s
    dual = CyclicParams(params.m, params.n, s - params.a, r - params.b + 1, params.unsafe)
    p = F(params)
    q = F(dual)
    bound = delta(params.m, params.n)
    info = {"m": params.m, "n": params.n, "a": params.a, "b": params.b}
    if q.degree is not None and q.degree > bound:
        return IdentityCheckResult("reciprocity", info, False, q)
    diff = q.reverse_to_degree(bound) - p
    return IdentityCheckResult("reciprocity", info, diff.is_zero(), diff)


def product_identity_check(m1: int, m2: int, k: int) -> IdentityCheckResult:
    """Check the expansion of gauss_binom(m1+m2+1, m1+k)*gauss_binom(m1+m2+1, m2+k)
    as a sum of q-multinomial ratios over t, with terms whose Pochhammer
    index goes negative dropped by the zero convention."""
    if m1 < 0 or m2 < 0:
        raise InvalidRange(f"product_identity_check({m1}, {m2}, {k})")
    lhs = gauss_binom(m1 + m2 + 1, m1 + k) * gauss_binom(m1 + m2 + 1, m2 + k)
    top = q_poch(m1 + m2 + 1)
    assert isinstance(top, IntPoly)
    rhs = ZERO
    for t in range(m1 - k + 2):
        idxs = (t, t + 2 * k - 1, m1 - k - t + 1, m2 - k - t + 1)
        parts = [q_poch(u) for u in idxs]
        if any(p is INVERSE_VANISHES for p in parts):
            continue
        den = ONE
        for p in parts:
            den = den * p  # type: ignore[operator]
        term = top.exact_div(den)
        rhs = rhs + term.shift(t * (t + 2 * k - 1))
    diff = lhs - rhs
    info = {"m1": m1, "m2": m2, "k": k}
    return IdentityCheckResult("product", info, diff.is_zero(), diff)


def deletion_check(params: CyclicParams) -> IdentityCheckResult:
    """Check the recurrence deleting m_1, m_2: F at (r, b) equals the sum over
    0 <= ell <= m_1 of q^{ell^2+ell} gauss_binom(m1, ell)
    gauss_binom(m2+m3+1, m2-ell) times F at (r-1, b-1) with m-vector
    (ell, m3, ..., m_r)."""
    if params.r < 3 or params.b < 2:
        raise InvalidRange(
            f"deletion_check requires r >= 3 and 2 <= b <= r, got r={params.r}, b={params.b}"
        )
    m = params.m
    lhs = F(params)
    rhs = ZERO
    for ell in range(m[0] + 1):
        coef = gauss_binom(m[0], ell) * gauss_binom(m[1] + m[2] + 1, m[1] - ell)
        if coef.is_zero():
            continue
        sub = CyclicParams((ell,) + m[2:], params.n, params.a, params.b - 1, params.unsafe)
        rhs = rhs + (coef * F(sub)).shift(ell * ell + ell)
    diff = lhs - rhs
    info = {"m": params.m, "n": params.n, "a": params.a, "b": params.b}
    return IdentityCheckResult("deletion", info, diff.is_zero(), diff)


def recombine_check(
    m: tuple[int, ...], n: tuple[int, ...], ell: int, k: int
) -> IdentityCheckResult:
    """Check, after clearing denominators, that the cyclic product over
    (m3, ..., m_r) relates to the one over (ell, m3, ..., m_r) through the
    stated ratio of Pochhammer symbols.

    Both sides are compared as plain polynomials; a side whose Pochhammer
    index goes negative is zero by convention.  No rational-function
    arithmetic is involved.
    """
    m = tuple(m)
    n = tuple(n)
    if len(m) < 3:
        raise InvalidRange(f"recombine_check needs r >= 3, got r={len(m)}")
    if ell < 0:
        raise InvalidRange(f"recombine_check needs ell >= 0, got {ell}")
    tail = m[2:]
    m3, mr = tail[0], tail[-1]
    left = cyclic_product(tail, n, k)
    if not left.is_zero():
        left = left * q_poch(m3 + ell + 1) * q_poch(mr + ell + 1)  # type: ignore[operator]
    idxs = (ell - k + 1, ell + k, mr + m3 + 1)
    if any(u < 0 for u in idxs):
        right = ZERO
    else:
        right = cyclic_product((ell,) + tail, n, k)
        for u in idxs:
            right = right * q_poch(u)  # type: ignore[operator]
    diff = left - right
    info = {"m": m, "n": n, "ell": ell, "k": k}
    return IdentityCheckResult("recombine", info, diff.is_zero(), diff)
