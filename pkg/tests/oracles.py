"""Independent reference implementations used only by the tests.

Everything here is deliberately naive (schoolbook convolution, sympy exact
quotients) and shares no code with the package under test.
"""

from __future__ import annotations

import sympy
from sympy import S, expand, exquo, prod, symbols

q = symbols("q")


def naive_mul(a: list[int], b: list[int]) -> list[int]:
    """Schoolbook convolution on raw coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return out


def naive_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def sym_qint(n: int):
    return sum(q**i for i in range(n))


def sym_qfact(n: int):
    return prod([sym_qint(i) for i in range(1, n + 1)], S.One)


def sym_coeffs(expr) -> list[int]:
    """Coefficients of a sympy polynomial in q, lowest degree first."""
    p = sympy.Poly(expand(expr), q)
    return [int(c) for c in reversed(p.all_coeffs())]


def sym_qbinom(N: int, K: int):
    if K < 0 or K > N or N < 0:
        return S.Zero
    return exquo(expand(sym_qfact(N)), expand(sym_qfact(K) * sym_qfact(N - K)), q)


def sym_factorial_ratio(num_indices: list[int], den_indices: list[int]):
    """Exact quotient of products of q-factorials; raises if not polynomial."""
    num = expand(prod([sym_qfact(i) for i in num_indices], S.One))
    den = expand(prod([sym_qfact(i) for i in den_indices], S.One))
    return exquo(num, den, q)


def sym_alternating_sum(m: tuple[int, ...], n: tuple[int, ...], a: int, b: int):
    """Brute-force sympy evaluation of the prefactored alternating sum."""
    r, s = len(m), len(n)
    n1 = n[0]
    total = S.Zero
    for k in range(-n1, n1 + 1):
        term = S.NegativeOne**k * q ** (a * k * k + (2 * b - 1) * (k * (k - 1) // 2))
        for i in range(r):
            term *= sym_qbinom(m[i] + m[(i + 1) % r] + 1, m[i] + k)
        for j in range(s):
            term *= sym_qbinom(n[j] + n[(j + 1) % s], n[j] + k)
        total += term
    num = expand(sym_qfact(m[0]) * sym_qfact(n1) * sym_qfact(m[-1] + n[-1] + 1) * expand(total))
    den = expand(sym_qfact(m[0] + m[-1] + 1) * sym_qfact(n1 + n[-1]))
    return exquo(num, den, q)
