"""Exact scalar layer: Bernoulli numbers and functions, divisor sums, Apostol sums.

Every value is a :class:`fractions.Fraction` or a Python ``int``. The Bernoulli
numbers use the convention ``B_1 = -1/2`` so that ``B_m(0) == B_m`` for all m.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, floor, lcm

__all__ = [
    "Rational",
    "as_rational",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly",
    "bernoulli_poly_coefficients",
    "periodic_bernoulli",
    "sigma",
    "divisors",
    "apostol_sum",
    "format_rational",
    "parse_rational",
]

Rational = Fraction

_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _extend_bernoulli(m: int) -> None:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
    with _BERNOULLI_LOCK:
        table = _BERNOULLI
        for n in range(len(table), m + 1):
            if n >= 3 and n % 2 == 1:
                table.append(Fraction(0))
                continue
            s = sum((comb(n + 1, j) * table[j] for j in range(n)), Fraction(0))
            table.append(-s / (n + 1))


def bernoulli_number(m: int) -> Fraction:
    """Return B_m with B_1 = -1/2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m >= len(_BERNOULLI):
        _extend_bernoulli(m)
    return _BERNOULLI[m]


def bernoulli_numbers(m: int) -> list[Fraction]:
    """B_0, ..., B_m as a fresh list."""
    bernoulli_number(m)
    return list(_BERNOULLI[: m + 1])


def bernoulli_poly_coefficients(m: int) -> list[Fraction]:
    """Coefficients of B_m(x) by ascending power of x."""
    if m < 0:
        raise ValueError("m must be >= 0")
    # x^i has coefficient C(m, m-i) B_{m-i}
    return [comb(m, i) * bernoulli_number(m - i) for i in range(m + 1)]


@lru_cache(maxsize=None)
def _integer_bernoulli_poly(m: int) -> tuple[tuple[int, ...], int]:
    """(C, D) with D * B_m(x) = sum_i C[i] x^i and integer C, D."""
    coeffs = bernoulli_poly_coefficients(m)
    D = lcm(*(c.denominator for c in coeffs))
    return tuple(int(c * D) for c in coeffs), D


def _scaled_bernoulli(m: int, r: int, h: int) -> int:
    """D * h^m * B_m(r/h) as an exact integer (D from _integer_bernoulli_poly)."""
    C, _ = _integer_bernoulli_poly(m)
    acc = 0
    hp = 1
    # Horner in r with the matching powers of h folded in
    for c in reversed(C):
        acc = acc * r + c * hp
        hp *= h
    return acc


def bernoulli_poly(m: int, x) -> Fraction:
    """Evaluate the Bernoulli polynomial B_m at a rational point."""
    x = as_rational(x)
    _, D = _integer_bernoulli_poly(m)
    num, den = x.numerator, x.denominator
    return Fraction(_scaled_bernoulli(m, num, den), D * den**m)


def periodic_bernoulli(m: int, x) -> Fraction:
    """B_m(x - floor(x)).

    Only ``m >= 2`` is supported; for m = 1 the Fourier series and the
    polynomial disagree at integers.
    """
    if m < 2:
        raise ValueError("periodic Bernoulli function is only provided for m >= 2")
    x = as_rational(x)
    return bernoulli_poly(m, x - floor(x))


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order (trial division)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(k: int, n: int) -> int:
    """Sum of the k-th powers of the positive divisors of n."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(d**k for d in divisors(n))


def apostol_sum(m: int, k: int, h: int) -> Fraction:
    """Apostol's generalized Dedekind sum s_m(k, h).

    sum_{mu=0}^{h-1} (mu/h) * Bbar_m(mu*k/h), used here with m = w + 1 odd.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    _, D = _integer_bernoulli_poly(m)
    total = 0
    for mu in range(1, h):
        total += mu * _scaled_bernoulli(m, (mu * k) % h, h)
    return Fraction(total, D * h ** (m + 1))


def format_rational(x) -> str:
    """Canonical ``p/q`` rendering; integers render without a denominator."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(s))
