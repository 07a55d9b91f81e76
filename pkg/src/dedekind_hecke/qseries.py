"""Truncated integer q-expansions of Delta, E4, E6 and the level-one eigenforms.

This module deliberately shares nothing with the symbol machinery apart from
the divisor-sum helper, so it can serve as ground truth for tau values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exact import sigma

__all__ = [
    "QSeries",
    "series_mul",
    "qexp_delta",
    "qexp_e4",
    "qexp_e6",
    "qexp_eigenform",
    "EIGENFORM_PRODUCTS",
    "DEFAULT_TRUNCATION",
]

DEFAULT_TRUNCATION = 32


@dataclass(frozen=True)
class QSeries:
    """sum_{i=0}^{N} coefficients[i] q^i, known modulo q^(N+1)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise ValueError("truncation must be >= 1")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        if not 0 <= i <= self.truncation:
            raise IndexError(f"coefficient q^{i} beyond truncation {self.truncation}")
        return self.coefficients[i]

    def __mul__(self, other: "QSeries") -> "QSeries":
        return series_mul(self, other)

    def truncate(self, N: int) -> "QSeries":
        return QSeries(self.coefficients[: N + 1])

    def to_list(self, count: int | None = None) -> list[int]:
        return list(self.coefficients[:count])

    @classmethod
    def one(cls, N: int) -> "QSeries":
        return cls((1,) + (0,) * N)


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at the smaller of the two truncations."""
    N = min(a.truncation, b.truncation)
    x, y = a.coefficients, b.coefficients
    out = [0] * (N + 1)
    for i in range(N + 1):
        xi = x[i]
        if xi:
            for j in range(N + 1 - i):
                out[i + j] += xi * y[j]
    return QSeries(out)


def _series_pow(s: QSeries, e: int) -> QSeries:
    result = QSeries.one(s.truncation)
    base = s
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def qexp_delta(N: int = DEFAULT_TRUNCATION) -> QSeries:
    """q * prod_{n>=1} (1 - q^n)^24 through q^N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    # prod (1 - q^n) is only needed through q^(N-1) before the shift by q
    M = N - 1
    prod = QSeries.one(max(M, 1))
    for n in range(1, M + 1):
        factor = [0] * (max(M, 1) + 1)
        factor[0], factor[n] = 1, -1
        prod = prod * QSeries(factor)
    eta24 = _series_pow(prod, 24)
    return QSeries((0,) + eta24.coefficients[:M + 1])


def _eisenstein(N: int, const: int, k: int) -> QSeries:
    if N < 1:
        raise ValueError("N must be >= 1")
    return QSeries([1] + [const * sigma(k, n) for n in range(1, N + 1)])


def qexp_e4(N: int = DEFAULT_TRUNCATION) -> QSeries:
    """1 + 240 sum sigma_3(n) q^n."""
    return _eisenstein(N, 240, 3)


def qexp_e6(N: int = DEFAULT_TRUNCATION) -> QSeries:
    """1 - 504 sum sigma_5(n) q^n."""
    return _eisenstein(N, -504, 5)


# ell -> (power of E4, power of E6) multiplying Delta
EIGENFORM_PRODUCTS = {
    10: (0, 0),
    14: (1, 0),
    16: (0, 1),
    18: (2, 0),
    20: (1, 1),
    24: (2, 1),
}


def qexp_eigenform(ell: int, N: int = DEFAULT_TRUNCATION) -> QSeries:
    """Normalized cusp eigenform of weight ell + 2 (Delta, E4 Delta, E6 Delta, ...)."""
    try:
        p4, p6 = EIGENFORM_PRODUCTS[ell]
    except KeyError:
        raise ValueError(f"ell must be one of {sorted(EIGENFORM_PRODUCTS)}, got {ell}") from None
    f = qexp_delta(N)
    for _ in range(p4):
        f = f * qexp_e4(N)
    for _ in range(p6):
        f = f * qexp_e6(N)
    return f


def _binomial_series(e: int, N: int) -> QSeries:
    """(1 - q)^e through q^N, straight from binomial coefficients."""
    return QSeries([(-1) ** j * comb(e, j) if j <= e else 0 for j in range(N + 1)])
