"""Hecke operators on weighted Dedekind symbols and generalized tau functions.

    (T_n E)(h, k) = sum_{ad = n, d > 0} sum_{b mod d} E(dh, ak + bh)

For a normalized eigenform f the associated even symbol is proportional to
E_{ell, n0} with n0 = 2*floor((ell + 2)/4) - 1, so T_m E(p) / E(p) is the
m-th Fourier coefficient of f at any point p where E(p) != 0.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import bernoulli_number, divisors, periodic_bernoulli
from .symbols import (
    DedekindSymbol,
    SymbolPoint,
    e_at_origin_closed_form,
    e_family,
    i_sum,
)
from .unimodular import enumerate_box_terms

__all__ = [
    "ELLS",
    "HeckeIndex",
    "EigenReport",
    "SymbolExhausted",
    "hecke_index",
    "hecke_apply",
    "hecke_symbol",
    "find_nonzero_point",
    "nonzero_points",
    "eigenvalue",
    "eigen_family_n",
    "tau",
    "tau_prime_closed_form",
    "tau_ramanujan_elementary",
    "closed_form_coefficients",
    "derived_closed_form_coefficients",
    "hecke_at_origin_closed_form",
    "hecke_general_closed_form",
    "is_prime",
]

ELLS = (10, 14, 16, 18, 20, 24)


class SymbolExhausted(LookupError):
    """No nonzero value of a symbol was found within the search limit."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class HeckeIndex:
    n: int
    divisor_triples: tuple[tuple[int, int, int], ...]


def hecke_index(n: int) -> HeckeIndex:
    """All (a, d, b) with ad = n, d > 0, 0 <= b < d."""
    if n < 1:
        raise ValueError("n must be >= 1")
    triples = tuple((n // d, d, b) for d in divisors(n) for b in range(d))
    return HeckeIndex(n, triples)


def hecke_apply(E: DedekindSymbol, n: int, h: int, k: int) -> Fraction:
    """(T_n E)(h, k)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    return sum((E(d * h, a * k + b * h) for a, d, b in hecke_index(n).divisor_triples),
               Fraction(0))


def hecke_symbol(E: DedekindSymbol, n: int) -> DedekindSymbol:
    """T_n E as a symbol of the same weight and parity."""
    return DedekindSymbol(E.weight, E.parity, lambda h, k: hecke_apply(E, n, h, k),
                          f"T_{n}({E.name})")


def nonzero_points(E: DedekindSymbol, count: int, search_limit: int = 64):
    """The first ``count`` points (h = 1.., k = 0..h-1) with E(h, k) != 0."""
    found = []
    for h in range(1, search_limit + 1):
        for k in range(h):
            if E(h, k) != 0:
                found.append(SymbolPoint(h, k))
                if len(found) == count:
                    return found
    return found


def find_nonzero_point(E: DedekindSymbol, search_limit: int = 16) -> SymbolPoint:
    if search_limit < 1:
        raise ValueError("search_limit must be >= 1")
    pts = nonzero_points(E, 1, search_limit)
    if not pts:
        raise SymbolExhausted(f"{E.name} vanishes on every point with h <= {search_limit}")
    return pts[0]


@dataclass
class EigenReport:
    base_point: SymbolPoint
    eigenvalue: Fraction
    checked_points: list[SymbolPoint] = field(default_factory=list)
    consistent: bool = True


def eigenvalue(E: DedekindSymbol, n: int, extra_checks: int = 0,
               base_point: SymbolPoint | None = None,
               search_limit: int = 16) -> EigenReport:
    """Ratio T_n E(p) / E(p) at a base point, cross-checked at further points.

    ``consistent`` is False when the ratio differs anywhere, i.e. E is not an
    eigen-symbol for T_n.
    """
    p = base_point or find_nonzero_point(E, search_limit)
    base = E(*p)
    if base == 0:
        raise ValueError(f"{E.name} vanishes at the base point {tuple(p)}")
    lam = hecke_apply(E, n, *p) / base
    report = EigenReport(SymbolPoint(*p), lam)
    if extra_checks:
        pts = [q for q in nonzero_points(E, extra_checks + 1, search_limit) if q != tuple(p)]
        for q in pts[:extra_checks]:
            report.checked_points.append(q)
            if hecke_apply(E, n, *q) != lam * E(*q):
                report.consistent = False
    return report


def eigen_family_n(ell: int) -> int:
    """n0 = 2*floor((ell + 2)/4) - 1, the odd index whose E_{ell,n0} is an eigen-symbol."""
    if ell not in ELLS:
        raise ValueError(f"ell must be one of {ELLS}, got {ell}")
    return 2 * ((ell + 2) // 4) - 1


def tau(ell: int, m: int) -> int:
    """tau_{ell+2}(m) through the Hecke operator on E_{ell,n0} at (1, 0)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    E = e_family(ell, eigen_family_n(ell))
    report = eigenvalue(E, m, base_point=SymbolPoint(1, 0))
    lam = report.eigenvalue
    if lam.denominator != 1:
        raise ArithmeticError(f"non-integral eigenvalue {lam} for ell={ell}, m={m}")
    return lam.numerator


# Tabulated closed forms, for prime m:
#   tau(m) = 1 + m^(ell+1) + mult * { sum_j c_j (m^e_j - m^(ell+1)) + sum_b I_{ell,n0}(m, b) }
_CLOSED_FORMS = {
    10: (Fraction(-691, 6), ((Fraction(-1, 126), 5),)),
    14: (Fraction(3617, 30), ((Fraction(1, 120), 7),)),
    16: (Fraction(-43867, 150), ((Fraction(-1, 132), 7), (Fraction(1, 240), 9))),
    18: (Fraction(-174611, 2646), ((Fraction(-1, 66), 9),)),
    20: (Fraction(77683, 1050), ((Fraction(691, 32760), 9), (Fraction(-1, 132), 11))),
    24: (Fraction(-657931, 40950), ((Fraction(-1, 12), 11), (Fraction(691, 32760), 13))),
}


def closed_form_coefficients(ell: int):
    """(multiplier, ((coeff, exponent), ...)) of the prime-index tau formula for ell."""
    if ell not in _CLOSED_FORMS:
        raise ValueError(f"ell must be one of {ELLS}, got {ell}")
    return _CLOSED_FORMS[ell]


def _row_term(args) -> int:
    w, n, m, b = args
    return i_sum(w, n, m, b, method="box")


def _row_sum(w: int, n: int, m: int, workers: int = 1) -> int:
    """sum_{b=0}^{m-1} I_{w,n}(m, b) by full box enumeration.

    The box route is kept here on purpose so that the closed forms and the
    operator route (which uses the Stern-Brocot walk) check each other.
    """
    jobs = [(w, n, m, b) for b in range(m)]
    if workers > 1 and m > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_row_term, jobs))
    return sum(map(_row_term, jobs))


def tau_prime_closed_form(ell: int, m: int, workers: int = 1) -> int:
    """tau_{ell+2}(m) for prime m from the explicit per-weight formula."""
    if not is_prime(m):
        raise ValueError(f"closed form needs m prime, got {m}")
    mult, terms = closed_form_coefficients(ell)
    top = m ** (ell + 1)
    inner = sum((c * (m**e - top) for c, e in terms), Fraction(0))
    inner += _row_sum(ell, eigen_family_n(ell), m, workers)
    val = 1 + top + mult * inner
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral closed form {val} for ell={ell}, m={m}")
    return val.numerator


def tau_ramanujan_elementary(m: int) -> int:
    """Ramanujan's tau(m), m prime, from the plain entry-box sum |a|,|b|,|c|,|d| <= 2m."""
    if not is_prime(m):
        raise ValueError(f"needs m prime, got {m}")
    total = sum(t for i in range(m) for _, t in enumerate_box_terms(10, 5, m, i, 2 * m))
    val = 1 + m**11 + Fraction(691, 756) * (m**5 - m**11) - Fraction(691, 6) * total
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral value {val} for m={m}")
    return val.numerator


def _bernoulli_ratio(j: int) -> Fraction:
    return bernoulli_number(j + 1) / (j + 1)


def _origin_term(w: int, n: int) -> Fraction:
    return (w + 2) / bernoulli_number(w + 2) * _bernoulli_ratio(n) * _bernoulli_ratio(w - n)


def hecke_at_origin_closed_form(w: int, n: int, m: int) -> Fraction:
    """(T_m E_{w,n})(1, 0) for n odd and m prime, expanded into unimodular sums."""
    if n % 2 == 0:
        raise ValueError("needs n odd")
    if not is_prime(m):
        raise ValueError(f"needs m prime, got {m}")
    nt = w - n
    return (_row_sum(w, n, m)
            - _bernoulli_ratio(n) * (1 + m**nt)
            - _bernoulli_ratio(nt) * (1 + m**n)
            + (1 + m ** (w + 1)) * _origin_term(w, n))


def hecke_general_closed_form(w: int, n: int, m: int, h: int, k: int) -> Fraction:
    """(T_m E_{w,n})(h, k) for n odd and m prime, expanded into unimodular sums."""
    if n % 2 == 0:
        raise ValueError("needs n odd")
    if not is_prime(m):
        raise ValueError(f"needs m prime, got {m}")
    nt = w - n
    hw = h**w
    x, mx = Fraction(k, h), Fraction(m * k, h)
    return (i_sum(w, n, h, m * k)
            + sum(i_sum(w, n, m * h, k + b * h) for b in range(m))
            - (periodic_bernoulli(n + 1, mx) + m**nt * periodic_bernoulli(n + 1, x)) * hw / (n + 1)
            - (periodic_bernoulli(nt + 1, mx) + m**n * periodic_bernoulli(nt + 1, x)) * hw / (nt + 1)
            + (1 + m ** (w + 1)) * _origin_term(w, n) * hw)


def derived_closed_form_coefficients(ell: int):
    """Rebuild the closed-form coefficients from Bernoulli numbers alone.

    From T_m E(1,0) / E(1,0) with E(1,0) = -A - A' + K, where A = B_{n+1}/(n+1),
    A' = B_{w-n+1}/(w-n+1):
        tau(m) = 1 + m^(w+1) + (1/E(1,0)) { -A (m^(w-n) - m^(w+1)) - A' (m^n - m^(w+1)) + sum_b I }
    """
    n = eigen_family_n(ell)
    nt = ell - n
    mult = 1 / e_at_origin_closed_form(ell, n)
    coeffs: dict[int, Fraction] = {}
    for c, e in ((-_bernoulli_ratio(n), nt), (-_bernoulli_ratio(nt), n)):
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
    return mult, tuple((coeffs[e], e) for e in sorted(coeffs))
