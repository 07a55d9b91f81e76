"""Weighted Dedekind symbols and the concrete families built on them.

A weighted Dedekind symbol of weight w is a function E on (h, k), h >= 1,
with E(h, k + h) = E(h, k) and E(ch, ck) = c^w E(h, k). The families here:

* ``G_w(h, k) = gcd(h, k)^w`` and ``F_w(h, k) = h^w`` (the trivial ones),
* ``E_{w,n}`` built from the unimodular sum ``I_{w,n}`` plus Bernoulli
  corrections, with polynomial reciprocity function ``S_{w,n}``,
* the odd Eisenstein symbol ``-h^w/(2(w+1)) s_{w+1}(k, h)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Callable, NamedTuple

from .exact import (
    apostol_sum,
    bernoulli_number,
    format_rational,
    parse_rational,
    periodic_bernoulli,
)
from .unimodular import EnumerationBox, i_sum_farey, i_sum_terms

__all__ = [
    "SymbolPoint",
    "SymbolFamilyParams",
    "DedekindSymbol",
    "HomogeneousPolynomial",
    "trivial_g",
    "trivial_f",
    "i_sum",
    "e_symbol",
    "e_at_origin_closed_form",
    "s_reciprocity_poly",
    "eisenstein_odd_symbol",
    "g_symbol",
    "f_symbol",
    "e_family",
    "eisenstein_symbol",
    "zero_symbol",
    "parse_symbol_spec",
    "MalformedSymbolSpec",
]


class MalformedSymbolSpec(ValueError):
    """A symbol spec string that does not parse at all."""


class SymbolPoint(NamedTuple):
    h: int
    k: int


def _check_point(h: int, k: int) -> None:
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")


@dataclass(frozen=True)
class SymbolFamilyParams:
    w: int
    n: int

    def __post_init__(self):
        if self.w < 2 or self.w % 2:
            raise ValueError(f"weight must be even and >= 2, got {self.w}")
        if not 0 < self.n < self.w:
            raise ValueError(f"need 0 < n < w, got n={self.n}, w={self.w}")

    @property
    def n_tilde(self) -> int:
        return self.w - self.n


@dataclass(frozen=True, eq=False)
class DedekindSymbol:
    """An evaluable symbol carrying its weight and declared parity.

    ``parity`` is ``"even"``, ``"odd"`` or ``None`` (no parity claimed).
    """

    weight: int
    parity: str | None
    evaluator: Callable[[int, int], Fraction] = field(repr=False)
    name: str = "E"

    def __call__(self, h: int, k: int) -> Fraction:
        _check_point(h, k)
        return Fraction(self.evaluator(h, k))

    def __add__(self, other: "DedekindSymbol") -> "DedekindSymbol":
        if other.weight != self.weight:
            raise ValueError("cannot add symbols of different weight")
        parity = self.parity if self.parity == other.parity else None
        return DedekindSymbol(
            self.weight, parity, lambda h, k: self(h, k) + other(h, k),
            f"({self.name} + {other.name})",
        )

    def scale(self, c) -> "DedekindSymbol":
        c = Fraction(c)
        return DedekindSymbol(self.weight, self.parity, lambda h, k: c * self(h, k),
                              f"{format_rational(c)}*{self.name}")


# --- homogeneous polynomials -------------------------------------------------

@dataclass(frozen=True)
class HomogeneousPolynomial:
    """Homogeneous polynomial in (h, k) of fixed degree.

    ``coefficients`` maps the exponent of h to the coefficient of
    h^i k^(degree - i); zero coefficients are never stored.
    """

    degree: int
    coefficients: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for i, c in self.coefficients.items():
            if not 0 <= i <= self.degree:
                raise ValueError(f"exponent {i} outside 0..{self.degree}")
            c = Fraction(c)
            if c:
                clean[i] = c
        object.__setattr__(self, "coefficients", clean)

    def coeff(self, i: int) -> Fraction:
        return self.coefficients.get(i, Fraction(0))

    def __call__(self, h, k) -> Fraction:
        h, k = Fraction(h), Fraction(k)
        return sum((c * h**i * k ** (self.degree - i) for i, c in self.coefficients.items()),
                   Fraction(0))

    def _combine(self, other, sign):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coefficients)
        for i, c in other.coefficients.items():
            out[i] = out.get(i, Fraction(0)) + sign * c
        return HomogeneousPolynomial(self.degree, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coefficients.items()))))

    def is_zero(self) -> bool:
        return not self.coefficients

    def parity(self) -> str | None:
        """'even' if only even powers of k occur, 'odd' if only odd, else None."""
        ks = {(self.degree - i) % 2 for i in self.coefficients}
        if ks <= {0}:
            return "even"
        if ks == {1}:
            return "odd"
        return None

    def substitute_shear_left(self) -> "HomogeneousPolynomial":
        """g(h + k, k) as a new polynomial."""
        out: dict[int, Fraction] = {}
        for i, c in self.coefficients.items():
            # (h + k)^i k^(D-i) = sum_j C(i, j) h^j k^(D-j)
            for j in range(i + 1):
                out[j] = out.get(j, Fraction(0)) + c * comb(i, j)
        return HomogeneousPolynomial(self.degree, out)

    def substitute_shear_right(self) -> "HomogeneousPolynomial":
        """g(h, h + k) as a new polynomial."""
        out: dict[int, Fraction] = {}
        D = self.degree
        for i, c in self.coefficients.items():
            # h^i (h + k)^(D-i) = sum_j C(D-i, j) h^(i+j) k^(D-i-j)
            for j in range(D - i + 1):
                out[i + j] = out.get(i + j, Fraction(0)) + c * comb(D - i, j)
        return HomogeneousPolynomial(self.degree, out)

    def to_json(self) -> list[dict]:
        return [{"i": i, "coeff": format_rational(self.coefficients[i])}
                for i in sorted(self.coefficients, reverse=True)]

    @classmethod
    def from_json(cls, degree: int, items: list[dict]) -> "HomogeneousPolynomial":
        return cls(degree, {int(it["i"]): parse_rational(it["coeff"]) for it in items})


# --- trivial symbols ---------------------------------------------------------

def trivial_g(w: int, h: int, k: int) -> Fraction:
    """gcd(h, k)^w, with gcd(h, 0) = h."""
    _check_point(h, k)
    return Fraction(gcd(h, k) ** w)


def trivial_f(w: int, h: int, k: int) -> Fraction:
    _check_point(h, k)
    return Fraction(h**w)


# --- E_{w,n} -----------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _i_sum_farey(w: int, n: int, h: int, k: int) -> int:
    return i_sum_farey(w, n, h, k)


@lru_cache(maxsize=1 << 14)
def _i_sum_box(w: int, n: int, h: int, k: int) -> int:
    return i_sum_terms(w, n, h, k)


def i_sum(w: int, n: int, h: int, k: int, box: EnumerationBox | None = None,
          method: str = "farey") -> int:
    """The finite unimodular sum I_{w,n}(h, k); always an integer.

    ``method="farey"`` walks only the contributing matrices; ``"box"`` sums the
    full box enumeration. Passing ``box`` implies the box method.
    """
    SymbolFamilyParams(w, n)
    _check_point(h, k)
    if box is not None and box != EnumerationBox():
        return i_sum_terms(w, n, h, k, box)
    if method == "box" or box is not None:
        return _i_sum_box(w, n, h, k)
    if method != "farey":
        raise ValueError(f"unknown method {method!r}")
    return _i_sum_farey(w, n, h, k)


def _origin_constant(w: int, n: int) -> Fraction:
    """(w+2)/B_{w+2} * B_{n+1}/(n+1) * B_{w-n+1}/(w-n+1)."""
    top = bernoulli_number(w + 2)
    assert top != 0, "B_{w+2} vanishes"
    nt = w - n
    return (w + 2) / top * (bernoulli_number(n + 1) / (n + 1)) * (bernoulli_number(nt + 1) / (nt + 1))


def e_symbol(w: int, n: int, h: int, k: int, box: EnumerationBox | None = None) -> Fraction:
    """E_{w,n}(h, k): I_{w,n} plus periodic Bernoulli corrections."""
    SymbolFamilyParams(w, n)
    _check_point(h, k)
    nt = w - n
    x = Fraction(k, h)
    hw = h**w
    val = Fraction(i_sum(w, n, h, k, box))
    if n % 2:
        val -= periodic_bernoulli(n + 1, x) * hw / (n + 1)
        val -= periodic_bernoulli(nt + 1, x) * hw / (nt + 1)
        val += _origin_constant(w, n) * hw
    else:
        val += periodic_bernoulli(n + 1, x) * hw / (n + 1)
        val -= periodic_bernoulli(nt + 1, x) * hw / (nt + 1)
    return val


def e_at_origin_closed_form(w: int, n: int) -> Fraction:
    """E_{w,n}(1, 0) for odd n, without touching the unimodular sum."""
    SymbolFamilyParams(w, n)
    if n % 2 == 0:
        raise ValueError("closed form at the origin needs n odd")
    nt = w - n
    return (-bernoulli_number(n + 1) / (n + 1) - bernoulli_number(nt + 1) / (nt + 1)
            + _origin_constant(w, n))


def _bernoulli_hom(m: int, w: int, swapped: bool) -> dict[int, Fraction]:
    # B_m(k/h) h^w = sum_j C(m,j) B_j k^(m-j) h^(w-m+j); swapped gives B_m(h/k) k^w
    out = {}
    for j in range(m + 1):
        c = comb(m, j) * bernoulli_number(j)
        i = (m - j) if swapped else (w - m + j)
        out[i] = out.get(i, Fraction(0)) + c
    return out


def s_reciprocity_poly(w: int, n: int) -> HomogeneousPolynomial:
    """The reciprocity polynomial S_{w,n}, expanded into monomials."""
    SymbolFamilyParams(w, n)
    nt = w - n

    def part(m, swapped, sign):
        return HomogeneousPolynomial(
            w, {i: sign * c / m for i, c in _bernoulli_hom(m, w, swapped).items()})

    if n % 2:
        poly = (part(n + 1, False, -1) + part(n + 1, True, 1)
                + part(nt + 1, False, -1) + part(nt + 1, True, 1))
        K = _origin_constant(w, n)
        poly = poly + HomogeneousPolynomial(w, {w: K, 0: -K})
    else:
        poly = (part(n + 1, False, 1) + part(n + 1, True, 1)
                + part(nt + 1, False, -1) + part(nt + 1, True, -1))
    return poly


def eisenstein_odd_symbol(w: int, h: int, k: int) -> Fraction:
    """-h^w / (2(w+1)) * s_{w+1}(k, h)."""
    _check_point(h, k)
    return -Fraction(h**w, 2 * (w + 1)) * apostol_sum(w + 1, k, h)


# --- symbol objects ----------------------------------------------------------

def g_symbol(w: int) -> DedekindSymbol:
    return DedekindSymbol(w, "even", lambda h, k: trivial_g(w, h, k), f"G_{w}")


def f_symbol(w: int) -> DedekindSymbol:
    return DedekindSymbol(w, "even", lambda h, k: trivial_f(w, h, k), f"F_{w}")


def e_family(w: int, n: int, box: EnumerationBox | None = None) -> DedekindSymbol:
    """E_{w,n} as a symbol: even for n odd, odd for n even."""
    SymbolFamilyParams(w, n)
    parity = "even" if n % 2 else "odd"
    return DedekindSymbol(w, parity, lambda h, k: e_symbol(w, n, h, k, box), f"E_{w},{n}")


def eisenstein_symbol(w: int) -> DedekindSymbol:
    if w < 2 or w % 2:
        raise ValueError(f"weight must be even and >= 2, got {w}")
    return DedekindSymbol(w, "odd", lambda h, k: eisenstein_odd_symbol(w, h, k), f"Eis_{w}")


def zero_symbol(w: int) -> DedekindSymbol:
    return DedekindSymbol(w, None, lambda h, k: Fraction(0), "0")


def parse_symbol_spec(spec: str, box: EnumerationBox | None = None) -> DedekindSymbol:
    """'G:w', 'F:w', 'E:w:n' or 'Eis:w' to a symbol; ValueError when malformed."""
    parts = spec.split(":")
    try:
        kind, args = parts[0], [int(p) for p in parts[1:]]
    except ValueError:
        raise MalformedSymbolSpec(f"malformed symbol spec {spec!r}") from None
    arity = {"G": 1, "F": 1, "E": 2, "Eis": 1}
    if kind not in arity or len(args) != arity[kind]:
        raise MalformedSymbolSpec(f"malformed symbol spec {spec!r}")
    w = args[0]
    if w < 2 or w % 2:
        raise ValueError(f"weight must be even and >= 2, got {w}")
    if kind == "G":
        return g_symbol(w)
    if kind == "F":
        return f_symbol(w)
    if kind == "Eis":
        return eisenstein_symbol(w)
    return e_family(w, args[1], box)
