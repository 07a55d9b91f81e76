"""Enumeration of SL2(Z)/{+-1} representatives entering the finite sum I_{w,n}.

For a point (h, k) the sum runs over matrices (a b; c d) with ad - bc = 1,
ac != 0 and -b/a, -d/c lying strictly on opposite sides of k/h. Every such
matrix fits in the box

    |b + q a| <= |a| <= h,   |d + q c| <= |c| <= h,   q = floor(k/h + 1/2),

so the enumeration walks a in [1, h], c in +-[1, h] coprime to a, and for each
column the integer window of t with (b, d) = (b0 + a t, d0 + c t).

Only matrices whose endpoints -b/a, -d/c bracket k/h strictly contribute, and
those endpoint pairs are exactly the Stern-Brocot intervals on the path to k/h.
:func:`farey_terms` walks that path directly, which costs the sum of the
partial quotients of k/h instead of O(h^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, NamedTuple

__all__ = [
    "UnimodularMatrix",
    "EnumerationBox",
    "extended_gcd",
    "solve_bezout",
    "round_half_up",
    "term_value",
    "enumerate_terms",
    "enumerate_box_terms",
    "i_sum_terms",
    "farey_terms",
    "i_sum_farey",
]


class UnimodularMatrix(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def negate(self) -> "UnimodularMatrix":
        return UnimodularMatrix(-self.a, -self.b, -self.c, -self.d)


@dataclass(frozen=True)
class EnumerationBox:
    """Box half-widths for the (a, c) loop.

    ``a_max``/``c_max`` default to h when left as ``None``. ``slack`` scales
    every bound (including the b- and d-windows) by ``1 + slack``; it exists
    so tests can show that enlarging the box changes nothing.
    """

    a_max: int | None = None
    c_max: int | None = None
    slack: int = 0

    def __post_init__(self):
        if self.slack < 0:
            raise ValueError("slack must be >= 0")
        for v in (self.a_max, self.c_max):
            if v is not None and v < 1:
                raise ValueError("box half-widths must be >= 1")


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def solve_bezout(a: int, c: int) -> tuple[int, int] | None:
    """One solution (b0, d0) of a*d0 - b0*c = 1, or None if gcd(a, c) > 1.

    All solutions are (b0 + a t, d0 + c t) for integer t.
    """
    if a < 1 or c == 0:
        raise ValueError("need a >= 1 and c != 0")
    g, x, y = extended_gcd(a, c)
    if g != 1:
        return None
    # a*x + c*y = 1  =>  d0 = x, b0 = -y
    return -y, x


def round_half_up(k: int, h: int) -> int:
    """floor(k/h + 1/2) for h >= 1."""
    return (2 * k + h) // (2 * h)


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _t_window(base: int, step: int, shift: int, width: int) -> tuple[int, int]:
    """Integer t with |base + shift + step*t| <= width (step != 0)."""
    lo_val = -width - base - shift
    hi_val = width - base - shift
    if step > 0:
        return _ceil_div(lo_val, step), hi_val // step
    # dividing by a negative step flips the inequalities
    return _ceil_div(hi_val, step), lo_val // step


def term_value(w: int, n: int, h: int, k: int, m: UnimodularMatrix) -> int:
    """sgn(k/h + b/a) (ak+bh)^(w-n) (ck+dh)^n, or 0 off the strict sign condition."""
    a, b, c, d = m
    left = a * k + b * h
    right = c * k + d * h
    # (k/h + b/a)(k/h + d/c) < 0  <=>  left*right / (a*c) < 0
    if left * right * a * c >= 0:
        return 0
    sgn = 1 if (left > 0) == (a > 0) else -1
    return sgn * left ** (w - n) * right**n


def _check_family(w: int, n: int) -> None:
    if w < 2 or w % 2:
        raise ValueError(f"weight must be even and >= 2, got {w}")
    if not 0 < n < w:
        raise ValueError(f"need 0 < n < w, got n={n}, w={w}")


def enumerate_terms(
    w: int, n: int, h: int, k: int, box: EnumerationBox | None = None
) -> Iterator[tuple[UnimodularMatrix, int]]:
    """Yield (matrix, term) for every canonical matrix in the enumeration box.

    Matrices that fail the strict sign condition are still yielded, with a
    zero term.
    """
    _check_family(w, n)
    if h < 1:
        raise ValueError("h must be >= 1")
    box = box or EnumerationBox()
    scale = 1 + box.slack
    a_hi = (box.a_max or h) * scale
    c_hi = (box.c_max or h) * scale
    q = round_half_up(k, h)
    for a in range(1, a_hi + 1):
        yield from _column_terms(w, n, h, k, a, c_hi, q, scale)


def _column_terms(w, n, h, k, a, c_hi, q, scale):
    for c_abs in range(1, c_hi + 1):
        if gcd(a, c_abs) != 1:
            continue
        for c in (c_abs, -c_abs):
            b0, d0 = solve_bezout(a, c)
            tb_lo, tb_hi = _t_window(b0, a, q * a, a * scale)
            td_lo, td_hi = _t_window(d0, c, q * c, c_abs * scale)
            for t in range(max(tb_lo, td_lo), min(tb_hi, td_hi) + 1):
                m = UnimodularMatrix(a, b0 + a * t, c, d0 + c * t)
                yield m, term_value(w, n, h, k, m)


def i_sum_terms(
    w: int, n: int, h: int, k: int, box: EnumerationBox | None = None,
    a_range: range | None = None,
) -> int:
    """Sum of enumerate_terms, optionally restricted to a slice of the a-loop.

    Splitting the a-loop into disjoint ranges and adding the partial sums gives
    the full sum; this is what parallel callers use.
    """
    if a_range is None:
        return sum(t for _, t in enumerate_terms(w, n, h, k, box))
    _check_family(w, n)
    box = box or EnumerationBox()
    scale = 1 + box.slack
    c_hi = (box.c_max or h) * scale
    q = round_half_up(k, h)
    return sum(t for a in a_range for _, t in _column_terms(w, n, h, k, a, c_hi, q, scale))


def enumerate_box_terms(
    w: int, n: int, h: int, k: int, bound: int
) -> Iterator[tuple[UnimodularMatrix, int]]:
    """Canonical matrices with every entry bounded by ``bound`` in absolute value.

    This is the plain entry-box form of the sum (|a|,|b|,|c|,|d| <= bound),
    independent of the shifted box used by :func:`enumerate_terms`.
    """
    _check_family(w, n)
    for a in range(1, bound + 1):
        for c_abs in range(1, bound + 1):
            if gcd(a, c_abs) != 1:
                continue
            for c in (c_abs, -c_abs):
                b0, d0 = solve_bezout(a, c)
                tb_lo, tb_hi = _t_window(b0, a, 0, bound)
                td_lo, td_hi = _t_window(d0, c, 0, bound)
                for t in range(max(tb_lo, td_lo), min(tb_hi, td_hi) + 1):
                    m = UnimodularMatrix(a, b0 + a * t, c, d0 + c * t)
                    yield m, term_value(w, n, h, k, m)


def farey_terms(w: int, n: int, h: int, k: int) -> Iterator[tuple[UnimodularMatrix, int]]:
    """Yield only the contributing matrices, via the Stern-Brocot path to k/h.

    Each interval (L, R) on the path with L, R finite gives two matrices, one
    with -b/a = L and -d/c = R and one with the rows swapped.
    """
    _check_family(w, n)
    if h < 1:
        raise ValueError("h must be >= 1")
    g = gcd(h, k)
    p, q = k // g, h // g
    if q == 1:
        return
    lo = (p // q, 1)
    hi = (p // q + 1, 1)
    while True:
        for first, second in ((lo, hi), (hi, lo)):
            fn, fd = first
            sn, sd = second
            sgn = fn * sd - fd * sn
            m = UnimodularMatrix(fd, -fn, sgn * sd, -sgn * sn)
            yield m, term_value(w, n, h, k, m)
        mid = (lo[0] + hi[0], lo[1] + hi[1])
        cmp = p * mid[1] - mid[0] * q
        if cmp == 0:
            return
        if cmp < 0:
            hi = mid
        else:
            lo = mid


def i_sum_farey(w: int, n: int, h: int, k: int) -> int:
    return sum(t for _, t in farey_terms(w, n, h, k))
