import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_hecke.exact import apostol_sum, sigma
from dedekind_hecke.hecke import hecke_apply
from dedekind_hecke.symbols import (
    HomogeneousPolynomial,
    MalformedSymbolSpec,
    SymbolFamilyParams,
    e_at_origin_closed_form,
    e_family,
    e_symbol,
    eisenstein_odd_symbol,
    eisenstein_symbol,
    f_symbol,
    g_symbol,
    i_sum,
    parse_symbol_spec,
    s_reciprocity_poly,
    trivial_f,
    trivial_g,
)
from dedekind_hecke.unimodular import EnumerationBox

FAMILIES = [(10, 4), (10, 5), (14, 7), (16, 7), (12, 3), (12, 6), (2, 1), (4, 2)]
ORIGIN = {
    10: Fraction(-6, 691),
    14: Fraction(30, 3617),
    16: Fraction(-150, 43867),
    18: Fraction(-2646, 174611),
    20: Fraction(1050, 77683),
    24: Fraction(-40950, 657931),
}
EIGEN_N = {10: 5, 14: 7, 16: 7, 18: 9, 20: 9, 24: 11}

# reference expansions, h-exponent -> coefficient
S_10_4 = {9: Fraction(-2, 35), 7: Fraction(5, 14), 5: Fraction(-3, 5), 3: Fraction(5, 14),
          1: Fraction(-2, 35)}
S_10_5 = {10: Fraction(-6, 691), 8: Fraction(1, 6), 6: Fraction(-1, 2), 4: Fraction(1, 2),
          2: Fraction(-1, 6), 0: Fraction(6, 691)}


def test_family_params():
    p = SymbolFamilyParams(10, 3)
    assert p.n + p.n_tilde == 10
    with pytest.raises(ValueError):
        SymbolFamilyParams(10, 10)
    with pytest.raises(ValueError):
        SymbolFamilyParams(9, 3)


def test_trivial_g_examples():
    assert trivial_g(10, 1, 5) == 1
    assert trivial_g(2, 4, 6) == 4
    assert trivial_g(10, 3, 0) == 3**10


def test_trivial_f_examples():
    assert trivial_f(10, 1, 7) == 1
    assert trivial_f(10, 2, 1) == 1024
    assert trivial_f(10, 2, -1) == trivial_f(10, 2, 1)


def test_i_sum_examples():
    assert i_sum(10, 5, 1, 0) == 0
    assert i_sum(10, 5, 2, 1) == i_sum(10, 5, 2, 3)
    assert i_sum(10, 5, 2, 0) + i_sum(10, 5, 2, 1) == 2


def test_i_sum_methods_agree():
    for h in range(1, 10):
        for k in range(-h, 2 * h):
            assert i_sum(12, 5, h, k) == i_sum(12, 5, h, k, method="box")
    assert i_sum(10, 5, 7, 3, EnumerationBox(slack=2)) == i_sum(10, 5, 7, 3)
    with pytest.raises(ValueError):
        i_sum(10, 5, 7, 3, method="nope")


def test_e_symbol_examples():
    assert e_symbol(10, 5, 1, 0) == Fraction(-6, 691)
    assert e_symbol(14, 7, 1, 0) == Fraction(30, 3617)
    assert e_symbol(10, 4, 1, 0) == 0


@pytest.mark.parametrize("ell", sorted(ORIGIN))
def test_origin_closed_form(ell):
    n = EIGEN_N[ell]
    assert e_at_origin_closed_form(ell, n) == ORIGIN[ell]
    assert e_symbol(ell, n, 1, 0) == ORIGIN[ell]


def test_origin_closed_form_by_hand():
    assert e_at_origin_closed_form(10, 5) == Fraction(-1, 126) - Fraction(65, 126 * 691)
    with pytest.raises(ValueError):
        e_at_origin_closed_form(10, 4)


def test_reference_polynomials():
    assert s_reciprocity_poly(10, 4).coefficients == S_10_4
    assert s_reciprocity_poly(10, 5).coefficients == S_10_5


@pytest.mark.parametrize("w,n", FAMILIES)
def test_poly_structure(w, n):
    S = s_reciprocity_poly(w, n)
    assert S.degree == w
    assert S(1, 1) == 0
    if n % 2 == 0 and 2 * n == w:
        # the middle odd family has vanishing reciprocity polynomial
        assert S.is_zero()
    else:
        assert S.parity() == ("even" if n % 2 else "odd")


@pytest.mark.parametrize("w,n", FAMILIES)
def test_cocycle_identity_coefficientwise(w, n):
    S = s_reciprocity_poly(w, n)
    assert (S.substitute_shear_left() + S.substitute_shear_right() - S).is_zero()


def test_poly_substitution_against_pointwise():
    g = HomogeneousPolynomial(5, {5: 1, 3: Fraction(-2, 7), 0: 4})
    left, right = g.substitute_shear_left(), g.substitute_shear_right()
    for h in range(-3, 4):
        for k in range(-3, 4):
            assert left(h, k) == g(h + k, k)
            assert right(h, k) == g(h, h + k)


def test_poly_json_round_trip():
    S = s_reciprocity_poly(10, 5)
    items = S.to_json()
    assert [it["i"] for it in items] == sorted(S.coefficients, reverse=True)
    assert items[0] == {"i": 10, "coeff": "-6/691"}
    assert HomogeneousPolynomial.from_json(10, json.loads(json.dumps(items))) == S


def test_poly_rejects_bad_exponent():
    with pytest.raises(ValueError):
        HomogeneousPolynomial(3, {4: 1})


@pytest.mark.parametrize("w,n", FAMILIES)
def test_reciprocity_law(w, n):
    E = e_family(w, n)
    S = s_reciprocity_poly(w, n)
    for h in range(1, 7):
        for k in range(1, 7):
            assert E(h, k) - E(k, -h) == S(h, k)


def _assert_axioms(E, h_max=5, k_max=8, c_max=3):
    sign = {"even": 1, "odd": -1}[E.parity]
    for h in range(1, h_max + 1):
        for k in range(-k_max, k_max + 1):
            v = E(h, k)
            assert E(h, k + h) == v
            assert E(h, -k) == sign * v
            for c in range(2, c_max + 1):
                assert E(c * h, c * k) == c**E.weight * v


@pytest.mark.parametrize("w,n", FAMILIES)
def test_e_family_axioms(w, n):
    _assert_axioms(e_family(w, n))


@pytest.mark.parametrize("factory", [g_symbol, f_symbol, eisenstein_symbol])
@pytest.mark.parametrize("w", [2, 4, 10])
def test_other_symbol_axioms(factory, w):
    _assert_axioms(factory(w))


def test_kernel_symbol_has_zero_reciprocity():
    G = g_symbol(10)
    for h in range(1, 8):
        for k in range(1, 8):
            assert G(h, k) - G(k, -h) == 0


def test_eisenstein_examples():
    for k in range(-4, 5):
        assert eisenstein_odd_symbol(2, 1, k) == 0
    assert eisenstein_odd_symbol(2, 3, 1) == Fraction(1, 54)
    assert eisenstein_odd_symbol(2, 3, -1) == -Fraction(1, 54)


@settings(max_examples=60)
@given(st.sampled_from([2, 4, 10]), st.integers(1, 8), st.integers(-10, 10))
def test_eisenstein_parity_brute_force(w, h, k):
    assert apostol_sum(w + 1, -k, h) == -apostol_sum(w + 1, k, h)
    assert eisenstein_odd_symbol(w, h, -k) == -eisenstein_odd_symbol(w, h, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_f_is_hecke_eigen(n):
    F = f_symbol(10)
    for h in range(1, 4):
        for k in range(-3, 4):
            assert hecke_apply(F, n, h, k) == sigma(11, n) * F(h, k)


def test_symbol_metadata():
    assert e_family(10, 5).parity == "even"
    assert e_family(10, 4).parity == "odd"
    assert eisenstein_symbol(2).parity == "odd"
    assert g_symbol(4).weight == 4
    with pytest.raises(ValueError):
        e_family(10, 5)(0, 1)


def test_symbol_arithmetic():
    E = e_family(10, 5)
    F = f_symbol(10)
    s = E + F.scale(2)
    assert s(3, 1) == E(3, 1) + 2 * F(3, 1)
    assert s.parity == "even"
    assert (E + e_family(10, 4)).parity is None


def test_parse_symbol_spec():
    assert parse_symbol_spec("E:10:5")(1, 0) == Fraction(-6, 691)
    assert parse_symbol_spec("F:10")(2, 1) == 1024
    assert parse_symbol_spec("G:2")(4, 6) == 4
    assert parse_symbol_spec("Eis:2")(3, 1) == Fraction(1, 54)
    for bad in ("E:10", "X:2", "G:a", "", "E:10:5:1"):
        with pytest.raises(MalformedSymbolSpec):
            parse_symbol_spec(bad)
    with pytest.raises(ValueError):
        parse_symbol_spec("E:10:11")


def test_concurrent_evaluation_is_deterministic():
    from concurrent.futures import ThreadPoolExecutor

    E = e_family(12, 5)
    pts = [(h, k) for h in range(1, 12) for k in range(h)]
    serial = [E(*p) for p in pts]
    with ThreadPoolExecutor(max_workers=4) as pool:
        assert list(pool.map(lambda p: E(*p), pts)) == serial


def test_binomial_helper_consistency():
    # the expansion used for S must reproduce B_m(k/h) h^w pointwise
    from dedekind_hecke.exact import bernoulli_poly
    from dedekind_hecke.symbols import _bernoulli_hom

    m, w = 5, 10
    P = HomogeneousPolynomial(w, _bernoulli_hom(m, w, False))
    Q = HomogeneousPolynomial(w, _bernoulli_hom(m, w, True))
    for h, k in [(1, 2), (3, 5), (7, 2)]:
        assert P(h, k) == bernoulli_poly(m, Fraction(k, h)) * h**w
        assert Q(h, k) == bernoulli_poly(m, Fraction(h, k)) * k**w
