from fractions import Fraction

import pytest

from dedekind_hecke.exact import sigma
from dedekind_hecke.hecke import (
    ELLS,
    SymbolExhausted,
    closed_form_coefficients,
    derived_closed_form_coefficients,
    eigen_family_n,
    eigenvalue,
    find_nonzero_point,
    hecke_apply,
    hecke_at_origin_closed_form,
    hecke_general_closed_form,
    hecke_index,
    hecke_symbol,
    is_prime,
    tau,
    tau_prime_closed_form,
    tau_ramanujan_elementary,
)
from dedekind_hecke.qseries import qexp_eigenform
from dedekind_hecke.symbols import SymbolPoint, e_family, f_symbol, g_symbol, zero_symbol

PRIMES = (2, 3, 5, 7, 11, 13)


def test_hecke_index():
    idx = hecke_index(4)
    assert len(idx.divisor_triples) == sigma(1, 4)
    assert all(a * d == 4 and 0 <= b < d for a, d, b in idx.divisor_triples)
    with pytest.raises(ValueError):
        hecke_index(0)


def test_t1_is_identity():
    E = e_family(10, 5)
    for h in range(1, 5):
        for k in range(-4, 5):
            assert hecke_apply(E, 1, h, k) == E(h, k)


def test_hecke_examples():
    assert hecke_apply(f_symbol(10), 2, 1, 1) == 2049
    assert hecke_apply(e_family(10, 5), 2, 1, 0) == Fraction(144, 691)


def test_find_nonzero_point():
    assert find_nonzero_point(e_family(10, 5)) == SymbolPoint(1, 0)
    with pytest.raises(SymbolExhausted):
        find_nonzero_point(zero_symbol(10), search_limit=4)
    with pytest.raises(ValueError):
        find_nonzero_point(e_family(10, 5), search_limit=0)


def test_eigenvalue_examples():
    r = eigenvalue(f_symbol(10), 6, extra_checks=3)
    assert r.eigenvalue == sigma(11, 6) and r.consistent
    r = eigenvalue(e_family(10, 5), 2, extra_checks=4)
    assert r.eigenvalue == -24 and r.consistent
    assert len(r.checked_points) == 4


def test_non_eigen_symbol_is_flagged():
    # summands with different eigenvalues (-24 and 2049)
    assert not eigenvalue(e_family(10, 5) + f_symbol(10), 2, extra_checks=5).consistent
    assert eigenvalue(g_symbol(10), 2, extra_checks=5).eigenvalue == 2**10 + 2


def test_eigen_index():
    assert [eigen_family_n(ell) for ell in ELLS] == [5, 7, 7, 9, 9, 11]
    with pytest.raises(ValueError):
        eigen_family_n(12)


def test_tau_examples():
    assert tau(10, 1) == 1
    assert tau(10, 2) == -24
    assert tau(14, 2) == 216
    assert tau(16, 2) == -528
    assert tau(18, 2) == qexp_eigenform(18, 2)[2]


@pytest.mark.parametrize("ell", ELLS)
def test_tau_matches_oracle(ell):
    f = qexp_eigenform(ell, 12)
    assert [tau(ell, m) for m in range(1, 13)] == f.to_list()[1:]


def test_tau_multiplicativity():
    assert tau(10, 6) == tau(10, 2) * tau(10, 3)
    assert tau(14, 10) == tau(14, 2) * tau(14, 5)


@pytest.mark.parametrize("ell", ELLS)
def test_closed_form_matches_operator(ell):
    for m in PRIMES[:4]:
        assert tau_prime_closed_form(ell, m) == tau(ell, m)


def test_closed_form_parallel_rows():
    assert tau_prime_closed_form(10, 13, workers=2) == tau_prime_closed_form(10, 13) == -577738


def test_closed_form_rejects_composite():
    with pytest.raises(ValueError):
        tau_prime_closed_form(10, 4)
    with pytest.raises(ValueError):
        closed_form_coefficients(12)


@pytest.mark.parametrize("ell", ELLS)
def test_tabulated_coefficients_follow_from_bernoulli_numbers(ell):
    mult, terms = closed_form_coefficients(ell)
    dmult, dterms = derived_closed_form_coefficients(ell)
    assert mult == dmult
    # the table drops zero coefficients and merges equal exponents
    assert {e: c for c, e in terms} == {e: c for c, e in dterms if c}


def test_ramanujan_elementary_rendering():
    for m in (2, 3, 5, 7):
        assert tau_ramanujan_elementary(m) == tau(10, m)
    with pytest.raises(ValueError):
        tau_ramanujan_elementary(9)


@pytest.mark.parametrize("m", [2, 3, 5])
@pytest.mark.parametrize("w,n", [(10, 5), (14, 7), (12, 3)])
def test_origin_expansion(w, n, m):
    assert hecke_at_origin_closed_form(w, n, m) == hecke_apply(e_family(w, n), m, 1, 0)


@pytest.mark.parametrize("w,n", [(10, 5), (12, 3)])
def test_general_expansion(w, n):
    E = e_family(w, n)
    for m in (2, 3):
        for h in range(1, 5):
            for k in range(-2, h + 1):
                assert hecke_general_closed_form(w, n, m, h, k) == hecke_apply(E, m, h, k)


def test_closure_keeps_weight_and_parity():
    E = e_family(10, 4)
    T = hecke_symbol(E, 3)
    assert (T.weight, T.parity) == (10, "odd")
    for h in range(1, 4):
        for k in range(-3, 4):
            v = T(h, k)
            assert T(h, k + h) == v
            assert T(h, -k) == -v
            assert T(2 * h, 2 * k) == 2**10 * v


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
