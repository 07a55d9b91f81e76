import pytest

from dedekind_hecke.exact import sigma
from dedekind_hecke.qseries import (
    EIGENFORM_PRODUCTS,
    QSeries,
    _binomial_series,
    qexp_delta,
    qexp_e4,
    qexp_e6,
    qexp_eigenform,
    series_mul,
)

# well-known tau(n), n = 1..12
TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944]


def test_delta_examples():
    d = qexp_delta(32)
    assert d[0] == 0
    assert d[1] == 1
    assert d[2] == -24
    assert d.to_list()[1:13] == TAU


def test_delta_small_truncations():
    assert qexp_delta(1).to_list() == [0, 1]
    assert qexp_delta(2).to_list() == [0, 1, -24]
    assert qexp_delta(5).to_list() == qexp_delta(32).to_list()[:6]


def test_delta_by_naive_repeated_multiplication():
    N = 12
    s = QSeries.one(N)
    for n in range(1, N + 1):
        f = [0] * (N + 1)
        f[0] = 1
        f[n] = -1
        for _ in range(24):
            s = s * QSeries(f)
    assert [0] + s.to_list()[:N] == qexp_delta(N).to_list()


def test_eisenstein_examples():
    assert qexp_e4(5)[1] == 240
    assert qexp_e6(5)[1] == -504
    assert qexp_e4(5)[2] == 2160


def test_e4_squared_is_e8():
    # E4^2 = E8 = 1 + 480 sum sigma_7(n) q^n
    e8 = qexp_e4(20) * qexp_e4(20)
    assert e8.to_list() == [1] + [480 * sigma(7, n) for n in range(1, 21)]


def test_e4_cubed_minus_e6_squared():
    # E4^3 - E6^2 = 1728 Delta
    N = 15
    a = (qexp_e4(N) * qexp_e4(N) * qexp_e4(N)).to_list()
    b = (qexp_e6(N) * qexp_e6(N)).to_list()
    assert [x - y for x, y in zip(a, b)] == [1728 * t for t in qexp_delta(N).to_list()]


@pytest.mark.parametrize("ell", sorted(EIGENFORM_PRODUCTS))
def test_eigenform_normalization_and_multiplicativity(ell):
    f = qexp_eigenform(ell, 32)
    assert f[0] == 0 and f[1] == 1
    assert f[2] * f[3] == f[6]
    assert f[2] * f[5] == f[10]
    assert f[3] * f[7] == f[21]
    # prime-power recursion a(p^2) = a(p)^2 - p^(w+1)
    assert f[4] == f[2] ** 2 - 2 ** (ell + 1)


def test_eigenform_examples():
    assert qexp_eigenform(10, 20) == qexp_delta(20)
    assert qexp_eigenform(16, 3)[2] == -528
    assert qexp_eigenform(14, 3)[2] == 216


def test_series_mul_examples():
    s = qexp_delta(6)
    assert series_mul(s, QSeries.one(6)) == s
    assert series_mul(QSeries([1, 1, 0]), QSeries([1, -1, 0])).to_list() == [1, 0, -1]
    # q (1 - q)^24 agrees with Delta through q^2
    shifted = QSeries([0] + _binomial_series(24, 5).to_list()[:5])
    assert shifted.to_list()[:3] == qexp_delta(5).to_list()[:3]


def test_truncation_mismatch_uses_minimum():
    assert series_mul(qexp_e4(10), qexp_e6(4)).truncation == 4


def test_bad_input():
    with pytest.raises(ValueError):
        qexp_delta(0)
    with pytest.raises(ValueError):
        qexp_eigenform(12, 5)
    with pytest.raises(IndexError):
        qexp_delta(3)[4]
