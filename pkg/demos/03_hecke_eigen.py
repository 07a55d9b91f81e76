"""
Eigen-symbols for every one-dimensional weight
==============================================

For each ell the odd-index family E_{ell,n0} is a Hecke eigen-symbol. The
eigenvalues match the coefficients of the normalized eigenform.
"""

from dedekind_hecke.exact import format_rational
from dedekind_hecke.hecke import ELLS, eigen_family_n, eigenvalue
from dedekind_hecke.qseries import qexp_eigenform
from dedekind_hecke.symbols import e_family

for ell in ELLS:
    n0 = eigen_family_n(ell)
    E = e_family(ell, n0)
    f = qexp_eigenform(ell, 7)
    lams = []
    for m in range(2, 8):
        r = eigenvalue(E, m, extra_checks=4)
        assert r.consistent
        lams.append(format_rational(r.eigenvalue))
    print(f"weight {ell + 2}: E({ell},{n0})(1,0) = {format_rational(E(1, 0))}")
    print("   eigenvalues m=2..7:", lams)
    print("   q-expansion       :", f.to_list()[2:])
