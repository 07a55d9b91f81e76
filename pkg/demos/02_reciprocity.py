"""
Reciprocity polynomials
=======================

E_{w,n}(h,k) - E_{w,n}(k,-h) is a homogeneous polynomial in (h, k).
Print it for (10, 5), confirm it pointwise and check the cocycle identity.
"""

from dedekind_hecke.exact import format_rational
from dedekind_hecke.symbols import e_family, s_reciprocity_poly

w, n = 10, 5
S = s_reciprocity_poly(w, n)
E = e_family(w, n)

terms = [f"({format_rational(c)}) h^{i} k^{w - i}" for i, c in sorted(S.coefficients.items(), reverse=True)]
print("S =", " + ".join(terms))

for h, k in [(1, 2), (3, 5), (4, 7), (6, 1)]:
    lhs = E(h, k) - E(k, -h)
    print(f"(h,k)=({h},{k})  E(h,k)-E(k,-h) = {format_rational(lhs)}  S(h,k) = {format_rational(S(h, k))}")

cocycle = S.substitute_shear_left() + S.substitute_shear_right() - S
print("cocycle residue is zero:", cocycle.is_zero(), " S(1,1) =", S(1, 1))
