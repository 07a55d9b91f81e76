"""
Apostol sums as a Hecke eigen-object
====================================

The Hecke sum of Apostol's generalized Dedekind sums reproduces
sigma_{w+1}(n) times the original sum.
"""

from dedekind_hecke.exact import format_rational
from dedekind_hecke.verify import kpr_sides

# the hand-checkable instance first
lhs, rhs = kpr_sides(2, 2, 3, 1)
print("w=2 n=2 (h,k)=(3,1):", format_rational(lhs), format_rational(rhs))

for w in (2, 4, 10):
    ok = all(kpr_sides(w, n, h, k)[0] == kpr_sides(w, n, h, k)[1]
             for n in range(1, 7) for h in range(1, 6) for k in range(-5, 6))
    print(f"w={w}: identity holds for n<=6, h<=5, |k|<=5 -> {ok}")
