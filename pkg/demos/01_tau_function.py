"""
Ramanujan's tau from Dedekind-type sums
=======================================

Compute tau(m) three ways and compare: the Hecke operator acting on the
weight-10 symbol, the prime-index closed form, and the q-expansion of Delta.
"""

from dedekind_hecke import qexp_delta, tau, tau_prime_closed_form

# q-expansion of Delta up to q^13
delta = qexp_delta(13)

# operator route for every m, closed form only for primes
for m in range(1, 14):
    closed = tau_prime_closed_form(10, m) if m in (2, 3, 5, 7, 11, 13) else None
    print(f"m={m:2d}  hecke={tau(10, m):>9d}  closed={closed!s:>9}  oracle={delta[m]:>9d}")

# multiplicativity falls out of the operator route
print("tau(6) == tau(2) tau(3):", tau(10, 6) == tau(10, 2) * tau(10, 3))
