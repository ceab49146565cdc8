"""
Finite fields and cyclotomic cosets
===================================

Field elements are small integers: the digits of the code in base p are the
coefficients of a polynomial in the generator of GF(p^m).
"""

import numpy as np

from cabcodes.cabgen import coset_polynomial, cyclotomic_cosets, fiber_counts, is_balanced
from cabcodes.field import make_field

F = make_field(2, 4)
print(F, "modulus", F.modulus_str())

# vectorised arithmetic works on whole arrays of codes
a = np.arange(F.q)
print("a * a^-1:", F.vmul(a[1:], np.array([F.inv(int(x)) for x in a[1:]])))

# cosets of 2 modulo 15 and the polynomial attached to each one
table = cyclotomic_cosets(2, 4)
for rep, cos in zip(table.representatives(), table.cosets):
    if rep:
        P = coset_polynomial(table, rep, F)
        print(f"C_{rep} = {sorted(cos)}  F_{rep} = {P.format()}  balanced: {is_balanced(table, rep)}")

# balanced means every value in GF(2) is taken equally often
print(fiber_counts(coset_polynomial(table, 1, F)))
print(fiber_counts(coset_polynomial(table, 5, F)))
