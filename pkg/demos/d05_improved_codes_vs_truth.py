"""
Designed distance against brute force
=====================================

Build the improved codes for F = trace(X) - F_3(Y) over GF(8) and compare
the designed distance with the true minimum distance where enumeration is
cheap.
"""

from cabcodes import bounds as B
from cabcodes import codes as C
from cabcodes.cabgen import build_generalized_cab, coset_polynomial, cyclotomic_cosets, trace_polynomial
from cabcodes.field import make_field
from cabcodes.oracle import true_min_distance, weight_profile

F8 = make_field(2, 3)
spec = build_generalized_cab(trace_polynomial(F8), coset_polynomial(cyclotomic_cosets(2, 3), 3, F8))
ctx = B.BoundContext.from_cab(spec)

table = C.dimension_table(ctx, "eimp")
print("improved:", " ".join(f"[32,{k},{d}]" for k, d in C.best_codes(table)))
print("E(k):    ", " ".join(f"[32,{k},{d}]" for k, d in C.best_codes(C.dimension_table(ctx, "ek"))))

for delta in (32, 28, 26, 24, 22):
    code = C.improved_code(ctx, delta)
    print(code.params(), "true d =", true_min_distance(F8, code.generator))

print(weight_profile(F8, C.improved_code(ctx, 28).generator).distribution)
