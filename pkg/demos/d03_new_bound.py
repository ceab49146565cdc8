"""
Splitting into cases: the improved bound
========================================

Over GF(8) take F = trace(X) - F_3(Y), an optimal polynomial with 32 zeros.
For a word with leading monomial X^3 the Feng-Rao bound gives 10.  Splitting
on the largest nonzero coefficient below X^3 gives two sets instead.
"""

from cabcodes import bounds as B
from cabcodes.cabgen import build_generalized_cab, coset_polynomial, cyclotomic_cosets, trace_polynomial
from cabcodes.field import make_field

F8 = make_field(2, 3)
spec = build_generalized_cab(trace_polynomial(F8), coset_polynomial(cyclotomic_cosets(2, 3), 3, F8))
ctx = B.BoundContext.from_cab(spec)
print(spec.F.format(spec.order), " a, b =", spec.a, spec.b, " zeros:", spec.zeros)

i = ctx.index("X^3")
v = B.natural_v(ctx, i)
print("Feng-Rao:", B.feng_rao_bound(ctx, i), " natural v:", v)
for cs in B.case_sets(ctx, i, v, with_witnesses=True):
    print(f"L({cs.t}) size {cs.card}")
    for k, (p, j) in sorted(cs.witnesses.items())[:3]:
        print("   ", ctx.fp.as_text()[k - 1], "<-", ctx.fp.as_text()[p - 1], "*", ctx.fp.as_text()[j - 1])

# for optimal polynomials there is a closed formula; here it agrees everywhere
a1, a2 = ctx.fp.monomial(i)
print("closed form:", B.closed_form_bound(spec.a, spec.b, 8, a1, a2))
same = all(
    B.new_bound(ctx, k).bound == B.closed_form_bound(spec.a, spec.b, 8, *ctx.fp.monomial(k)) for k in range(1, ctx.n + 1)
)
print("generic == closed form on all 32 indices:", same)

# a report for a whole code, as CSV
print(B.min_distance_bound(ctx, range(1, 13)).to_csv())
