"""
The dual side
=============

The same table rho[i, j] drives a bound for dual codes through greedy
mu-sets.  For optimal polynomials, reversing the footprint maps one side
onto the other.
"""

import numpy as np

from cabcodes import bounds as B
from cabcodes import codes as C
from cabcodes.cabgen import optimal_pairs
from cabcodes.field import make_field

spec = optimal_pairs(make_field(2, 3))[0]
ctx = B.BoundContext.from_cab(spec)
n, rho = ctx.n, ctx.rem_lm

i = ctx.index("X^3")
l = n - i + 1
print("M_i =", ctx.fp.as_text()[i - 1], " M_{n-i+1} =", ctx.fp.as_text()[l - 1])
v = B.natural_v(ctx, i)
print("primary cards:", B.new_bound(ctx, i, v).cards)
# I'_0 matches L(v+1), I'_u matches L(u)
print("mu-set sizes: ", [len(s) for s in C.mu_sets(rho, l, v)])

# a random monomial code and the matching dual code get the same estimate
rng = np.random.default_rng(1)
S = sorted(int(x) for x in rng.choice(n, size=10, replace=False) + 1)
Sbar = [x for x in range(1, n + 1) if n - x + 1 not in S]
tri = C.BasisTriple.from_context(ctx)
print("primary:", B.min_distance_bound(ctx, S).bound)
print("dual:   ", C.mu_dual_bound(tri, C.monomial_dual_code(ctx, Sbar).generator, apriori=None))

# improved dual codes
for delta in (4, 8, 12):
    print("delta", delta, "-> dimension", C.cfim_code(ctx, delta, build=False).k)
