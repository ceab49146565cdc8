"""
Footprint and the Feng-Rao bound
================================

A small order domain over GF(4): the ideal <X^2+X-Y^3> with w(X)=3, w(Y)=2.
"""

from cabcodes import bounds as B
from cabcodes.codes import evaluation_points
from cabcodes.field import make_field
from cabcodes.groebner import IdealSpec, order_domain_check
from cabcodes.polyalg import WeightedOrder, parse_poly

F4 = make_field(2, 2)
order = WeightedOrder((3, 2))
F = parse_poly("X^2+X-Y^3", F4, 2)
ctx = B.BoundContext.from_ideal(IdealSpec(F4, [F]), order)

print("footprint:", ctx.fp.as_text())
print("weights:  ", list(ctx.fp.weights))
print("points:   ", len(evaluation_points(ctx)))
print("order domain conditions:", order_domain_check([F], order))

# rem_lm[s-1, j-1] is the index of lm(M_s M_j rem G)
print(ctx.rem_lm)

# the OWB pairs (X, N) and where they land
x = ctx.index("X")
reached = B.feng_rao_set(ctx, x)
print("reached from X:", [ctx.fp.as_text()[k - 1] for k in reached.nonzero()[0]])
print("Feng-Rao bound per index:", B.feng_rao_sigma(ctx)[1:].tolist())
