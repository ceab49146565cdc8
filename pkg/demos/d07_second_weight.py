"""
Second generalized Hamming weight
=================================

Bounds on the support of two-dimensional subcodes, compared with exhaustive
enumeration on the GF(4) example.
"""

from cabcodes import bounds as B
from cabcodes.codes import evaluation_matrix
from cabcodes.field import make_field
from cabcodes.groebner import IdealSpec
from cabcodes.oracle import true_ghw2, true_min_distance
from cabcodes.polyalg import WeightedOrder, parse_poly

F4 = make_field(2, 2)
ctx = B.BoundContext.from_ideal(IdealSpec(F4, [parse_poly("X^2+X-Y^3", F4, 2)]), WeightedOrder((3, 2)))
E = evaluation_matrix(ctx)

print(" k  d1>=  d1   d2>=  d2")
for k in range(2, 7):
    d1 = B.min_distance_bound(ctx, range(1, k + 1)).bound
    d2 = B.ghw2_code_bound(ctx, range(1, k + 1))
    print(f"{k:2d} {d1:4d} {true_min_distance(F4, E[:k]):4d} {d2:5d} {true_ghw2(F4, E[:k]):4d}")
