"""
Known zeros: the Klein quartic
==============================

When a code is spanned by monomials, coefficients outside the span are
known to vanish, so some cases of the bound can be dropped.
"""

from cabcodes import bounds as B
from cabcodes import codes as C
from cabcodes.field import make_field
from cabcodes.groebner import IdealSpec
from cabcodes.polyalg import WeightedOrder, parse_poly

F8 = make_field(2, 3)
ctx = B.BoundContext.from_ideal(IdealSpec(F8, [parse_poly("X^3Y+Y^3+X", F8, 2)]), WeightedOrder((2, 3)))
print(ctx.n, "points;", ", ".join(ctx.fp.as_text()[:8]), "...")

i, y2 = ctx.index("X^3"), ctx.index("Y^2")
print("X^3, no extra knowledge:", B.new_bound(ctx, i, 1))
print("X^3, coefficient of Y^2 known to be 0:", B.new_bound(ctx, i, 1, {y2}))

e11 = C.improved_code(ctx, 11)
print("improved code", e11.params(), "spanned by", [ctx.fp.as_text()[k - 1] for k in e11.indices])

# swap Y^2 for X^3 and let the box imply its own zeros
e12 = C.improved_code_with_exclusions(ctx, 12)
rep = C.code_bound(ctx, e12)
print("with exclusions", e12.params(), "spanned by", [ctx.fp.as_text()[k - 1] for k in e12.indices])
print(rep.to_json())
