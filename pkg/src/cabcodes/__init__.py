"""Affine variety codes from generalized C_ab polynomials, with Feng-Rao
style lower bounds on minimum distance and a brute-force oracle."""

from .bounds import (
    BoundContext,
    BoundReport,
    case_sets,
    closed_form_bound,
    feng_rao_bound,
    ghw2_bound,
    is_owb,
    is_sowb,
    min_distance_bound,
    natural_v,
    new_bound,
)
from .cabgen import build_generalized_cab, coset_polynomial, cyclotomic_cosets, optimal_pairs
from .field import FieldSpec, make_field
from .groebner import IdealSpec, buchberger, footprint
from .polyalg import MultiPoly, WeightedOrder, parse_poly

__version__ = "0.1.0"
