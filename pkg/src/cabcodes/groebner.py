"""Buchberger's algorithm, footprints and the order domain conditions."""

from __future__ import annotations

import heapq
import itertools
import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .errors import InfiniteFootprint, NotInFootprint, PairBudgetExceeded, SizeExceeded
from .field import FieldSpec
from .polyalg import (
    Monomial,
    MultiPoly,
    WeightedOrder,
    format_monomial,
    mono_div,
    mono_divides,
    mono_lcm,
    reduce,
)

MAX_POINTS = 2**22
DEFAULT_PAIR_BUDGET = 200_000


def field_equations(field: FieldSpec, nvars: int) -> list[MultiPoly]:
    """The polynomials ``X_k^q - X_k``."""
    out = []
    for k in range(nvars):
        hi = tuple(field.q if t == k else 0 for t in range(nvars))
        lo = tuple(1 if t == k else 0 for t in range(nvars))
        out.append(MultiPoly(field, nvars, {hi: 1, lo: field.neg(1)}))
    return out


@dataclass
class IdealSpec:
    field: FieldSpec
    generators: list[MultiPoly]
    include_field_equations: bool = True
    nvars: int = 0

    def __post_init__(self):
        if not self.nvars:
            if not self.generators:
                raise ValueError("nvars required for an ideal without generators")
            self.nvars = self.generators[0].nvars

    def all_generators(self) -> list[MultiPoly]:
        gens = [g for g in self.generators if not g.is_zero()]
        if self.include_field_equations:
            gens = gens + field_equations(self.field, self.nvars)
        return gens


def s_polynomial(f: MultiPoly, g: MultiPoly, order: WeightedOrder) -> MultiPoly:
    fld = f.field
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    a = f.mul_term(mono_div(lcm, lf), fld.inv(f.terms[lf]))
    b = g.mul_term(mono_div(lcm, lg), fld.inv(g.terms[lg]))
    return a - b


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def reduced_basis(G: Sequence[MultiPoly], order: WeightedOrder) -> list[MultiPoly]:
    """Minimalize and inter-reduce a Groebner basis; output sorted by lm."""
    G = [g.monic(order) for g in G if not g.is_zero()]
    lms = [g.leading_monomial(order) for g in G]
    keep = []
    for i, g in enumerate(G):
        redundant = False
        for j, h in enumerate(G):
            if j == i:
                continue
            if mono_divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        out.append(reduce(g, others, order).monic(order) if others else g)
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def buchberger(
    ideal: IdealSpec | Sequence[MultiPoly],
    order: WeightedOrder,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
) -> list[MultiPoly]:
    """Reduced Groebner basis via Buchberger's algorithm.

    Pairs are processed smallest lcm first; pairs with coprime leading
    monomials are skipped.
    """
    gens = ideal.all_generators() if isinstance(ideal, IdealSpec) else list(ideal)
    G: list[MultiPoly] = []
    lms: list[Monomial] = []
    for g in gens:
        if not g.is_zero():
            G.append(g.monic(order))
            lms.append(G[-1].leading_monomial(order))
    if not G:
        return []
    heap: list = []

    def push_pairs(j: int) -> None:
        for i in range(j):
            if _coprime(lms[i], lms[j]):
                continue
            lcm = mono_lcm(lms[i], lms[j])
            heapq.heappush(heap, (order.key(lcm), i, j))

    for j in range(len(G)):
        push_pairs(j)
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        processed += 1
        if processed > max_pairs:
            raise PairBudgetExceeded(f"pair budget guard: more than {max_pairs} S-pairs")
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if r.is_zero():
            continue
        G.append(r.monic(order))
        lms.append(G[-1].leading_monomial(order))
        if not any(lms[-1]):
            # the ideal contains a nonzero constant
            return [MultiPoly.constant(G[-1].field, G[-1].nvars)]
        push_pairs(len(G) - 1)
    return reduced_basis(G, order)


def is_groebner(G: Sequence[MultiPoly], order: WeightedOrder) -> bool:
    """All S-polynomials reduce to zero."""
    for f, g in itertools.combinations(G, 2):
        if not reduce(s_polynomial(f, g, order), G, order).is_zero():
            return False
    return True


@dataclass
class Footprint:
    """Monomials ``M_1 < ... < M_n`` outside the initial ideal.

    Indices in the public API are 1-based, matching ``M_1 .. M_n``.
    """

    monomials: list[Monomial]
    order: WeightedOrder
    index_of: dict[Monomial, int] = dc_field(default_factory=dict)

    def __post_init__(self):
        self.monomials = self.order.sorted(self.monomials)
        self.index_of = {m: i + 1 for i, m in enumerate(self.monomials)}
        self.weights = [self.order.weight(m) for m in self.monomials]

    @property
    def n(self) -> int:
        return len(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __contains__(self, mono) -> bool:
        return tuple(mono) in self.index_of

    def __iter__(self):
        return iter(self.monomials)

    def monomial(self, i: int) -> Monomial:
        if not 1 <= i <= len(self.monomials):
            raise NotInFootprint(f"index {i} outside 1..{len(self.monomials)}")
        return self.monomials[i - 1]

    def index(self, mono: Sequence[int]) -> int:
        try:
            return self.index_of[tuple(mono)]
        except KeyError:
            raise NotInFootprint(f"{format_monomial(tuple(mono))} is not in the footprint") from None

    def weight(self, i: int) -> int:
        return self.weights[i - 1]

    def as_text(self) -> list[str]:
        return [format_monomial(m) for m in self.monomials]

    def to_json(self) -> str:
        rows = [
            {"monomial": format_monomial(m), "weight": w, "index": i + 1}
            for i, (m, w) in enumerate(zip(self.monomials, self.weights))
        ]
        return json.dumps(rows)


def _pure_power_bounds(lms: Sequence[Monomial], nvars: int) -> list[int | None]:
    bounds: list[int | None] = [None] * nvars
    for m in lms:
        nz = [k for k, e in enumerate(m) if e]
        if len(nz) == 1:
            k = nz[0]
            if bounds[k] is None or m[k] < bounds[k]:
                bounds[k] = m[k]
        elif not nz:
            bounds = [0] * nvars
    return bounds


def footprint(gb: Sequence[MultiPoly], order: WeightedOrder) -> Footprint:
    """Footprint of the ideal generated by the Groebner basis gb."""
    nvars = order.nvars
    lms = [g.leading_monomial(order) for g in gb]
    bounds = _pure_power_bounds(lms, nvars)
    if any(b is None for b in bounds):
        raise InfiniteFootprint("no pure power of some variable among the leading monomials")
    monos = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(mono_divides(l, m) for l in lms)
    ]
    return Footprint(monos, order)


def footprint_upto(gb: Sequence[MultiPoly], order: WeightedOrder, max_weight: int) -> list[Monomial]:
    """Footprint monomials of weight at most max_weight (works for infinite footprints)."""
    lms = [g.leading_monomial(order) for g in gb]
    w = order.weights
    out = []

    def rec(prefix: list[int], k: int, budget: int) -> None:
        if k == len(w):
            m = tuple(prefix)
            if not any(mono_divides(l, m) for l in lms):
                out.append(m)
            return
        e = 0
        while e * w[k] <= budget:
            rec(prefix + [e], k + 1, budget - e * w[k])
            e += 1

    rec([], 0, max_weight)
    return order.sorted(out)


def order_domain_check(
    gb: Sequence[MultiPoly], order: WeightedOrder, weight_bound: int | None = None
) -> tuple[bool, bool]:
    """Check the order domain conditions (C1), (C2) for a Groebner basis.

    (C1): every basis element has exactly two monomials of highest weight.
    (C2): footprint weights are pairwise distinct.  For an infinite footprint
    the check covers monomials up to ``weight_bound`` (default: twice the
    largest leading-monomial weight plus the product of the weights).
    """
    c1 = True
    for g in gb:
        ws = [order.weight(m) for m in g.terms]
        top = max(ws)
        if ws.count(top) != 2:
            c1 = False
            break
    lms = [g.leading_monomial(order) for g in gb]
    bounds = _pure_power_bounds(lms, order.nvars)
    if all(b is not None for b in bounds):
        weights = footprint(gb, order).weights
    else:
        if weight_bound is None:
            weight_bound = 2 * max(order.weight(m) for m in lms) + int(np.prod(order.weights))
        weights = [order.weight(m) for m in footprint_upto(gb, order, weight_bound)]
    c2 = len(set(weights)) == len(weights)
    return c1, c2


def _all_points(field: FieldSpec, nvars: int) -> np.ndarray:
    if nvars > 3 or field.q**nvars > MAX_POINTS:
        raise SizeExceeded(f"point enumeration guard: q^m = {field.q}^{nvars} (limit {MAX_POINTS}, arity <= 3)")
    grids = np.meshgrid(*([np.arange(field.q)] * nvars), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def variety_points(ideal: IdealSpec) -> np.ndarray:
    """Common zeros in F_q^m as an (n, m) array of codes, lex order on coordinates."""
    pts = _all_points(ideal.field, ideal.nvars)
    mask = np.ones(pts.shape[0], dtype=bool)
    for g in ideal.generators:
        mask &= g.evaluate_many(pts) == 0
    return pts[mask]


def count_variety_points(ideal: IdealSpec) -> int:
    return int(variety_points(ideal).shape[0])
