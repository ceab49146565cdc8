"""Subfield-valued polynomials from cyclotomic cosets and generalized C_ab polynomials.

A generalized C_ab polynomial is ``X^a + alpha*Y^b + R(X, Y)`` with
``a != b`` and every monomial of R lighter than ``X^a`` under the weights
``w(X) = b/gcd(a, b)``, ``w(Y) = a/gcd(a, b)``.  Building ``F = G(X) - H(Y)``
from two polynomials that map GF(p^m) into GF(p) gives many zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EqualDegrees, NotARepresentative, WeightViolation
from .field import FieldSpec, make_field
from .groebner import field_equations
from .polyalg import MultiPoly, WeightedOrder, reduce


@dataclass(frozen=True)
class CosetTable:
    p: int
    m: int
    n: int
    cosets: tuple[tuple[int, ...], ...]

    def representatives(self) -> list[int]:
        return [c[0] for c in self.cosets]

    def coset(self, i_s: int) -> tuple[int, ...]:
        for c in self.cosets:
            if c[0] == i_s:
                return c
        raise NotARepresentative(f"{i_s} is not a minimal coset representative mod {self.n}")


def cyclotomic_cosets(p: int, m: int) -> CosetTable:
    """Cyclotomic cosets modulo p^m - 1 under multiplication by p."""
    n = p**m - 1
    seen = set()
    cosets = []
    for i in range(n):
        if i in seen:
            continue
        orbit = []
        x = i
        while x not in orbit:
            orbit.append(x)
            x = (x * p) % n
        seen.update(orbit)
        cosets.append(tuple(sorted(orbit)))
    return CosetTable(p, m, n, tuple(cosets))


def coset_polynomial(table: CosetTable, i_s: int, field: FieldSpec | None = None) -> MultiPoly:
    """``F_{i_s}(X) = sum of X^l over the coset of i_s`` as a univariate polynomial."""
    if field is None:
        field = make_field(table.p, table.m)
    exps = table.coset(i_s)
    return MultiPoly(field, 1, {(l,): 1 for l in exps})


def trace_polynomial(field: FieldSpec) -> MultiPoly:
    return MultiPoly(field, 1, {(field.p**k,): 1 for k in range(field.m)})


def norm_polynomial(field: FieldSpec) -> MultiPoly:
    return MultiPoly(field, 1, {((field.q - 1) // (field.p - 1),): 1})


def _values(F: MultiPoly) -> np.ndarray:
    field = F.field
    return F.evaluate_many(np.arange(field.q).reshape(-1, 1))


def is_subfield_valued(F: MultiPoly, field: FieldSpec | None = None) -> bool:
    """True iff F(gamma) lies in GF(p) for every gamma (exhaustive)."""
    vals = _values(F)
    return bool(np.all(vals < F.field.p))


def fiber_counts(F: MultiPoly) -> dict[int, int]:
    """Number of field elements mapped to each value."""
    vals, counts = np.unique(_values(F), return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


def is_balanced(table: CosetTable, i_s: int) -> bool:
    """gcd(i_s, p^m - 1) == 1, i.e. every value of GF(p) has p^(m-1) preimages."""
    table.coset(i_s)
    if i_s <= 0:
        raise NotARepresentative("balanced test needs i_s > 0")
    return math.gcd(i_s, table.n) == 1


def is_balanced_by_counting(F: MultiPoly) -> bool:
    field = F.field
    counts = fiber_counts(F)
    return all(counts.get(v, 0) == field.q // field.p for v in range(field.p))


@dataclass(frozen=True)
class CabSpec:
    F: MultiPoly
    a: int
    b: int
    wX: int
    wY: int
    order: WeightedOrder
    zeros: int
    optimal: bool

    @property
    def field(self) -> FieldSpec:
        return self.F.field

    @property
    def q(self) -> int:
        return self.F.field.q

    @property
    def n(self) -> int:
        return self.zeros

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "wX": self.wX,
            "wY": self.wY,
            "zeros": self.zeros,
            "optimal": self.optimal,
            "F": self.F.format(self.order),
        }


def _as_univariate(P: MultiPoly) -> MultiPoly:
    if P.nvars == 1:
        return P
    used = {k for m in P.terms for k, e in enumerate(m) if e}
    if len(used) > 1:
        raise ValueError("expected a univariate polynomial")
    k = used.pop() if used else 0
    return MultiPoly(P.field, 1, {(m[k],): c for m, c in P.terms.items()})


def count_zeros(F: MultiPoly) -> int:
    """Zeros of a bivariate polynomial over F_q^2 by brute evaluation."""
    q = F.field.q
    xs, ys = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    pts = np.stack([xs.ravel(), ys.ravel()], axis=1)
    return int(np.count_nonzero(F.evaluate_many(pts) == 0))


def cab_weights(a: int, b: int) -> tuple[int, int]:
    g = math.gcd(a, b)
    return b // g, a // g


def check_cab(F: MultiPoly, a: int, b: int) -> WeightedOrder:
    """Validate the generalized C_ab shape of a bivariate F; returns its order."""
    if a == b:
        raise EqualDegrees(f"a = b = {a}")
    wX, wY = cab_weights(a, b)
    order = WeightedOrder((wX, wY))
    top = a * wX
    if F.coeff((a, 0)) == 0 or F.coeff((0, b)) == 0:
        raise WeightViolation("X^a and Y^b must both be in the support")
    for mono in F.terms:
        if mono in ((a, 0), (0, b)):
            continue
        if order.weight(mono) >= top:
            raise WeightViolation(f"support monomial {mono} reaches weight {top}")
    return order


def build_generalized_cab(G: MultiPoly, H: MultiPoly, field: FieldSpec | None = None) -> CabSpec:
    """``F(X, Y) = G(X) - H(Y)``, scaled monic in X^a, with zero count and optimality."""
    G = _as_univariate(G)
    H = _as_univariate(H)
    field = field or G.field
    if G.is_zero() or H.is_zero():
        raise ValueError("G and H must be nonzero")
    a, b = G.degree(), H.degree()
    if a == b:
        raise EqualDegrees(f"deg G = deg H = {a}")
    if len(np.unique(_values(H))) == 1:
        raise WeightViolation("H is constant-valued")
    F = MultiPoly(field, 2, {(m[0], 0): c for m, c in G.terms.items()}) - MultiPoly(
        field, 2, {(0, m[0]): c for m, c in H.terms.items()}
    )
    F = F.scale(field.inv(F.coeff((a, 0))))
    order = check_cab(F, a, b)
    wX, wY = order.weights
    zeros = count_zeros(F)
    return CabSpec(F, a, b, wX, wY, order, zeros, zeros == a * field.q)


def cab_from_polynomial(F: MultiPoly) -> CabSpec:
    """Recognize a bivariate generalized C_ab polynomial and classify it."""
    a = F.degree(0)
    b = F.degree(1)
    F = F.scale(F.field.inv(F.coeff((a, 0)))) if F.coeff((a, 0)) else F
    order = check_cab(F, a, b)
    zeros = count_zeros(F)
    return CabSpec(F, a, b, order.weights[0], order.weights[1], order, zeros, zeros == a * F.field.q)


def optimal_gb(spec: CabSpec) -> list[MultiPoly]:
    """``{F, Y^q - Y}``; raises if it is not a Groebner basis of I_q.

    The two leading monomials are coprime, so the basis is a Groebner basis of
    the ideal it generates; it generates I_q iff ``X^q - X`` reduces to zero.
    """
    if not spec.optimal or spec.a >= spec.b:
        raise ValueError("not an optimal generalized C_ab polynomial")
    xq, yq = field_equations(spec.field, 2)
    gb = [spec.F, yq]
    if not reduce(xq, gb, spec.order).is_zero():
        raise ValueError("{F, Y^q - Y} does not generate I_q")
    return gb


def optimal_pairs(field: FieldSpec) -> list[CabSpec]:
    """Optimal ``trace(X) - H(Y)`` for every subfield-valued H from the coset set.

    H runs over the nonconstant coset polynomials and ``X^(q-1)``; degrees
    equal to the trace degree are skipped.
    """
    table = cyclotomic_cosets(field.p, field.m)
    G = trace_polynomial(field)
    candidates = [coset_polynomial(table, r, field) for r in table.representatives() if r > 0]
    candidates.append(MultiPoly(field, 1, {(field.q - 1,): 1}))
    seen = set()
    out = []
    for H in sorted(candidates, key=lambda h: h.degree()):
        b = H.degree()
        if b == G.degree() or b in seen:
            continue
        spec = build_generalized_cab(G, H, field)
        if spec.optimal:
            seen.add(b)
            out.append(spec)
    return out
