"""Monomials, weighted degree lexicographic orders and multivariate polynomials.

A monomial is a tuple of exponents ``(i_1, ..., i_m)`` standing for
``X_1^{i_1} ... X_m^{i_m}``.  Polynomials keep a dict from monomial to a
nonzero field code (see :mod:`cabcodes.field`).
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ArityMismatch, MixedFields, ParseError, ZeroDivisor, ZeroPolynomial
from .field import FieldElement, FieldSpec

Monomial = tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class WeightedOrder:
    """Weighted degree order with lex tiebreak ``X_m < ... < X_1``."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def _check(self, m: Monomial) -> None:
        if len(m) != len(self.weights):
            raise ArityMismatch(f"monomial {m} vs {len(self.weights)} weights")

    def weight(self, m: Monomial) -> int:
        self._check(m)
        return sum(e * w for e, w in zip(m, self.weights))

    def key(self, m: Monomial) -> tuple:
        # lexicographic on the exponent tuple puts X_1 highest
        return (sum(e * w for e, w in zip(m, self.weights)), m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as a is less than, equal to or greater than b."""
        self._check(a)
        self._check(b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, monos: Iterable[Monomial]) -> list[Monomial]:
        return sorted(monos, key=self.key)


def weight(m: Monomial, order: WeightedOrder) -> int:
    return order.weight(m)


def compare(a: Monomial, b: Monomial, order: WeightedOrder) -> int:
    return order.compare(a, b)


class MultiPoly:
    """Polynomial over a finite field; treat instances as immutable."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.field = field
        self.nvars = nvars
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != nvars:
                    raise ArityMismatch(f"monomial {mono} in {nvars} variables")
                if isinstance(c, FieldElement):
                    if c.owner != field:
                        raise MixedFields(f"{c.owner} vs {field}")
                    c = c.value
                c = int(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def _raw(cls, field: FieldSpec, nvars: int, terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "MultiPoly":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c: int = 1) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: FieldSpec, mono: Sequence[int], c: int = 1) -> "MultiPoly":
        mono = tuple(mono)
        return cls(field, len(mono), {mono: c})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, k: int) -> "MultiPoly":
        mono = tuple(1 if t == k else 0 for t in range(nvars))
        return cls(field, nvars, {mono: 1})

    @classmethod
    def univariate(cls, field: FieldSpec, coeffs: Sequence[int], nvars: int = 1, var: int = 0) -> "MultiPoly":
        """``sum coeffs[k] X_var^k`` embedded in ``nvars`` variables."""
        terms = {}
        for k, c in enumerate(coeffs):
            mono = tuple(k if t == var else 0 for t in range(nvars))
            terms[mono] = c
        return cls(field, nvars, terms)

    # -- arithmetic ----------------------------------------------------

    def _same(self, other: "MultiPoly") -> None:
        if other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._same(other)
            return other
        if isinstance(other, FieldElement):
            return MultiPoly.constant(self.field, self.nvars, other)
        if isinstance(other, (int, np.integer)):
            return MultiPoly.constant(self.field, self.nvars, self.field.from_int(int(other)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(F, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MultiPoly._raw(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, 0), F.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(F, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = MultiPoly.constant(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: int) -> "MultiPoly":
        """Multiply by the field element with code c."""
        F = self.field
        if not c:
            return MultiPoly.zero(F, self.nvars)
        return MultiPoly._raw(F, self.nvars, {m: F.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: int = 1) -> "MultiPoly":
        F = self.field
        if not c:
            return MultiPoly.zero(F, self.nvars)
        return MultiPoly._raw(
            F, self.nvars, {mono_mul(m, mono): F.mul(v, c) for m, v in self.terms.items()}
        )

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[Monomial]:
        return list(self.terms)

    def coeff(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def degree(self, var: int | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(m) for m in self.terms)
        return max(m[var] for m in self.terms)

    def leading_monomial(self, order: WeightedOrder) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        if order.nvars != self.nvars:
            raise ArityMismatch(f"order on {order.nvars} variables, polynomial in {self.nvars}")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: WeightedOrder) -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: WeightedOrder) -> "MultiPoly":
        return self.scale(self.field.inv(self.leading_coeff(order)))

    def sorted_terms(self, order: WeightedOrder | None = None, descending: bool = True):
        key = order.key if order is not None else (lambda m: (sum(m), m))
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=descending)

    # -- evaluation ----------------------------------------------------

    def evaluate(self, point: Sequence) -> int:
        F = self.field
        pt = [p.value if isinstance(p, FieldElement) else int(p) for p in point]
        acc = 0
        for mono, c in self.terms.items():
            t = c
            for x, e in zip(pt, mono):
                if e:
                    t = F.mul(t, F.pow(x, e))
            acc = F.add(acc, t)
        return acc

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at every row of an (N, nvars) array of codes."""
        F = self.field
        points = np.asarray(points, dtype=np.int64).reshape(-1, self.nvars)
        acc = np.zeros(points.shape[0], dtype=np.int64)
        for mono, c in self.terms.items():
            t = np.full(points.shape[0], c, dtype=np.int64)
            for k, e in enumerate(mono):
                if e:
                    t = F.vmul(t, F.vpow(points[:, k], e))
            acc = F.vadd(acc, t)
        return acc

    # -- comparison / printing ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def format(self, order: WeightedOrder | None = None) -> str:
        return format_poly(self, order)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r} over {self.field!r})"


def leading_monomial(F: MultiPoly, order: WeightedOrder) -> Monomial:
    return F.leading_monomial(order)


# -- division -----------------------------------------------------------

def _heap_key(order: WeightedOrder, m: Monomial) -> tuple:
    w, exps = order.key(m)
    return (-w, tuple(-e for e in exps))


def divide(
    F: MultiPoly, G: Sequence[MultiPoly], order: WeightedOrder, with_quotients: bool = True
) -> tuple[list[MultiPoly], MultiPoly]:
    """Multivariate division of F by the list G.

    Returns ``(quotients, remainder)`` with ``F = sum q_i G_i + r`` and no
    monomial of r divisible by any ``lm(G_i)``.  Divisors are tried in list
    order.  With ``with_quotients=False`` the quotient list is empty.
    """
    fld = F.field
    nv = F.nvars
    lead = []
    for g in G:
        if g.field != fld:
            raise MixedFields(f"{g.field} vs {fld}")
        if g.nvars != nv:
            raise ArityMismatch(f"{g.nvars} vs {nv} variables")
        if g.is_zero():
            raise ZeroDivisor("division by the zero polynomial")
        lm = g.leading_monomial(order)
        lead.append((lm, fld.inv(g.terms[lm]), g.terms))
    quot = [dict() for _ in G] if with_quotients else None

    p = dict(F.terms)
    heap = [(_heap_key(order, m), m) for m in p]
    heapq.heapify(heap)
    rem: dict[Monomial, int] = {}
    add, mul, neg = fld.add, fld.mul, fld.neg
    while heap:
        _, m = heapq.heappop(heap)
        c = p.get(m)
        if c is None:
            continue
        for idx, (lm, inv_lc, gterms) in enumerate(lead):
            if all(x <= y for x, y in zip(lm, m)):
                f = mul(c, inv_lc)
                shift = tuple(y - x for x, y in zip(lm, m))
                nf = neg(f)
                for gm, gc in gterms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    old = p.get(t)
                    s = add(old or 0, mul(nf, gc))
                    if s:
                        p[t] = s
                        if old is None:
                            heapq.heappush(heap, (_heap_key(order, t), t))
                    elif old is not None:
                        del p[t]
                if quot is not None:
                    qd = quot[idx]
                    s = add(qd.get(shift, 0), f)
                    if s:
                        qd[shift] = s
                    else:
                        qd.pop(shift, None)
                break
        else:
            rem[m] = c
            del p[m]
    quotients = [MultiPoly._raw(fld, nv, q) for q in quot] if quot is not None else []
    return quotients, MultiPoly._raw(fld, nv, rem)


def reduce(F: MultiPoly, G: Sequence[MultiPoly], order: WeightedOrder) -> MultiPoly:
    """Remainder of F on division by G."""
    return divide(F, G, order, with_quotients=False)[1]


# -- text format --------------------------------------------------------

def default_var_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["X", "Y", "Z"][:nvars]
    return [f"X{k + 1}" for k in range(nvars)]


def _format_coeff(field: FieldSpec, c: int) -> tuple[str, str]:
    """Sign and magnitude text for a coefficient code."""
    if field.in_prime_field(c):
        p = field.p
        if p > 2 and c > p // 2:
            return "-", str(p - c)
        return "+", str(c)
    return "+", "{" + str(c) + "}"


def format_poly(F: MultiPoly, order: WeightedOrder | None = None, names: Sequence[str] | None = None) -> str:
    if F.is_zero():
        return "0"
    names = list(names or default_var_names(F.nvars))
    parts = []
    for mono, c in F.sorted_terms(order):
        sign, mag = _format_coeff(F.field, c)
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono_s = "*".join(factors)
        if not mono_s:
            body = mag
        elif mag == "1":
            body = mono_s
        else:
            body = f"{mag}*{mono_s}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_monomial(mono: Monomial, names: Sequence[str] | None = None) -> str:
    names = list(names or default_var_names(len(mono)))
    factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
    return "*".join(factors) if factors else "1"


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"(\{\d+\}|\d+|[A-Z]\d*)(?:\^(\d+))?")


def _var_index(name: str, nvars: int | None) -> int:
    if len(name) > 1:
        return int(name[1:]) - 1
    letters = "XYZ"
    if name not in letters:
        raise ParseError(f"unknown variable {name!r}")
    return letters.index(name)


def parse_poly(text: str, field: FieldSpec, nvars: int | None = None) -> MultiPoly:
    """Parse text like ``"X^4+X^2+X-Y^6-Y^5-Y^3"``.

    Variables are X, Y, Z or X1..Xk; integer coefficients are mapped into the
    prime subfield and ``{k}`` denotes the field element with code k.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return MultiPoly.zero(field, nvars or 1)
    raw_terms = []
    pos = 0
    for mt in _TERM_RE.finditer(s):
        if mt.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = mt.end()
        sign, body = mt.groups()
        coef = 1
        exps: dict[int, int] = {}
        for factor in body.split("*"):
            # juxtaposed factors such as "3X^2Y" are allowed without '*'
            sub = re.findall(r"(?:\d+|\{\d+\}|[A-Z]\d*)(?:\^\d+)?", factor)
            if not sub or "".join(sub) != factor:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            for piece in sub:
                fm = _FACTOR_RE.fullmatch(piece)
                if not fm:
                    raise ParseError(f"bad factor {piece!r} in {text!r}")
                atom, e = fm.group(1), int(fm.group(2) or 1)
                if atom.startswith("{"):
                    code = int(atom[1:-1])
                    if code >= field.q:
                        raise ParseError(f"code {code} outside {field!r}")
                    coef = field.mul(coef, field.pow(code, e))
                elif atom.isdigit():
                    coef = field.mul(coef, field.pow(field.from_int(int(atom)), e))
                else:
                    k = _var_index(atom, nvars)
                    exps[k] = exps.get(k, 0) + e
        if sign == "-":
            coef = field.neg(coef)
        raw_terms.append((exps, coef))
    if pos != len(s):
        raise ParseError(f"cannot parse {text!r}")
    used = max((k for exps, _ in raw_terms for k in exps), default=-1) + 1
    if nvars is None:
        nvars = max(used, 1)
    elif used > nvars:
        raise ArityMismatch(f"{text!r} uses {used} variables, expected {nvars}")
    out = MultiPoly.zero(field, nvars)
    for exps, coef in raw_terms:
        mono = tuple(exps.get(k, 0) for k in range(nvars))
        out = out + MultiPoly(field, nvars, {mono: coef})
    return out
