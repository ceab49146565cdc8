"""Feng-Rao style lower bounds for primary affine variety codes.

Everything is driven by one table: ``rem_lm[s, j]`` is the footprint index of
``lm(M_s M_j rem G)`` (0 when the product reduces to zero).  Footprint
indices are 1-based throughout, so ``M_1 < M_2 < ... < M_n``.

OWB/SOWB are defined by quantifying over all polynomials H supported on an
index set.  Because remainder is linear, ``(M_i, M_j)`` is SOWB with respect
to S exactly when ``rem_lm[s, j] < rem_lm[i, j]`` for every ``s`` in S other
than i: an s with a larger leading monomial is exposed by ``H = M_i + M_s``,
and an s with the same one by choosing the coefficient of ``M_s`` to cancel.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import (
    BadRange,
    BadV,
    EqualIndices,
    ExclusionOutOfRange,
    IndexNotInSupport,
    NotInFootprint,
)
from .groebner import Footprint, IdealSpec, buchberger, footprint
from .polyalg import Monomial, MultiPoly, WeightedOrder, format_monomial, mono_div, mono_divides, reduce

VPolicy = Union[str, int, Mapping[int, int], Callable[[int], int]]


def _storage_dtype(q: int):
    if q <= 256:
        return np.uint8
    if q <= 2**15:
        return np.int16
    return np.int32


class BoundContext:
    """Groebner basis, footprint and the cached table of remainder leading monomials."""

    def __init__(self, gb: Sequence[MultiPoly], order: WeightedOrder, fp: Footprint | None = None):
        self.gb = list(gb)
        self.order = order
        self.fp = fp if fp is not None else footprint(self.gb, order)
        self.field = self.gb[0].field
        self._rem_lm: np.ndarray | None = None
        self._prefix: np.ndarray | None = None

    @classmethod
    def from_ideal(cls, ideal: IdealSpec, order: WeightedOrder) -> "BoundContext":
        return cls(buchberger(ideal, order), order)

    @classmethod
    def from_cab(cls, spec) -> "BoundContext":
        """Context for a generalized C_ab polynomial; optimal ones skip Buchberger."""
        from .cabgen import optimal_gb

        if spec.optimal and spec.a < spec.b:
            return cls(optimal_gb(spec), spec.order)
        return cls.from_ideal(IdealSpec(spec.field, [spec.F]), spec.order)

    @property
    def n(self) -> int:
        return self.fp.n

    # -- the remainder table --------------------------------------------

    def _normal_forms(self, targets: Iterable[Monomial]) -> dict[Monomial, np.ndarray]:
        """Dense normal forms (over the footprint basis) of the target monomials."""
        fld = self.field
        n = self.n
        idx = self.fp.index_of
        order = self.order
        reducers = []
        for g in self.gb:
            lm = g.leading_monomial(order)
            inv = fld.inv(g.terms[lm])
            tail = [(m, fld.neg(fld.mul(c, inv))) for m, c in g.terms.items() if m != lm]
            reducers.append((lm, tail))
        plan: dict[Monomial, tuple[Monomial, list]] = {}
        stack = [m for m in targets if m not in idx]
        while stack:
            m = stack.pop()
            if m in plan or m in idx:
                continue
            for lm, tail in reducers:
                if mono_divides(lm, m):
                    shift = mono_div(m, lm)
                    deps = [(tuple(a + b for a, b in zip(t, shift)), c) for t, c in tail]
                    plan[m] = deps
                    stack.extend(d for d, _ in deps if d not in idx and d not in plan)
                    break
            else:  # pragma: no cover - footprint and reducers disagree
                raise NotInFootprint(f"{m} is neither reducible nor in the footprint")
        dtype = _storage_dtype(fld.q)
        forms: dict[Monomial, np.ndarray] = {}
        for m in sorted(plan, key=order.key):
            acc = np.zeros(n, dtype=np.int64)
            for d, c in plan[m]:
                k = idx.get(d)
                if k is not None:
                    acc[k - 1] = fld.add(int(acc[k - 1]), c)
                else:
                    acc = fld.vadd(acc, fld.vmul(c, forms[d]))
            forms[m] = acc.astype(dtype)
        return forms

    def normal_form(self, mono: Sequence[int]) -> np.ndarray:
        """Coefficients of ``mono rem G`` over ``M_1 .. M_n``."""
        mono = tuple(mono)
        k = self.fp.index_of.get(mono)
        if k is not None:
            v = np.zeros(self.n, dtype=np.int64)
            v[k - 1] = 1
            return v
        return self._normal_forms([mono])[mono].astype(np.int64)

    @property
    def rem_lm(self) -> np.ndarray:
        """(n, n) table of footprint indices of ``lm(M_s M_j rem G)``; 0 if it vanishes."""
        if self._rem_lm is None:
            self._rem_lm = self._build_rem_lm()
        return self._rem_lm

    def _build_rem_lm(self) -> np.ndarray:
        n = self.n
        E = np.array(self.fp.monomials, dtype=np.int64)
        S = E[:, None, :] + E[None, :, :]
        base = int(S.max()) + 1
        radix = base ** np.arange(E.shape[1], dtype=np.int64)
        codes = (S * radix).sum(axis=2)
        uniq, inverse = np.unique(codes, return_inverse=True)
        monos = [tuple(int((c // r) % base) for r in radix) for c in uniq]
        forms = self._normal_forms(monos)
        idx = self.fp.index_of
        lm_of = np.zeros(len(uniq), dtype=np.int64)
        for u, m in enumerate(monos):
            k = idx.get(m)
            if k is not None:
                lm_of[u] = k
            else:
                nz = np.flatnonzero(forms[m])
                lm_of[u] = nz[-1] + 1 if nz.size else 0
        return lm_of[inverse.reshape(n, n)]

    @property
    def prefix_max(self) -> np.ndarray:
        """Row k holds ``max(rem_lm[s, :] for s <= k)``; row 0 is zero."""
        if self._prefix is None:
            R = self.rem_lm
            P = np.zeros((self.n + 1, self.n), dtype=R.dtype)
            np.maximum.accumulate(R, axis=0, out=P[1:])
            self._prefix = P
        return self._prefix

    def rem_lm_index(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        return int(self.rem_lm[i - 1, j - 1])

    def product_remainder(self, i: int, j: int) -> MultiPoly:
        """``M_i M_j rem G`` by plain division (independent of the cached table)."""
        mi, mj = self.fp.monomial(i), self.fp.monomial(j)
        prod = MultiPoly.monomial(self.field, tuple(a + b for a, b in zip(mi, mj)))
        return reduce(prod, self.gb, self.order)

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise NotInFootprint(f"index {i} outside 1..{self.n}")

    def index(self, mono: Sequence[int] | str) -> int:
        if isinstance(mono, str):
            from .polyalg import parse_poly

            p = parse_poly(mono, self.field, self.order.nvars)
            (mono,) = p.terms
        return self.fp.index(mono)

    # -- comparison maxima ----------------------------------------------

    def _max_rows(self, upto: int, extra: Iterable[int] = (), excl: frozenset = frozenset()) -> np.ndarray:
        """Row-wise max of rem_lm over ``{1..upto} \\ excl`` together with ``extra``."""
        R = self.rem_lm
        if upto <= 0:
            out = np.zeros(self.n, dtype=R.dtype)
        elif not excl or min(excl) > upto:
            out = self.prefix_max[upto]
        else:
            rows = [s - 1 for s in range(1, upto + 1) if s not in excl]
            out = R[rows].max(axis=0) if rows else np.zeros(self.n, dtype=R.dtype)
        for e in extra:
            out = np.maximum(out, R[e - 1])
        return out


# -- OWB / SOWB -----------------------------------------------------------

def is_owb(ctx: BoundContext, i: int, j: int) -> bool:
    """(M_i, M_j) is one-way well-behaving."""
    ctx._check(i)
    ctx._check(j)
    R = ctx.rem_lm
    r = R[i - 1, j - 1]
    return bool(r > 0 and (i == 1 or ctx.prefix_max[i - 1, j - 1] < r))


def is_sowb(ctx: BoundContext, i: int, j: int, support: Iterable[int]) -> bool:
    """(M_i, M_j) is strongly one-way well-behaving with respect to ``support``."""
    support = set(support)
    ctx._check(i)
    ctx._check(j)
    if i not in support:
        raise IndexNotInSupport(f"{i} not in support")
    for s in support:
        ctx._check(s)
    R = ctx.rem_lm
    r = R[i - 1, j - 1]
    if r == 0:
        return False
    return all(R[s - 1, j - 1] < r for s in support if s != i)


def _mark(R_row: np.ndarray, mask: np.ndarray, n: int) -> np.ndarray:
    hit = np.zeros(n + 1, dtype=bool)
    hit[R_row[mask]] = True
    hit[0] = False
    return hit


def feng_rao_set(ctx: BoundContext, i: int) -> np.ndarray:
    """Boolean mask over 0..n of the K reached by OWB pairs (M_i, N)."""
    ctx._check(i)
    R = ctx.rem_lm
    mask = R[i - 1] > ctx._max_rows(i - 1)
    return _mark(R[i - 1], mask, ctx.n)


def feng_rao_bound(ctx: BoundContext, i: int) -> int:
    return int(feng_rao_set(ctx, i).sum())


def natural_v(ctx: BoundContext, i: int) -> int:
    """Number of immediate predecessors of M_i sharing its weight."""
    ctx._check(i)
    w = ctx.fp.weights
    v = 0
    while i - v - 2 >= 0 and w[i - v - 2] == w[i - 1]:
        v += 1
    return v


def resolve_v(ctx: BoundContext, i: int, v_policy: VPolicy) -> int:
    if isinstance(v_policy, str):
        if v_policy not in ("natural", "auto"):
            raise BadV(f"unknown v policy {v_policy!r}")
        return natural_v(ctx, i)
    if isinstance(v_policy, (int, np.integer)):
        return min(int(v_policy), i - 1)
    if isinstance(v_policy, Mapping):
        return int(v_policy[i]) if i in v_policy else natural_v(ctx, i)
    return int(v_policy(i))


@dataclass
class CaseSet:
    """One case of the new bound: its label t, pivot index and reached K."""

    t: int
    pivot: int
    hits: np.ndarray
    witnesses: dict[int, tuple[int, int]] = dc_field(default_factory=dict)

    @property
    def card(self) -> int:
        return int(self.hits.sum())

    def members(self) -> list[int]:
        return [int(k) for k in np.flatnonzero(self.hits)]


def _witnesses(R: np.ndarray, pairs: Sequence[tuple[int, np.ndarray]]) -> dict[int, tuple[int, int]]:
    out: dict[int, tuple[int, int]] = {}
    for pivot, mask in pairs:
        for j in np.flatnonzero(mask):
            k = int(R[pivot - 1, j])
            out.setdefault(k, (pivot, int(j) + 1))
    return out


def case_sets(
    ctx: BoundContext,
    i: int,
    v: int,
    excl: Iterable[int] = (),
    with_witnesses: bool = False,
) -> list[CaseSet]:
    """The sets L(1) .. L(v+1) for a word with leading monomial M_i.

    Case t (t <= v) assumes coefficient i-t is the largest nonzero one below
    i; it is skipped when i-t is excluded a priori.  Excluded indices are
    removed from every support.
    """
    ctx._check(i)
    if not 0 <= v < i:
        raise BadV(f"v={v} outside 0..{i - 1}")
    excl = frozenset(int(x) for x in excl)
    if any(not 1 <= x < i for x in excl):
        raise ExclusionOutOfRange(f"exclusions {sorted(excl)} not within 1..{i - 1}")
    R = ctx.rem_lm
    n = ctx.n
    out = []
    for t in range(1, v + 1):
        p = i - t
        if p in excl:
            continue
        mask_i = R[i - 1] > ctx._max_rows(p, excl=excl)
        mask_p = R[p - 1] > ctx._max_rows(p - 1, extra=(i,), excl=excl)
        hits = _mark(R[i - 1], mask_i, n) | _mark(R[p - 1], mask_p, n)
        wit = _witnesses(R, [(i, mask_i), (p, mask_p)]) if with_witnesses else {}
        out.append(CaseSet(t, p, hits, wit))
    mask = R[i - 1] > ctx._max_rows(i - v - 1, excl=excl)
    wit = _witnesses(R, [(i, mask)]) if with_witnesses else {}
    out.append(CaseSet(v + 1, i, _mark(R[i - 1], mask, n), wit))
    return out


@dataclass
class NewBound:
    bound: int
    cards: list[int | None]


def new_bound(ctx: BoundContext, i: int, v: int | None = None, excl: Iterable[int] = ()) -> NewBound:
    """``min(#L(1), ..., #L(v+1))``; ``cards[t-1]`` is None for skipped cases."""
    if v is None:
        v = natural_v(ctx, i)
    sets = case_sets(ctx, i, v, excl)
    cards: list[int | None] = [None] * (v + 1)
    for cs in sets:
        cards[cs.t - 1] = cs.card
    return NewBound(min(cs.card for cs in sets), cards)


def verify_witnesses(ctx: BoundContext, sets: Sequence[CaseSet], i: int, v: int, excl: Iterable[int] = ()) -> bool:
    """Re-check every stored witness by fresh division and explicit SOWB tests."""
    excl = set(excl)
    for cs in sets:
        if cs.t <= v:
            support = {s for s in range(1, cs.pivot + 1) if s not in excl} | {i}
        else:
            support = {s for s in range(1, i - v) if s not in excl} | {i}
        for k, (pivot, j) in cs.witnesses.items():
            rem = ctx.product_remainder(pivot, j)
            if rem.is_zero() or ctx.fp.index(rem.leading_monomial(ctx.order)) != k:
                return False
            if not is_sowb(ctx, pivot, j, support | {pivot}):
                return False
        if set(cs.witnesses) != set(cs.members()):
            return False
    return True


# -- code-level reports ---------------------------------------------------

@dataclass
class IndexReport:
    i: int
    monomial: str
    weight: int
    v: int
    cards: list[int | None]
    value: int
    excluded: list[int] = dc_field(default_factory=list)


@dataclass
class BoundReport:
    rows: list[IndexReport]

    @property
    def bound(self) -> int:
        return min(r.value for r in self.rows)

    def by_index(self) -> dict[int, IndexReport]:
        return {r.i: r for r in self.rows}

    def to_json(self) -> str:
        return json.dumps(
            {
                "bound": self.bound,
                "rows": [
                    {
                        "i": r.i,
                        "monomial": r.monomial,
                        "weight": r.weight,
                        "v": r.v,
                        "cards": r.cards,
                        "sigma": r.value,
                        "excluded": r.excluded,
                    }
                    for r in self.rows
                ],
            }
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "monomial", "weight", "v", "cards", "sigma"])
        for r in self.rows:
            cards = ";".join("-" if c is None else str(c) for c in r.cards)
            w.writerow([r.i, r.monomial, r.weight, r.v, cards, r.value])
        return buf.getvalue()


def apriori_exclusions(box: Iterable[int]) -> dict[int, set[int]]:
    """For a monomial-spanned code, indices below i that are not in the box."""
    box = sorted(set(box))
    members = set(box)
    return {i: {s for s in range(1, i) if s not in members} for i in box}


def index_report(ctx: BoundContext, i: int, v: int, excl: Iterable[int] = ()) -> IndexReport:
    nb = new_bound(ctx, i, v, excl)
    return IndexReport(
        i,
        format_monomial(ctx.fp.monomial(i)),
        ctx.fp.weight(i),
        v,
        nb.cards,
        nb.bound,
        sorted(excl),
    )


def min_distance_bound(
    ctx: BoundContext,
    box: Iterable[int],
    v_policy: VPolicy = "natural",
    excl_map: Mapping[int, Iterable[int]] | str | None = None,
) -> BoundReport:
    """Minimum of the new bound over the box; ``excl_map="auto"`` uses the
    a priori zeros implied by a monomial-spanned code."""
    box = sorted(set(int(i) for i in box))
    if not box:
        raise ValueError("empty box")
    if excl_map == "auto":
        excl_map = apriori_exclusions(box)
    excl_map = excl_map or {}
    rows = []
    for i in box:
        v = resolve_v(ctx, i, v_policy)
        rows.append(index_report(ctx, i, v, excl_map.get(i, ())))
    return BoundReport(rows)


def sigma_tilde(ctx: BoundContext, v_policy: VPolicy = "natural") -> np.ndarray:
    """The new-bound value for every footprint index (entry 0 unused)."""
    out = np.zeros(ctx.n + 1, dtype=np.int64)
    for i in range(1, ctx.n + 1):
        out[i] = new_bound(ctx, i, resolve_v(ctx, i, v_policy)).bound
    return out


def feng_rao_sigma(ctx: BoundContext) -> np.ndarray:
    out = np.zeros(ctx.n + 1, dtype=np.int64)
    for i in range(1, ctx.n + 1):
        out[i] = feng_rao_bound(ctx, i)
    return out


# -- closed form for optimal generalized C_ab polynomials -------------------

def _cab_params(a: int, b: int, q: int, alpha1: int, alpha2: int):
    if not (0 <= alpha1 < a and 0 <= alpha2 < q and 0 < a < b):
        raise BadRange(f"need 0<=alpha1<a, 0<=alpha2<q, a<b; got a={a} b={b} q={q} ({alpha1},{alpha2})")
    g = math.gcd(a, b)
    return g, b // g, a // g


def b1_card(a: int, b: int, q: int, alpha1: int, alpha2: int) -> int:
    _cab_params(a, b, q, alpha1, alpha2)
    return (a - alpha1) * (q - alpha2)


def b2_card(a: int, b: int, q: int, alpha1: int, alpha2: int) -> int:
    """Size of the block ``alpha1-T <= g1 < alpha1, alpha2+b <= g2 < q``."""
    _, _, wY = _cab_params(a, b, q, alpha1, alpha2)
    T = alpha1 % wY
    if T and alpha2 < q - b:
        return T * (q - alpha2 - b)
    return 0


def b3_card(a: int, b: int, q: int, alpha1: int, alpha2: int, u: int) -> int:
    g, wX, wY = _cab_params(a, b, q, alpha1, alpha2)
    if not 1 <= u <= g:
        raise BadRange(f"u={u} outside 1..{g}")
    if a - wY < alpha1 and alpha2 < q - b:
        return (wY * u - a + alpha1) * (q - alpha2 - wX * u)
    return 0


def b_sets(a: int, b: int, q: int, alpha1: int, alpha2: int) -> dict:
    """Explicit monomial sets B1, B2 and B3(u) for u = 1..gcd(a, b)."""
    g, wX, wY = _cab_params(a, b, q, alpha1, alpha2)
    T = alpha1 % wY
    B1 = {(g1, g2) for g1 in range(alpha1, a) for g2 in range(alpha2, q)}
    B2 = set()
    if T and alpha2 < q - b:
        B2 = {(g1, g2) for g1 in range(alpha1 - T, alpha1) for g2 in range(alpha2 + b, q)}
    B3 = {}
    for u in range(1, g + 1):
        if a - wY < alpha1 and alpha2 < q - b:
            B3[u] = {
                (g1, g2)
                for g1 in range(a - wY * u, alpha1)
                for g2 in range(alpha2 + wX * u, q)
            }
        else:
            B3[u] = set()
    return {"B1": B1, "B2": B2, "B3": B3}


def closed_form_epsilon(a: int, b: int, q: int, alpha1: int, alpha2: int) -> int:
    g, wX, wY = _cab_params(a, b, q, alpha1, alpha2)
    T = alpha1 % wY
    if alpha2 >= q - b:
        return 0
    if alpha1 <= a - wY:
        return T * (q - alpha2 - b)
    # alpha2 <= q - wX - alpha1 (b - wX)/(a - wY), cross-multiplied (a - wY > 0 here)
    if alpha2 * (a - wY) <= (q - wX) * (a - wY) - alpha1 * (b - wX):
        return T * (q - alpha2 - wX)
    return alpha1 * (q - alpha2 - b)


def closed_form_bound(a: int, b: int, q: int, alpha1: int, alpha2: int) -> int:
    """``(a - alpha1)(q - alpha2) + epsilon`` for the word with leading monomial X^alpha1 Y^alpha2."""
    return (a - alpha1) * (q - alpha2) + closed_form_epsilon(a, b, q, alpha1, alpha2)


def closed_form_audit(a: int, b: int, q: int, alpha1: int, alpha2: int) -> int:
    """Same bound assembled from B-set cardinalities and the parabola minimum."""
    g, _, wY = _cab_params(a, b, q, alpha1, alpha2)
    base = b1_card(a, b, q, alpha1, alpha2)
    if a - wY < alpha1:
        return base + min(b3_card(a, b, q, alpha1, alpha2, u) for u in (1, g))
    return base + b2_card(a, b, q, alpha1, alpha2)


def closed_form_threshold(a: int, b: int, q: int, alpha1: int) -> Fraction:
    g = math.gcd(a, b)
    wX, wY = b // g, a // g
    return Fraction(q - wX) - Fraction(alpha1 * (b - wX), a - wY)


# -- second generalized Hamming weight ---------------------------------------

def ghw2_bound(ctx: BoundContext, i1: int, i2: int, v1: int | None = None, v2: int | None = None) -> int:
    """Lower bound on #Supp(D) for 2-dim D with leading indices i1 != i2."""
    if i1 == i2:
        raise EqualIndices("i1 and i2 must differ")
    v1 = natural_v(ctx, i1) if v1 is None else v1
    v2 = natural_v(ctx, i2) if v2 is None else v2
    s1 = case_sets(ctx, i1, v1)
    s2 = case_sets(ctx, i2, v2)
    return min(int((a.hits | b.hits).sum()) for a in s1 for b in s2)


def ghw2_code_bound(ctx: BoundContext, box: Iterable[int], v_policy: VPolicy = "natural") -> int:
    box = sorted(set(box))
    if len(box) < 2:
        raise ValueError("need a code of dimension >= 2")
    best = None
    for x, i1 in enumerate(box):
        for i2 in box[x + 1:]:
            val = ghw2_bound(ctx, i1, i2, resolve_v(ctx, i1, v_policy), resolve_v(ctx, i2, v_policy))
            best = val if best is None else min(best, val)
    return best
