"""Primary and dual affine variety codes, improved constructions and the
linear-code-level bounds.

The linear-level bounds work on an abstract basis triple (U, V, W) through
the table ``rho[i, j] = rho_bar_W(u_i * v_j)``.  For evaluation bases of an
affine variety code that table coincides with ``BoundContext.rem_lm``, which
is how the affine and linear paths are cross-checked.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import linalg
from .bounds import BoundContext, NewBound, VPolicy, feng_rao_sigma, sigma_tilde, min_distance_bound, natural_v
from .errors import DependentInput, EmptyCode, RankDeficient, SingularBasis
from .field import FieldSpec
from .groebner import IdealSpec, variety_points

INJECTIVITY_CHECK_LIMIT = 1024
TRIPLE_TABLE_LIMIT = 256


def evaluation_points(source) -> np.ndarray:
    """Variety points (lex order on coordinate codes) of an IdealSpec or BoundContext."""
    if isinstance(source, BoundContext):
        source = IdealSpec(source.field, source.gb, include_field_equations=False)
    return variety_points(source)


def evaluate_monomials(field: FieldSpec, points: np.ndarray, monomials: Sequence[Sequence[int]]) -> np.ndarray:
    """Row r is the evaluation of ``monomials[r]`` at every point."""
    points = np.asarray(points, dtype=np.int64)
    nvars = points.shape[1]
    top = max((max(m) for m in monomials), default=0)
    powers = []
    for k in range(nvars):
        col = points[:, k]
        table = np.ones((top + 1, len(col)), dtype=np.int64)
        for e in range(1, top + 1):
            table[e] = field.vmul(table[e - 1], col)
        powers.append(table)
    out = np.ones((len(monomials), points.shape[0]), dtype=np.int64)
    for r, m in enumerate(monomials):
        row = out[r]
        for k, e in enumerate(m):
            if e:
                row = field.vmul(row, powers[k][e])
        out[r] = row
    return out


def evaluation_matrix(ctx: BoundContext, check: bool = True) -> np.ndarray:
    """``ev(M_1), ..., ev(M_n)`` as rows; cached on the context."""
    E = getattr(ctx, "_ev_matrix", None)
    if E is None:
        pts = evaluation_points(ctx)
        if pts.shape[0] != ctx.n:
            raise RankDeficient(f"{pts.shape[0]} points but footprint size {ctx.n}")
        E = evaluate_monomials(ctx.field, pts, ctx.fp.monomials)
        if check and ctx.n <= INJECTIVITY_CHECK_LIMIT and linalg.rank(ctx.field, E) != ctx.n:
            raise RankDeficient("evaluation map is not injective")
        ctx._ev_matrix = E
        ctx._points = pts
    return E


@dataclass
class CodeSpec:
    """A linear code of length n with an explicit generator matrix.

    ``indices`` is set for monomial-spanned primary codes and ``checks`` for
    duals of monomial-spanned codes (the footprint indices of the parity checks).
    """

    field: FieldSpec
    generator: np.ndarray
    ctx: BoundContext | None = None
    indices: tuple[int, ...] | None = None
    coeffs: np.ndarray | None = None
    checks: tuple[int, ...] | None = None
    kind: str = "primary"
    designed: int | None = None
    label: str = ""

    @property
    def n(self) -> int:
        return int(self.generator.shape[1])

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    dim = k

    def box(self) -> list[int]:
        if self.indices is not None:
            return sorted(self.indices)
        if self.coeffs is not None:
            return box_of_subspace(self.field, self.coeffs)
        raise ValueError("box is only defined for primary codes given over the footprint")

    def params(self) -> str:
        d = "?" if self.designed is None else f">={self.designed}"
        return f"[{self.n},{self.k},{d}]"

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.generator.tolist())
        return buf.getvalue()


def monomial_code(ctx: BoundContext, indices: Iterable[int], label: str = "") -> CodeSpec:
    idx = tuple(sorted(set(int(i) for i in indices)))
    for i in idx:
        ctx._check(i)
    E = evaluation_matrix(ctx)
    G = E[[i - 1 for i in idx]] if idx else np.zeros((0, ctx.n), dtype=np.int64)
    return CodeSpec(ctx.field, G, ctx, indices=idx, label=label)


def subspace_code(ctx: BoundContext, vectors, label: str = "") -> CodeSpec:
    """Code spanned by ``ev`` of polynomials given as coefficient rows over M_1..M_n."""
    V = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    if linalg.rank(ctx.field, V) != V.shape[0]:
        raise DependentInput("coefficient vectors are linearly dependent")
    G = linalg.matmul(ctx.field, V, evaluation_matrix(ctx))
    return CodeSpec(ctx.field, G, ctx, coeffs=V, label=label)


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    if spec.k and linalg.rank(spec.field, spec.generator) != spec.k:
        raise RankDeficient("generator matrix rows are dependent")
    return spec.generator


def _reverse_echelon(field: FieldSpec, vectors) -> tuple[np.ndarray, list[int]]:
    """Echelon form with respect to the last nonzero coordinate; rows sorted by it."""
    V = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    R, piv = linalg.rref(field, V[:, ::-1])
    n = V.shape[1]
    leads = [n - p for p in piv]
    order = np.argsort(leads)
    return R[:, ::-1][order], [leads[o] for o in order]


def box_of_subspace(field: FieldSpec, vectors) -> list[int]:
    """Leading indices of a well-behaving basis of the span of ``vectors``."""
    V = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    _, leads = _reverse_echelon(field, V)
    if len(leads) != V.shape[0]:
        raise DependentInput("vectors are linearly dependent")
    return leads


def code_exclusions(field: FieldSpec, vectors) -> dict[int, set[int]]:
    """For each leading index i: positions x < i that vanish on every word with leading index <= i."""
    R, leads = _reverse_echelon(field, vectors)
    out = {}
    for r, i in enumerate(leads):
        block = R[: r + 1, : i - 1]
        out[i] = {x + 1 for x in np.flatnonzero(~block.any(axis=0))}
    return out


def code_bound(ctx: BoundContext, spec: CodeSpec, v_policy: VPolicy = "natural", exclusions: bool = True):
    """BoundReport of a primary code over the footprint, using a priori zeros when asked."""
    if spec.indices is not None:
        return min_distance_bound(ctx, spec.indices, v_policy, "auto" if exclusions else None)
    excl = code_exclusions(ctx.field, spec.coeffs) if exclusions else None
    return min_distance_bound(ctx, spec.box(), v_policy, excl)


# -- improved constructions -------------------------------------------------

def _sigma(ctx: BoundContext, v_policy: VPolicy) -> np.ndarray:
    cache = getattr(ctx, "_sigma_cache", None)
    if cache is None:
        cache = ctx._sigma_cache = {}
    key = v_policy if isinstance(v_policy, (str, int)) else None
    if key is not None and key in cache:
        return cache[key]
    s = sigma_tilde(ctx, v_policy)
    if key is not None:
        cache[key] = s
    return s


def improved_indices(ctx: BoundContext, delta: int, v_policy: VPolicy = "natural") -> list[int]:
    s = _sigma(ctx, v_policy)
    return [i for i in range(1, ctx.n + 1) if s[i] >= delta]


def improved_code(ctx: BoundContext, delta: int, v_policy: VPolicy = "natural", build: bool = True) -> CodeSpec:
    """The improved code spanned by ev(M_i) over all i with sigma_tilde(i) >= delta."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    idx = improved_indices(ctx, delta, v_policy)
    if not idx:
        raise EmptyCode(f"no footprint index reaches delta={delta}")
    if build:
        spec = monomial_code(ctx, idx, label=f"Eimp({delta})")
    else:
        spec = CodeSpec(ctx.field, np.zeros((len(idx), ctx.n), dtype=np.int64), ctx, indices=tuple(idx))
    spec.designed = delta
    return spec


def improved_code_with_exclusions(
    ctx: BoundContext, delta: int, v_policy: VPolicy = "natural", build: bool = True
) -> CodeSpec:
    """Greedy enlargement of the improved code using a priori zero coefficients.

    Starting from the improved code, each remaining index (ascending) is
    added when the bound of the enlarged box, computed with the zeros that
    the box itself implies, stays >= delta.
    """
    try:
        box = improved_indices(ctx, delta, v_policy)
    except EmptyCode:  # pragma: no cover - improved_indices never raises
        box = []
    current = set(box)
    for c in range(1, ctx.n + 1):
        if c in current:
            continue
        trial = current | {c}
        if min_distance_bound(ctx, trial, v_policy, "auto").bound >= delta:
            current = trial
    if not current:
        raise EmptyCode(f"no footprint index reaches delta={delta}")
    idx = sorted(current)
    if build:
        spec = monomial_code(ctx, idx, label=f"Eimp+excl({delta})")
    else:
        spec = CodeSpec(ctx.field, np.zeros((len(idx), ctx.n), dtype=np.int64), ctx, indices=tuple(idx))
    spec.designed = delta
    return spec


def dual_code(spec: CodeSpec) -> CodeSpec:
    """Orthogonal complement under the standard inner product."""
    K = linalg.kernel(spec.field, spec.generator, spec.n)
    kind = "dual" if spec.kind == "primary" else "primary"
    return CodeSpec(
        spec.field,
        K,
        spec.ctx,
        checks=spec.indices if spec.kind == "primary" else None,
        kind=kind,
        label=f"dual({spec.label})" if spec.label else "",
    )


def monomial_dual_code(ctx: BoundContext, checks: Iterable[int], label: str = "") -> CodeSpec:
    """``C^perp(I, L)`` for L spanned by ev(M_s), s in checks."""
    return dual_code(monomial_code(ctx, checks, label))


# -- linear code level ------------------------------------------------------

def rho_bar(field: FieldSpec, basis, c) -> int:
    """Smallest i with c in the span of the first i basis rows (0 for c = 0)."""
    B = np.asarray(basis, dtype=np.int64)
    c = np.asarray(c, dtype=np.int64)
    if not c.any():
        return 0
    coords = linalg.matmul(field, c.reshape(1, -1), linalg.inverse(field, B))
    return int(linalg.last_nonzero(coords)[0])


@dataclass
class BasisTriple:
    """Three ordered bases of F_q^n given as row matrices."""

    field: FieldSpec
    U: np.ndarray
    V: np.ndarray
    W: np.ndarray
    weights: Sequence[int] | None = None
    _table: np.ndarray | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.U = np.asarray(self.U, dtype=np.int64)
        self.V = np.asarray(self.V, dtype=np.int64)
        self.W = np.asarray(self.W, dtype=np.int64)
        n = self.U.shape[0]
        for name, M in (("U", self.U), ("V", self.V), ("W", self.W)):
            if M.shape != (n, n):
                raise SingularBasis(f"{name} is not {n}x{n}")
        self._Winv = None

    @property
    def n(self) -> int:
        return self.U.shape[0]

    def validate(self) -> None:
        for name, M in (("U", self.U), ("V", self.V), ("W", self.W)):
            if linalg.rank(self.field, M) != self.n:
                raise SingularBasis(f"{name} is not a basis")

    @property
    def Winv(self) -> np.ndarray:
        if self._Winv is None:
            self._Winv = linalg.inverse(self.field, self.W)
        return self._Winv

    @classmethod
    def from_context(cls, ctx: BoundContext, use_context_table: bool = True) -> "BasisTriple":
        """Evaluation bases (U = V = W = ev(M_1..M_n)); optionally borrow ctx.rem_lm."""
        E = evaluation_matrix(ctx)
        t = cls(ctx.field, E, E, E, list(ctx.fp.weights))
        if use_context_table:
            t._table = ctx.rem_lm
        return t

    @property
    def table(self) -> np.ndarray:
        """``rho[i-1, j-1] = rho_bar_W(u_i * v_j)``."""
        if self._table is None:
            if self.n > TRIPLE_TABLE_LIMIT:
                from .errors import SizeExceeded

                raise SizeExceeded(f"triple table guard: n={self.n} > {TRIPLE_TABLE_LIMIT}")
            f = self.field
            n = self.n
            P = f.vmul(self.U[:, None, :], self.V[None, :, :]).reshape(n * n, n)
            coords = linalg.matmul(f, P, self.Winv)
            self._table = linalg.last_nonzero(coords).reshape(n, n)
        return self._table

    def rho_u(self, code_generator) -> list[int]:
        """The set rho_bar_U(C) of a code given by a generator matrix."""
        coords = linalg.matmul(self.field, code_generator, linalg.inverse(self.field, self.U))
        _, piv = linalg.rref(self.field, coords[:, ::-1])
        return sorted(self.n - p for p in piv)

    def m_values(self, code_generator) -> list[int]:
        """The set m(C): first l with c . w_l != 0, over nonzero c in C."""
        M = linalg.matmul(self.field, code_generator, self.W.T)
        _, piv = linalg.rref(self.field, M)
        return [p + 1 for p in piv]

    def primary_exclusions(self, code_generator) -> dict[int, set[int]]:
        coords = linalg.matmul(self.field, code_generator, linalg.inverse(self.field, self.U))
        return code_exclusions(self.field, coords)

    def dual_apriori(self, code_generator) -> dict[int, set[int]]:
        """For each l in m(C): indices x > l with c . w_x = 0 for every c having m(c) >= l."""
        M = linalg.matmul(self.field, code_generator, self.W.T)
        R, piv = linalg.rref(self.field, M)
        out = {}
        for r, p in enumerate(piv):
            block = R[r:, p + 1:]
            out[p + 1] = {p + 2 + x for x in np.flatnonzero(~block.any(axis=0))}
        return out

    def natural_v(self, i: int) -> int:
        if self.weights is None:
            return 0
        w = self.weights
        v = 0
        while i - v - 2 >= 0 and w[i - v - 2] == w[i - 1]:
            v += 1
        return v

    def natural_dual_v(self, l: int) -> int:
        return natural_dual_v(self.weights, l) if self.weights is not None else 0


def _row_max(rho: np.ndarray, rows: Iterable[int]) -> np.ndarray:
    rows = [r - 1 for r in rows]
    if not rows:
        return np.zeros(rho.shape[1], dtype=rho.dtype)
    return rho[rows].max(axis=0)


def _reached(rho: np.ndarray, z: int, compare: Iterable[int]) -> set[int]:
    """l reached by SOWB pairs (z, j) against the comparison rows."""
    row = rho[z - 1]
    ok = row > _row_max(rho, compare)
    return {int(x) for x in row[ok] if x > 0}


def linear_case_sets(rho: np.ndarray, i: int, v: int, excl: Iterable[int] = ()) -> list[set[int]]:
    """The sets L'(1) .. L'(s+1) for a word with rho_bar_U = i."""
    n = rho.shape[0]
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    if not 0 <= v < i:
        from .errors import BadV

        raise BadV(f"v={v} outside 0..{i - 1}")
    excl = set(excl)
    zs = [z for z in range(i - v, i) if z not in excl]
    star = [z for z in range(1, i - v) if z not in excl]
    s = len(zs)
    sets = []
    for t in range(1, s + 1):
        keep = zs[: s - t + 1]
        support = set(star) | set(keep) | {i}
        reached = set()
        for z in (keep[-1], i):
            reached |= _reached(rho, z, support - {z})
        sets.append(reached)
    sets.append(_reached(rho, i, star))
    return sets


def linear_new_bound(rho: np.ndarray, i: int, v: int, excl: Iterable[int] = ()) -> NewBound:
    sets = linear_case_sets(rho, i, v, excl)
    cards = [len(x) for x in sets]
    return NewBound(min(cards), cards)


def _resolve(v_policy, i: int, natural) -> int:
    if v_policy in ("natural", "auto"):
        return natural(i)
    if isinstance(v_policy, (int, np.integer)):
        return int(v_policy)
    if isinstance(v_policy, Mapping):
        return int(v_policy.get(i, natural(i)))
    return int(v_policy(i))


def linear_primary_bound(
    triple: BasisTriple, code_generator, v_policy: VPolicy = "natural", excl: str | Mapping | None = "auto"
) -> int:
    """Minimum over i in rho_bar_U(C) of the linear-level new bound."""
    G = np.atleast_2d(np.asarray(code_generator, dtype=np.int64))
    rho = triple.table
    idx = triple.rho_u(G)
    if excl == "auto":
        excl = triple.primary_exclusions(G)
    excl = excl or {}
    best = None
    for i in idx:
        v = min(_resolve(v_policy, i, triple.natural_v), i - 1)
        val = linear_new_bound(rho, i, v, excl.get(i, ())).bound
        best = val if best is None else min(best, val)
    if best is None:
        raise EmptyCode("zero code")
    return best


# -- dual side --------------------------------------------------------------

def natural_dual_v(weights: Sequence[int], l: int) -> int:
    """Number of immediate successors of position l sharing its weight."""
    n = len(weights)
    v = 0
    while l + v < n and weights[l + v] == weights[l - 1]:
        v += 1
    return v


def _greedy(rho: np.ndarray, l: int, admit) -> list[int]:
    """Scan i = 1..n, admitting i when ``admit(row, has_l, top)`` finds a witness j.

    ``has_l[j]`` records whether an admitted row already hits l in column j
    and ``top[j]`` is the largest value among admitted rows.
    """
    n, m = rho.shape
    has_l = np.zeros(m, dtype=bool)
    top = np.zeros(m, dtype=rho.dtype)
    chosen = []
    for i in range(1, n + 1):
        row = rho[i - 1]
        if admit(row, has_l, top).any():
            chosen.append(i)
            top = np.maximum(top, row)
            has_l |= row == l
    return chosen


def mu_set(rho: np.ndarray, l: int, g: int) -> list[int]:
    """Greedy maximal set with the mu-property w.r.t. l, exception {l+1..l+g}."""
    return _greedy(rho, l, lambda row, has_l, top: (row == l) & ~has_l & (top <= l + g))


def relaxed_mu_set(rho: np.ndarray, l: int, l2: int) -> list[int]:
    """Greedy maximal set with the relaxed mu-property w.r.t. (l, l2), exception {l+1..l2-1}."""
    return _greedy(rho, l, lambda row, has_l, top: ((row == l) | (row == l2)) & ~has_l & (top < l2))


def mu_sets(rho: np.ndarray, l: int, v: int, apriori: Iterable[int] = ()) -> list[list[int]]:
    """[I'_0, I'_1, ..., I'_s] for a word with m(c) = l."""
    n = rho.shape[0]
    if not 1 <= l or l + v > n:
        from .errors import BadV

        raise BadV(f"need 1 <= l and l + v <= n (l={l}, v={v}, n={n})")
    apriori = set(apriori)
    rest = [x for x in range(l + 1, l + v + 1) if x not in apriori]
    out = [mu_set(rho, l, v)]
    for l2 in rest:
        out.append(relaxed_mu_set(rho, l, l2))
    return out


def dual_value(rho: np.ndarray, l: int, v: int, apriori: Iterable[int] = ()) -> int:
    return min(len(s) for s in mu_sets(rho, l, v, apriori))


def mu_dual_bound(
    triple: BasisTriple, code_generator, v_policy: VPolicy = "natural", apriori: str | Mapping | None = "auto"
) -> int:
    """Minimum over l in m(C) of the dual bound with greedy mu-sets."""
    G = np.atleast_2d(np.asarray(code_generator, dtype=np.int64))
    rho = triple.table
    ls = triple.m_values(G)
    if apriori == "auto":
        apriori = triple.dual_apriori(G)
    apriori = apriori or {}
    best = None
    for l in ls:
        v = min(_resolve(v_policy, l, triple.natural_dual_v), triple.n - l)
        val = dual_value(rho, l, v, apriori.get(l, ()))
        best = val if best is None else min(best, val)
    if best is None:
        raise EmptyCode("zero code")
    return best


def dual_sigma(ctx: BoundContext, v_policy: VPolicy = "natural") -> np.ndarray:
    """Dual bound value for every position l (entry 0 unused), no a priori zeros."""
    cache = getattr(ctx, "_dual_sigma_cache", None)
    if cache is None:
        cache = ctx._dual_sigma_cache = {}
    key = v_policy if isinstance(v_policy, (str, int)) else None
    if key is not None and key in cache:
        return cache[key]
    rho = ctx.rem_lm
    w = ctx.fp.weights
    out = np.zeros(ctx.n + 1, dtype=np.int64)
    for l in range(1, ctx.n + 1):
        v = min(_resolve(v_policy, l, lambda x: natural_dual_v(w, x)), ctx.n - l)
        out[l] = dual_value(rho, l, v)
    if key is not None:
        cache[key] = out
    return out


def cfim_code(ctx: BoundContext, delta: int, v_policy: VPolicy = "natural", build: bool = True) -> CodeSpec:
    """Improved dual code: orthogonal to ev(M_l) for every l whose dual value is below delta."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    s = dual_sigma(ctx, v_policy)
    checks = [l for l in range(1, ctx.n + 1) if s[l] < delta]
    if build:
        spec = monomial_dual_code(ctx, checks, label=f"Cfim({delta})")
    else:
        k = ctx.n - len(checks)
        spec = CodeSpec(ctx.field, np.zeros((k, ctx.n), dtype=np.int64), ctx, checks=tuple(checks), kind="dual")
    spec.designed = delta
    return spec


# -- parameter tables -------------------------------------------------------

CONSTRUCTIONS = ("eimp", "cfim", "ek")


def dimension_table(
    ctx: BoundContext, construction: str = "eimp", deltas: Iterable[int] | None = None, v_policy: VPolicy = "natural"
) -> list[tuple[int, int]]:
    """(delta, k) pairs; k is the dimension achieving designed distance delta."""
    n = ctx.n
    deltas = list(range(1, n + 1)) if deltas is None else list(deltas)
    if construction == "eimp":
        s = _sigma(ctx, v_policy)[1:]
    elif construction == "cfim":
        s = dual_sigma(ctx, v_policy)[1:]
    elif construction == "ek":
        fr = feng_rao_sigma(ctx)[1:]
        run = np.minimum.accumulate(fr)
        return [(d, int(np.count_nonzero(run >= d))) for d in deltas]
    else:
        raise ValueError(f"unknown construction {construction!r}; choose from {CONSTRUCTIONS}")
    return [(d, int(np.count_nonzero(s >= d))) for d in deltas]


def best_codes(table: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """For each dimension, the largest designed distance reached (the [n,k,>=d] list)."""
    best: dict[int, int] = {}
    for d, k in table:
        if k and d > best.get(k, 0):
            best[k] = d
    return sorted(best.items())


def series_csv(series: Mapping[str, tuple[int, Sequence[tuple[int, int]]]]) -> str:
    """Rows (series, delta, k, n, delta/n, k/n) for plotting."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["series", "delta", "k", "n", "delta_over_n", "k_over_n"])
    for label, (n, rows) in series.items():
        for d, k in rows:
            w.writerow([label, d, k, n, f"{d / n:.6f}", f"{k / n:.6f}"])
    return buf.getvalue()
