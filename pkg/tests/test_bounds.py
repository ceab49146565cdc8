import itertools
import json
import math

import numpy as np
import pytest

from cabcodes import bounds as B
from cabcodes.cabgen import optimal_pairs
from cabcodes.codes import evaluation_matrix
from cabcodes.errors import BadRange, BadV, EqualIndices, ExclusionOutOfRange, IndexNotInSupport
from cabcodes.field import make_field
from cabcodes.oracle import true_ghw2, true_min_distance
from cabcodes.polyalg import MultiPoly, reduce


def test_exord_footprint_and_feng_rao(exord):
    assert exord.fp.as_text() == ["1", "Y", "X", "Y^2", "X*Y", "Y^3", "X*Y^2", "X*Y^3"]
    assert list(exord.fp.weights) == [0, 2, 3, 4, 5, 6, 7, 9]
    assert B.feng_rao_bound(exord, exord.index("X")) == 5
    assert B.feng_rao_bound(exord, 1) == exord.n


def test_owb_examples(exord, exmot):
    x = exord.index("X")
    for other in ["1", "Y", "Y^2", "Y^3", "X"]:
        assert B.is_owb(exord, x, exord.index(other))
    assert not B.is_owb(exmot, exmot.index("X^3"), exmot.index("X"))
    for j in range(1, exmot.n + 1):
        assert B.is_owb(exmot, 1, j)


def test_sowb_examples(exmot, klein):
    i, j = klein.index("Y^2"), klein.index("X^5")
    assert B.is_sowb(klein, i, j, range(1, 8))
    assert klein.fp.monomial(klein.rem_lm_index(i, j)) == (2, 4)

    i, j = exmot.index("X^3"), exmot.index("X")
    assert exmot.index("X*Y^3") == 11
    support = set(range(1, 13)) - {11}
    assert B.is_sowb(exmot, i, j, support)
    assert not B.is_sowb(exmot, i, j, range(1, 13))
    assert exmot.fp.monomial(exmot.rem_lm_index(i, j)) == (0, 6)

    for j in range(1, klein.n + 1):
        assert B.is_sowb(klein, 5, j, {5})
    with pytest.raises(IndexNotInSupport):
        B.is_sowb(klein, 5, 1, {1, 2})


def test_natural_v(exmot, klein):
    assert B.natural_v(exmot, exmot.index("X^3")) == 1
    assert B.natural_v(klein, klein.index("X^3")) == 1
    assert B.natural_v(klein, 1) == 0


def test_motivating_new_bound(exmot):
    i = exmot.index("X^3")
    assert B.feng_rao_bound(exmot, i) == 10
    nb = B.new_bound(exmot, i, 1)
    assert nb.cards == [13, 14]
    assert nb.bound == 13


def test_klein_exclusion(klein):
    i = klein.index("X^3")
    nb = B.new_bound(klein, i, 1)
    assert nb.cards[1] == 13
    excl = B.new_bound(klein, i, 1, {klein.index("Y^2")})
    assert excl.cards == [None, 13]
    assert excl.bound == 13


@pytest.mark.xfail(strict=True, reason="#L(1) is 7: (Y^2, X^6) also reaches Y^6")
def test_klein_first_case_is_six(klein):
    assert B.new_bound(klein, klein.index("X^3"), 1).cards[0] == 6


def test_klein_first_case_members(klein):
    i = klein.index("X^3")
    first = B.case_sets(klein, i, 1)[0]
    got = sorted(klein.fp.monomial(k) for k in first.members())
    assert got == sorted([(3, 0), (4, 0), (5, 0), (6, 0), (7, 0), (2, 4), (0, 6)])


def test_new_bound_errors(klein):
    with pytest.raises(BadV):
        B.new_bound(klein, 3, 3)
    with pytest.raises(ExclusionOutOfRange):
        B.new_bound(klein, 3, 1, {3})
    with pytest.raises(BadV):
        B.resolve_v(klein, 3, "largest")


@pytest.mark.parametrize("name", ["exord", "exmot", "klein", "nt8"])
def test_v_zero_is_feng_rao(name, request):
    ctx = request.getfixturevalue(name)
    for i in range(1, ctx.n + 1):
        assert B.new_bound(ctx, i, 0).bound == B.feng_rao_bound(ctx, i)


def test_exclusion_monotone(klein):
    rng = np.random.default_rng(7)
    for i in range(2, klein.n + 1):
        v = B.natural_v(klein, i)
        small = set(int(s) for s in rng.choice(np.arange(1, i), size=rng.integers(0, i), replace=False))
        extra = set(int(s) for s in rng.choice(np.arange(1, i), size=rng.integers(0, i), replace=False))
        for vv in range(v + 1):
            a = B.new_bound(klein, i, vv, small).bound
            b = B.new_bound(klein, i, vv, small | extra).bound
            assert b >= a


def test_min_distance_bound_klein(klein):
    assert B.min_distance_bound(klein, range(1, 7)).bound == 11
    rep = B.min_distance_bound(klein, [1, 2, 3, 4, 5, 7], excl_map={7: {6}})
    assert rep.bound == 12
    assert B.min_distance_bound(klein, [1, 2, 3, 4, 5, 7], excl_map="auto").bound == 12
    assert B.min_distance_bound(klein, [1]).bound == klein.n
    with pytest.raises(ValueError):
        B.min_distance_bound(klein, [])


def test_report_exports(klein):
    rep = B.min_distance_bound(klein, [1, 2, 3, 4, 5, 7], excl_map="auto")
    data = json.loads(rep.to_json())
    assert data["bound"] == 12
    row = rep.by_index()[7]
    assert row.monomial == "X^3" and row.v == 1 and row.cards == [None, 13]
    assert all(r.value == min(c for c in r.cards if c is not None) for r in rep.rows)
    lines = rep.to_csv().splitlines()
    assert lines[0] == "i,monomial,weight,v,cards,sigma"
    assert "7,X^3,6,1,-;13,13" in lines


@pytest.mark.parametrize("name", ["exord", "exmot", "klein"])
def test_witnesses_verify(name, request):
    ctx = request.getfixturevalue(name)
    for i in range(2, ctx.n + 1, 3):
        v = B.natural_v(ctx, i)
        excl = {1} if i > 2 and v < i - 1 else set()
        sets = B.case_sets(ctx, i, v, excl, with_witnesses=True)
        assert B.verify_witnesses(ctx, sets, i, v, excl)


def test_rem_lm_matches_division(exmot, klein):
    rng = np.random.default_rng(3)
    for ctx in (exmot, klein):
        for _ in range(40):
            i, j = (int(x) for x in rng.integers(1, ctx.n + 1, size=2))
            prod = MultiPoly.monomial(ctx.field, ctx.fp.monomial(i)) * MultiPoly.monomial(ctx.field, ctx.fp.monomial(j))
            rem = reduce(prod, ctx.gb, ctx.order)
            expect = 0 if rem.is_zero() else ctx.fp.index(rem.leading_monomial(ctx.order))
            assert ctx.rem_lm_index(i, j) == expect


def _dense_products(ctx, j):
    """Normal forms of M_s * M_j for all s, by plain division."""
    out = np.zeros((ctx.n, ctx.n), dtype=np.int64)
    Mj = MultiPoly.monomial(ctx.field, ctx.fp.monomial(j))
    for s in range(1, ctx.n + 1):
        rem = reduce(MultiPoly.monomial(ctx.field, ctx.fp.monomial(s)) * Mj, ctx.gb, ctx.order)
        for mono, c in rem.terms.items():
            out[s - 1, ctx.fp.index(mono) - 1] = c
    return out


def _lm_stable(ctx, i, j, support, dense):
    """Every H = M_i + sum over support of c_s M_s keeps lm(H M_j rem G)."""
    F = ctx.field
    target = ctx.rem_lm_index(i, j)
    if target == 0:
        return False
    others = sorted(s for s in support if s != i)
    for coeffs in itertools.product(range(F.q), repeat=len(others)):
        acc = dense[i - 1].copy()
        for s, c in zip(others, coeffs):
            if c:
                acc = F.vadd(acc, F.vmul(np.full(ctx.n, c), dense[s - 1]))
        nz = np.flatnonzero(acc)
        if nz.size == 0 or nz[-1] + 1 != target:
            return False
    return True


def test_owb_against_exhaustive_search(exord):
    for j in range(1, exord.n + 1):
        dense = _dense_products(exord, j)
        for i in range(1, 7):
            assert B.is_owb(exord, i, j) == _lm_stable(exord, i, j, range(1, i), dense), (i, j)


def test_sowb_against_exhaustive_search(exord):
    rng = np.random.default_rng(11)
    for j in range(1, exord.n + 1):
        dense = _dense_products(exord, j)
        for _ in range(6):
            i = int(rng.integers(1, exord.n + 1))
            others = [int(s) for s in rng.choice(exord.n, size=min(4, exord.n - 1), replace=False) + 1 if s != i]
            support = set(others) | {i}
            assert B.is_sowb(exord, i, j, support) == _lm_stable(exord, i, j, support, dense)


def test_closed_form_examples():
    assert B.closed_form_bound(4, 6, 8, 3, 0) == 13
    assert B.closed_form_epsilon(4, 6, 8, 3, 0) == 5
    for a2 in range(8 - 6, 8):
        assert B.closed_form_bound(4, 6, 8, 1, a2) == 3 * (8 - a2)
    assert B.closed_form_bound(4, 6, 8, 0, 0) == 32
    assert B.closed_form_bound(8, 10, 16, 0, 0) == 128
    with pytest.raises(BadRange):
        B.closed_form_bound(4, 6, 8, 4, 0)
    with pytest.raises(BadRange):
        B.closed_form_bound(6, 4, 8, 1, 0)


def _optimal_instances():
    for m in (3, 4):
        yield from optimal_pairs(make_field(2, m))


@pytest.mark.parametrize("spec", list(_optimal_instances()), ids=lambda s: f"q{s.field.q}-{s.a}-{s.b}")
def test_closed_form_against_generic(spec):
    ctx = B.BoundContext.from_cab(spec)
    a, b, q = spec.a, spec.b, spec.field.q
    g = math.gcd(a, b)
    wY = a // g
    for i in range(1, ctx.n + 1):
        a1, a2 = ctx.fp.monomial(i)
        cf = B.closed_form_bound(a, b, q, a1, a2)
        assert B.closed_form_audit(a, b, q, a1, a2) == cf
        assert B.new_bound(ctx, i).bound >= cf
        # B-set inclusions, with v = a1 div w(Y)
        v = min(a1 // wY, i - 1)
        sets = {cs.t: set(cs.members()) for cs in B.case_sets(ctx, i, v)}
        bs = B.b_sets(a, b, q, a1, a2)
        idx = lambda S: {ctx.fp.index(mono) for mono in S}
        b12 = idx(bs["B1"]) | idx(bs["B2"])
        assert len(bs["B1"]) == B.b1_card(a, b, q, a1, a2)
        assert len(bs["B2"]) == B.b2_card(a, b, q, a1, a2)
        assert not bs["B1"] & bs["B2"]
        for u in range(1, g + 1):
            assert len(bs["B3"][u]) == B.b3_card(a, b, q, a1, a2, u)
            assert not bs["B1"] & bs["B3"][u]
            if bs["B3"][u]:
                assert bs["B2"] <= bs["B3"][u]
        for u in range(1, v + 2):
            assert b12 <= sets[u]
        assert idx(bs["B3"][g]) <= sets[v + 1]
        for u in range(1, min(v, g) + 1):
            assert idx(bs["B3"][u]) <= sets[u]


def test_closed_form_gap_motivating(mot_spec, exmot):
    for i in range(1, exmot.n + 1):
        a1, a2 = exmot.fp.monomial(i)
        assert B.new_bound(exmot, i).bound == B.closed_form_bound(4, 6, 8, a1, a2)


def test_ghw2_degenerate_grid(exord):
    i1, i2 = exord.index("X"), exord.index("X*Y")
    union = B.feng_rao_set(exord, i1) | B.feng_rao_set(exord, i2)
    assert B.ghw2_bound(exord, i1, i2, 0, 0) == int(union.sum())
    with pytest.raises(EqualIndices):
        B.ghw2_bound(exord, 3, 3)


def test_ghw2_dominates_each_pivot(exord):
    for i1, i2 in itertools.combinations(range(2, exord.n + 1), 2):
        v1, v2 = B.natural_v(exord, i1), B.natural_v(exord, i2)
        g = B.ghw2_bound(exord, i1, i2, v1, v2)
        assert g >= max(B.new_bound(exord, i1, v1).bound, B.new_bound(exord, i2, v2).bound)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_ghw2_below_truth(exord, k):
    E = evaluation_matrix(exord)
    G = E[:k]
    assert B.ghw2_code_bound(exord, range(1, k + 1)) <= true_ghw2(exord.field, G)
    assert B.min_distance_bound(exord, range(1, k + 1)).bound <= true_min_distance(exord.field, G)
