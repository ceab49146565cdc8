import pytest

from cabcodes.cabgen import (
    build_generalized_cab,
    cab_from_polynomial,
    coset_polynomial,
    cyclotomic_cosets,
    fiber_counts,
    is_balanced,
    is_balanced_by_counting,
    is_subfield_valued,
    norm_polynomial,
    optimal_gb,
    optimal_pairs,
    trace_polynomial,
)
from cabcodes.errors import EqualDegrees, NotARepresentative, WeightViolation
from cabcodes.field import make_field
from cabcodes.groebner import footprint, is_groebner
from cabcodes.polyalg import MultiPoly, parse_poly


def _sets(table):
    return [set(c) for c in table.cosets if c != (0,)]


def test_cosets():
    assert _sets(cyclotomic_cosets(2, 3)) == [{1, 2, 4}, {3, 6, 5}]
    assert _sets(cyclotomic_cosets(2, 4)) == [{1, 2, 4, 8}, {3, 6, 12, 9}, {5, 10}, {7, 14, 13, 11}]
    assert [set(c) for c in cyclotomic_cosets(2, 2).cosets] == [{0}, {1, 2}]
    for m in (3, 4, 5):
        t = cyclotomic_cosets(2, m)
        flat = sorted(x for c in t.cosets for x in c)
        assert flat == list(range(t.n))
        assert all({(x * 2) % t.n for x in c} == set(c) for c in t.cosets)
    with pytest.raises(NotARepresentative):
        cyclotomic_cosets(2, 4).coset(6)


def test_coset_polynomials():
    F8, F32 = make_field(2, 3), make_field(2, 5)
    t3, t5 = cyclotomic_cosets(2, 3), cyclotomic_cosets(2, 5)
    assert coset_polynomial(t3, 1, F8).format() == "X^4+X^2+X"
    assert coset_polynomial(t3, 3, F8).format() == "X^6+X^5+X^3"
    assert coset_polynomial(t5, 5, F32).format() == "X^20+X^18+X^10+X^9+X^5"
    assert coset_polynomial(t5, 11, F32).format() == "X^26+X^22+X^21+X^13+X^11"


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_coset_polynomials_are_subfield_valued(m):
    F = make_field(2, m)
    t = cyclotomic_cosets(2, m)
    for r in t.representatives():
        assert is_subfield_valued(coset_polynomial(t, r, F))
    assert is_subfield_valued(MultiPoly(F, 1, {(F.q - 1,): 1}))
    assert not is_subfield_valued(MultiPoly(F, 1, {(1,): 1}))


def test_balanced_flags():
    t8, t16, t32 = (cyclotomic_cosets(2, m) for m in (3, 4, 5))
    assert is_balanced(t8, 1) and is_balanced(t8, 3)
    assert [r for r in t16.representatives() if r and is_balanced(t16, r)] == [1, 7]
    assert all(is_balanced(t32, r) for r in (1, 3, 5, 7, 11, 15))


@pytest.mark.parametrize("p,m", [(2, 3), (2, 4), (2, 5), (3, 2)])
def test_balanced_criterion_matches_fiber_counts(p, m):
    F = make_field(p, m)
    t = cyclotomic_cosets(p, m)
    for r in t.representatives():
        if r:
            assert is_balanced(t, r) == is_balanced_by_counting(coset_polynomial(t, r, F))


def test_build_examples():
    F8, F32 = make_field(2, 3), make_field(2, 5)
    t3, t5 = cyclotomic_cosets(2, 3), cyclotomic_cosets(2, 5)
    s = build_generalized_cab(trace_polynomial(F8), coset_polynomial(t3, 3, F8))
    assert (s.a, s.b, s.wX, s.wY, s.n, s.optimal) == (4, 6, 3, 2, 32, True)
    nt = build_generalized_cab(trace_polynomial(F8), norm_polynomial(F8))
    assert (nt.a, nt.b, nt.wX, nt.wY, nt.optimal) == (4, 7, 7, 4, True)
    d = build_generalized_cab(coset_polynomial(t5, 5, F32), coset_polynomial(t5, 11, F32))
    assert (d.a, d.b, d.zeros, d.optimal) == (20, 26, 512, False)


def test_build_errors():
    F8 = make_field(2, 3)
    with pytest.raises(EqualDegrees):
        build_generalized_cab(trace_polynomial(F8), trace_polynomial(F8))
    with pytest.raises(WeightViolation):
        build_generalized_cab(trace_polynomial(F8), MultiPoly(F8, 1, {(7,): 1, (0,): 1}) - MultiPoly(F8, 1, {(7,): 1}))
    with pytest.raises(WeightViolation):
        cab_from_polynomial(parse_poly("X^4+X^2*Y^3+Y^6", F8, 2))


@pytest.mark.parametrize("m", [3, 4])
def test_trace_gives_p_2m_minus_1_zeros(m):
    F = make_field(2, m)
    t = cyclotomic_cosets(2, m)
    G = trace_polynomial(F)
    hs = [coset_polynomial(t, r, F) for r in t.representatives() if r] + [norm_polynomial(F)]
    for H in hs:
        if H.degree() == G.degree():
            continue
        assert build_generalized_cab(G, H, F).zeros == 2 ** (2 * m - 1)


def test_optimal_pairs_and_their_groebner_bases():
    assert [(s.a, s.b) for s in optimal_pairs(make_field(2, 3))] == [(4, 6), (4, 7)]
    assert [(s.a, s.b) for s in optimal_pairs(make_field(2, 4))] == [(8, 10), (8, 12), (8, 14), (8, 15)]
    assert [s.b for s in optimal_pairs(make_field(2, 5))] == [20, 24, 26, 28, 30, 31]
    for s in optimal_pairs(make_field(2, 4)):
        gb = optimal_gb(s)
        assert is_groebner(gb, s.order)
        fp = footprint(gb, s.order)
        assert set(fp.monomials) == {(i, j) for i in range(s.a) for j in range(s.field.q)}


def test_fiber_counts_of_trace():
    assert fiber_counts(trace_polynomial(make_field(2, 4))) == {0: 8, 1: 8}
