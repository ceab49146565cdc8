import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cabcodes.errors import DivisionByZero, MixedFields, NonPrimeBase, SizeExceeded
from cabcodes.field import eval_univariate, is_irreducible, make_field, parse_field

FIELDS = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3)]


def test_sizes_and_moduli():
    assert make_field(2, 3).q == 8
    assert make_field(2, 1).q == 2
    f27 = make_field(3, 3)
    assert f27.q == 27
    # least monic irreducible cubic over GF(2) is X^3+X+1
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    for p, m in FIELDS:
        assert is_irreducible(make_field(p, m).modulus, p)


def test_errors():
    with pytest.raises(NonPrimeBase):
        make_field(4, 2)
    with pytest.raises(SizeExceeded):
        make_field(2, 21)
    f = make_field(2, 3)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    with pytest.raises(MixedFields):
        f.element(1) + make_field(2, 2).element(1)


def test_parse_field():
    assert parse_field("2^5").q == 32
    assert parse_field("7").q == 7


def test_multiplicative_order_gf8():
    f = make_field(2, 3)
    for a in range(1, 8):
        assert f.pow(a, 7) == 1
    # the primitive element generates everything
    assert {f.pow(f.generator, e) for e in range(7)} == set(range(1, 8))


@pytest.mark.parametrize("p,m", FIELDS)
def test_table_axioms(p, m):
    f = make_field(p, m)
    a = np.arange(f.q)
    A, Bm = np.meshgrid(a, a, indexing="ij")
    S = f.vadd(A, Bm)
    P = f.vmul(A, Bm)
    assert np.array_equal(S, S.T) and np.array_equal(P, P.T)
    assert np.array_equal(f.vadd(a, 0), a)
    assert np.array_equal(f.vmul(a, 1), a)
    nz = a[1:]
    assert np.all(f.vmul(nz, f.vinv(nz)) == 1)
    assert np.all(f.vadd(a, f.vneg(a)) == 0)
    # every row of the multiplication table on nonzero elements is a permutation
    assert all(sorted(P[x, 1:]) == list(range(1, f.q)) for x in range(1, f.q))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_field_laws(pm, x, y, z):
    f = make_field(*pm)
    a, b, c = (v % f.q for v in (x, y, z))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.sub(f.add(a, b), b) == a
    if b:
        assert f.mul(f.div(a, b), b) == a


def test_element_wrapper():
    f = make_field(2, 3)
    x = f.element(2)
    assert (x * x.inverse()) == 1
    assert x + 0 == x
    assert x ** 7 == 1
    assert len(f.enumerate()) == 8
    assert x.coeffs == (0, 1, 0)


def test_trace_values_lie_in_prime_field():
    f = make_field(2, 3)
    vals = [eval_univariate([0, 1, 1, 0, 1], g, f).value for g in range(8)]
    assert sorted(vals) == [0] * 4 + [1] * 4
