import pytest

from cabcodes.bounds import BoundContext
from cabcodes.cabgen import build_generalized_cab, coset_polynomial, cyclotomic_cosets, norm_polynomial, trace_polynomial
from cabcodes.field import make_field
from cabcodes.groebner import IdealSpec
from cabcodes.polyalg import WeightedOrder, parse_poly

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3)


@pytest.fixture(scope="session")
def exord(gf4):
    """<X^2+X-Y^3> over GF(4), w = (3, 2)."""
    ideal = IdealSpec(gf4, [parse_poly("X^2+X-Y^3", gf4, 2)])
    return BoundContext.from_ideal(ideal, WeightedOrder((3, 2)))


@pytest.fixture(scope="session")
def mot_spec(gf8):
    return build_generalized_cab(trace_polynomial(gf8), coset_polynomial(cyclotomic_cosets(2, 3), 3, gf8))


@pytest.fixture(scope="session")
def exmot(mot_spec):
    return BoundContext.from_cab(mot_spec)


@pytest.fixture(scope="session")
def nt8_spec(gf8):
    return build_generalized_cab(trace_polynomial(gf8), norm_polynomial(gf8))


@pytest.fixture(scope="session")
def nt8(nt8_spec):
    return BoundContext.from_cab(nt8_spec)


@pytest.fixture(scope="session")
def klein(gf8):
    ideal = IdealSpec(gf8, [parse_poly("X^3Y+Y^3+X", gf8, 2)])
    return BoundContext.from_ideal(ideal, WeightedOrder((2, 3)))
