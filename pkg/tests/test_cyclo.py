from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreathsph.cyclo import CycNum, ONE, ZERO, canonicalize, cyc, parse_cyc, zeta

ROOT2_I = cyc(8, {1: 1, 3: 1})  # the value whose square is -2


def test_canonicalize_cancellation():
    assert cyc(4, {1: 1, 3: 1}) == ZERO
    assert cyc(4, {1: 1, 3: 1}).is_zero()


def test_canonicalize_examples():
    assert ROOT2_I.conductor == 8
    assert ROOT2_I * ROOT2_I == CycNum.rational(-2)
    x = cyc(1, {0: Fraction(5, 3)})
    assert x.conductor == 1 and x.try_rational() == Fraction(5, 3)


def test_conductor_requires_positive():
    with pytest.raises(ValueError):
        canonicalize(0, {0: Fraction(1)})


def test_arith_examples():
    assert ROOT2_I + ROOT2_I.conjugate() == ZERO
    assert ROOT2_I * ONE == ROOT2_I
    assert zeta(4) * zeta(4) == CycNum.rational(-1)


def test_conjugate_examples():
    assert CycNum.rational(Fraction(7, 2)).conjugate() == CycNum.rational(Fraction(7, 2))
    assert ROOT2_I.conjugate() == cyc(8, {5: 1, 7: 1})
    assert ROOT2_I.conjugate() == -ROOT2_I


def test_try_rational():
    assert CycNum.rational(-2).try_rational() == -2
    assert ROOT2_I.try_rational() is None
    assert cyc(3, {1: 1, 2: 1}).try_rational() == -1


def test_embedding_roundtrip():
    # the same value written at twice the conductor canonicalizes back
    assert cyc(16, {2: 1, 6: 1}) == ROOT2_I
    assert cyc(8, {2: 1}) == zeta(4)
    assert cyc(12, {2: 1}) == zeta(6)


def test_rationals_live_at_conductor_one():
    x = zeta(5) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)
    assert x.conductor == 1 and x.try_rational() == -1


def test_inverse_examples():
    x = CycNum.rational(Fraction(3, 7)) * zeta(12, 5)
    assert x * x.inverse() == ONE
    assert CycNum.rational(Fraction(-5, 2)).inverse() == CycNum.rational(Fraction(-2, 5))
    assert ROOT2_I * ROOT2_I.inverse() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_parse_roundtrip_examples():
    for text in ("0", "-2", "5/3", "z(8) + z(8)^3", "1/2 - 3/2*z(5)^4 + z(5)"):
        v = parse_cyc(text)
        assert parse_cyc(str(v)) == v
    with pytest.raises(ValueError):
        parse_cyc("z(8)^^2")
    with pytest.raises(ValueError):
        parse_cyc("")


small_rationals = st.fractions(
    min_value=-3, max_value=3, max_denominator=4
)


@st.composite
def cycnums(draw):
    n = draw(st.sampled_from((1, 3, 4, 5, 8, 12)))
    size = draw(st.integers(0, 3))
    coeffs = {
        draw(st.integers(0, n - 1)): draw(small_rationals) for _ in range(size)
    }
    return cyc(n, coeffs)


@given(cycnums(), cycnums(), cycnums())
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a + (-a) == ZERO


@given(cycnums(), cycnums())
@settings(max_examples=60, deadline=None)
def test_conjugation_is_ring_hom_and_involution(a, b):
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


@given(cycnums())
@settings(max_examples=60, deadline=None)
def test_double_conductor_roundtrip(a):
    lifted = cyc(2 * a.conductor, {2 * k: v for k, v in a.coeffs.items()})
    assert lifted == a


@given(cycnums())
@settings(max_examples=60, deadline=None)
def test_text_form_roundtrip(a):
    assert parse_cyc(str(a)) == a


@given(st.sampled_from((1, 2, 3, 4, 5, 6, 8, 12)), st.integers(0, 11), small_rationals)
@settings(max_examples=60, deadline=None)
def test_unit_inverses(n, k, c):
    if c == 0:
        return
    x = CycNum.rational(c) * zeta(n, k % n)
    assert x * x.inverse() == ONE


@given(st.lists(st.tuples(cycnums(), cycnums(), st.integers(-3, 3)), max_size=5))
@settings(max_examples=40, deadline=None)
def test_sum_products_matches_naive(items):
    from wreathsph.cyclo import sum_products

    naive = ZERO
    for a, b, w in items:
        naive = naive + a * b * Fraction(w)
    assert sum_products(items) == naive
