import pytest
from hypothesis import given, strategies as st

from qfock.laurent import (
    AsymmetryError,
    LaurentPoly,
    ONE,
    Q,
    ZERO,
    antisym_positive_part,
    bar,
    derivative_at_one,
    quantum_ratio_even,
    quantum_ratio_odd,
)

QI = Q.bar()

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPoly)
pos_polys = st.dictionaries(st.integers(1, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_arithmetic_examples():
    assert (Q + QI) * (Q - QI) == Q ** 2 - QI ** 2
    f = LaurentPoly({3: 2, -1: 1})
    assert f + ZERO == f
    assert (Q - 1) ** 2 == Q ** 2 - 2 * Q + 1
    assert 3 * f == f + f + f
    assert f - f == ZERO and not (f - f)


def test_no_zero_coefficients_stored():
    assert LaurentPoly({1: 0, 2: 3}).coeffs == {2: 3}
    assert (Q - Q).coeffs == {}


def test_bar_and_derivative_examples():
    assert bar(Q ** 2) == QI ** 2
    assert bar(1 + Q) == 1 + QI
    assert derivative_at_one(Q ** 2) == 2
    assert derivative_at_one(QI) == -1
    assert derivative_at_one(LaurentPoly.const(7)) == 0


def test_antisym_positive_part_examples():
    assert antisym_positive_part(Q ** 2 - QI ** 2) == Q ** 2
    assert antisym_positive_part(3 * Q - 3 * QI) == 3 * Q
    with pytest.raises(AsymmetryError):
        antisym_positive_part(Q + 1)
    with pytest.raises(AsymmetryError):
        antisym_positive_part(Q + QI)


@pytest.mark.parametrize("i", range(0, 7))
def test_quantum_ratio_expansions(i):
    qq = Q + QI
    assert quantum_ratio_even(i) * qq == Q ** (2 * i) - QI ** (2 * i)
    assert quantum_ratio_odd(i) * qq == Q ** (2 * i + 1) + QI ** (2 * i + 1)


@pytest.mark.parametrize("f, text", [
    (ZERO, "0"),
    (ONE, "1"),
    (LaurentPoly({-1: -1, 0: 2, 3: 1}), "-q^-1 + 2 + q^3"),
    (LaurentPoly({1: -3, 2: 1}), "-3q^1 + q^2"),
    (LaurentPoly({-2: 1, 0: -1}), "q^-2 - 1"),
])
def test_string_form(f, text):
    assert str(f) == text
    assert LaurentPoly.parse(text) == f


def test_parse_accepts_unicode_minus():
    assert LaurentPoly.parse("−q^−1 + 2 + q^3") == LaurentPoly({-1: -1, 0: 2, 3: 1})
    with pytest.raises(ValueError):
        LaurentPoly.parse("q^^2")


def test_latex_form():
    assert LaurentPoly({2: 1, 1: -2}).to_latex() == "q^{2}-2q"
    assert LaurentPoly({0: 1}).to_latex() == "1"


@given(polys, polys)
def test_bar_is_multiplicative(f, g):
    assert bar(f * g) == bar(f) * bar(g)
    assert bar(bar(f)) == f


@given(polys, polys)
def test_derivative_leibniz(f, g):
    assert derivative_at_one(f * g) == f.at_one() * derivative_at_one(g) + g.at_one() * derivative_at_one(f)


@given(pos_polys)
def test_antisym_roundtrip(p):
    assert antisym_positive_part(p - bar(p)) == p


@given(polys)
def test_string_roundtrip(f):
    assert LaurentPoly.parse(str(f)) == f


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
