import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrea.errors import DomainError, ModeMismatch, NonInvertible
from qrea.scalars import (
    ONE,
    Q,
    QINV,
    QQI,
    ZERO,
    GaussRational,
    LaurentScalar,
    laurent,
    parse_laurent,
    qpow,
    scalar_arith,
    scalar_eval,
    unimodular_point,
)


def test_additive_inverse_cancels():
    a = QINV - Q          # q^{-1} - q
    b = Q - QINV
    assert (a + b).is_zero()


def test_difference_of_squares():
    a = ONE - qpow(2)
    b = ONE + qpow(2)
    assert a * b == ONE - qpow(4)


def test_monomial_inverse():
    assert qpow(2).inv() == qpow(-2)
    assert laurent(Fraction(3, 2), 5).inv() == laurent(Fraction(2, 3), -5)
    with pytest.raises(NonInvertible):
        (ONE + Q).inv()


def test_eval_examples():
    assert scalar_eval(qpow(-2), Fraction(1, 2)) == 4.0
    assert scalar_eval(Q - QINV, 0.5) == -1.5
    assert scalar_eval(ZERO, 0.3) == 0.0
    with pytest.raises(DomainError):
        scalar_eval(Q, 1.5)
    with pytest.raises(DomainError):
        scalar_eval(Q, 0.0)


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        Q + 0.5
    with pytest.raises(ModeMismatch):
        0.5 * Q
    with pytest.raises(ModeMismatch):
        scalar_arith(Q, 1.0 + 0j, "add")
    assert scalar_arith(2.0, 3.0, "mul") == 6.0
    assert scalar_arith(Q, QINV, "mul") == ONE
    assert scalar_arith(Q, None, "inv") == QINV


def test_pow_and_div():
    assert QQI ** 2 == QQI * QQI
    assert (Q ** -3) == qpow(-3)
    assert (qpow(4) / qpow(2)) == qpow(2)


def test_divide_exact():
    p = QQI * (ONE + Q + qpow(2))
    assert p.divide_exact(QQI) == ONE + Q + qpow(2)
    assert (ONE + Q).divide_exact(QQI) is None
    assert ZERO.divide_exact(QQI) == ZERO


scalars = st.builds(
    lambda pairs: LaurentScalar({k: Fraction(n, d) for (k, n, d) in pairs}),
    st.lists(
        st.tuples(
            st.integers(-20, 20),
            st.integers(-30, 30),
            st.integers(1, 12),
        ),
        max_size=6,
    ),
)


@settings(max_examples=200, deadline=None)
@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a
    assert a + ZERO == a


def _norm1(a, q0):
    return sum(abs(complex(c)) * q0 ** k for k, c in a.terms.items())


@settings(max_examples=200, deadline=None)
@given(scalars, scalars)
def test_eval_is_ring_hom(a, b):
    q0 = 0.37
    lhs = (a * b).eval(q0)
    rhs = a.eval(q0) * b.eval(q0)
    scale = max(1.0, _norm1(a, q0) * _norm1(b, q0))
    assert abs(lhs - rhs) <= 1e-13 * scale
    add_scale = max(1.0, _norm1(a, q0) + _norm1(b, q0))
    assert abs((a + b).eval(q0) - (a.eval(q0) + b.eval(q0))) <= 1e-13 * add_scale


@settings(max_examples=200, deadline=None)
@given(scalars)
def test_render_parse_roundtrip(a):
    assert parse_laurent(a.render()) == a


def test_render_examples():
    assert (Q - QINV).render() == "-q^-1 + q"
    assert ZERO.render() == "0"
    assert laurent(Fraction(3, 2), -2).render() == "3/2*q^-2"
    assert parse_laurent("1 - 2*q^3 + 3/2*q^-2") == ONE - laurent(2, 3) + laurent(Fraction(3, 2), -2)


def test_gauss_rational():
    y = unimodular_point(Fraction(1, 2))
    assert y.is_unimodular()
    assert y * y.conjugate() == 1
    z = laurent(y, 2)
    assert z.conjugate() == laurent(y.conjugate(), 2)
    v = complex(y)
    assert math.isclose(abs(v), 1.0)
    # collapses to Fraction when imaginary part cancels
    assert isinstance(y * y.conjugate(), Fraction)
    s = GaussRational(1, 1) + GaussRational(1, -1)
    assert isinstance(s, Fraction) and s == 2


def test_gauss_render_parse():
    y = unimodular_point(Fraction(1, 3))
    a = laurent(y, 1) + ONE
    assert parse_laurent(a.render()) == a
