import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pasep2.qseries import (
    ONE,
    Q,
    ZERO,
    NotDivisible,
    QPoly,
    YQPoly,
    div_exact,
    eval_rational,
    parse_rational,
    qfactorial,
    qint,
)

polys = st.lists(st.integers(-50, 50), max_size=6).map(QPoly)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, rationals)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert eval_rational(a, x) == sum(Fraction(c) * x**i for i, c in enumerate(a.coeffs))


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_div_exact_inverts_multiplication(a, b):
    assert div_exact(a * b, b) == a


def test_div_exact_rejects_remainder():
    with pytest.raises(NotDivisible):
        div_exact(qint(3), qint(2))
    with pytest.raises(ZeroDivisionError):
        div_exact(ONE, ZERO)


@pytest.mark.parametrize("n", range(1, 9))
def test_qint_and_qfactorial(n):
    assert qint(n) == QPoly([1] * n)
    assert qfactorial(n) == qfactorial(n - 1) * qint(n)
    assert qfactorial(n)(1) == math.factorial(n)
    # q-integers at q = 1/2 are a geometric sum
    assert qint(n)(Fraction(1, 2)) == 2 - Fraction(1, 2 ** (n - 1))


def test_rendering():
    assert str(ONE + Q) == "1 + q"
    assert str((ONE + Q) ** 2) == "1 + 2q + q^2"
    assert str(ZERO) == "0"
    assert str(QPoly([0, -3, 0, 1])) == "-3q + q^3"


@given(st.lists(st.integers(-(10**30), 10**30), max_size=8).map(QPoly))
def test_json_round_trip_keeps_big_integers(p):
    assert QPoly.from_json(p.to_json()) == p


def test_parse_rational():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational(" 3 ") == 3
    assert parse_rational("0.25") == Fraction(1, 4)
    for bad in ("x", "1/0", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_yqpoly_tracks_y_degree():
    y = YQPoly({1: ONE})
    s = YQPoly({0: ONE}) + y
    sq = s * s
    assert sq.coeff(0) == ONE
    assert sq.coeff(1) == QPoly([2])
    assert sq.coeff(2) == ONE
    assert sq.coeff(5) == ZERO


def test_copy_and_pickle_keep_value():
    import copy
    import pickle

    p = QPoly([3, 0, -2])
    assert copy.deepcopy(p) is p
    assert pickle.loads(pickle.dumps(p)) == p
